//! Multi-games: several basic games played simultaneously, with each
//! player's payoff the convex combination of its basic-game payoffs under
//! per-player investment weights.

use crate::error::{Error, Result};
use crate::game::NormalFormGame;
use crate::rational::Rational;

/// An ordered list of basic games sharing one player set.
#[derive(Clone, Debug)]
pub struct MultiGame {
    games: Vec<NormalFormGame>,
}

impl MultiGame {
    pub fn new(games: Vec<NormalFormGame>) -> Result<Self> {
        if games.is_empty() {
            return Err(Error::InvalidGame("a multi-game needs at least one basic game".into()));
        }
        let n = games[0].num_players();
        if games.iter().any(|g| g.num_players() != n) {
            return Err(Error::InvalidGame(
                "all basic games of a multi-game must have the same player count".into(),
            ));
        }
        Ok(MultiGame { games })
    }

    pub fn num_games(&self) -> usize {
        self.games.len()
    }

    pub fn num_players(&self) -> usize {
        self.games[0].num_players()
    }

    pub fn basic_games(&self) -> &[NormalFormGame] {
        &self.games
    }

    /// A multi-game is uniform when every player has the same strategy set
    /// (same labels, same order) in every basic game, and plays one action
    /// across all of them.
    pub fn is_uniform(&self) -> bool {
        let first = &self.games[0];
        self.games.iter().all(|g| {
            (0..self.num_players()).all(|p| g.action_labels(p) == first.action_labels(p))
        })
    }

    /// Instantiates the compound game for the given weights.
    ///
    /// Uniform multi-games keep each player's strategy set; otherwise each
    /// player's compound actions are tuples, one component per basic game,
    /// labelled `l1|l2|...`.
    pub fn compose(&self, weights: &WeightVector) -> Result<NormalFormGame> {
        weights.validate(self.num_players(), self.num_games())?;
        if self.is_uniform() {
            let labels = self.games[0].all_action_labels().to_vec();
            return NormalFormGame::new(labels, |profile| {
                (0..self.num_players())
                    .map(|j| {
                        self.games
                            .iter()
                            .enumerate()
                            .map(|(i, g)| {
                                &weights.0[j][i]
                                    * g.payoff(&crate::game::PureProfile(profile.to_vec()), j)
                                        .expect("uniform profile valid in every basic game")
                            })
                            .sum()
                    })
                    .collect()
            });
        }

        // Non-uniform: compound actions are per-game tuples.
        let m = self.num_games();
        let mut labels: Vec<Vec<String>> = Vec::new();
        let mut tuples: Vec<Vec<Vec<usize>>> = Vec::new(); // [player][compound action][game]
        for j in 0..self.num_players() {
            let sizes: Vec<usize> = self.games.iter().map(|g| g.num_actions(j)).collect();
            let total: usize = sizes.iter().product();
            let mut player_labels = Vec::with_capacity(total);
            let mut player_tuples = Vec::with_capacity(total);
            for mut flat in 0..total {
                let mut tuple = vec![0; m];
                for i in (0..m).rev() {
                    tuple[i] = flat % sizes[i];
                    flat /= sizes[i];
                }
                let label: Vec<&str> = tuple
                    .iter()
                    .enumerate()
                    .map(|(i, &a)| self.games[i].action_labels(j)[a].as_str())
                    .collect();
                player_labels.push(label.join("|"));
                player_tuples.push(tuple);
            }
            labels.push(player_labels);
            tuples.push(player_tuples);
        }
        NormalFormGame::new(labels, |profile| {
            (0..self.num_players())
                .map(|j| {
                    (0..m)
                        .map(|i| {
                            let component = crate::game::PureProfile(
                                (0..self.num_players())
                                    .map(|pl| tuples[pl][profile[pl]][i])
                                    .collect(),
                            );
                            &weights.0[j][i]
                                * self.games[i]
                                    .payoff(&component, j)
                                    .expect("component profile valid")
                        })
                        .sum()
                })
                .collect()
        })
    }
}

/// Per-player investment weights, one row of `M` entries per player. Each
/// row lies in [0, 1] and sums to exactly one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Vec<Rational>>);

impl WeightVector {
    pub fn new(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let w = WeightVector(rows);
        for row in &w.0 {
            w.validate_row(row)?;
        }
        Ok(w)
    }

    fn validate_row(&self, row: &[Rational]) -> Result<()> {
        if row.iter().any(|x| !x.in_unit_interval()) {
            return Err(Error::InvalidWeights("weight outside [0, 1]".into()));
        }
        if row.iter().sum::<Rational>() != Rational::one() {
            return Err(Error::InvalidWeights("weight row does not sum to 1".into()));
        }
        Ok(())
    }

    fn validate(&self, num_players: usize, num_games: usize) -> Result<()> {
        if self.0.len() != num_players {
            return Err(Error::InvalidWeights(format!(
                "expected {} weight rows, got {}",
                num_players,
                self.0.len()
            )));
        }
        if self.0.iter().any(|row| row.len() != num_games) {
            return Err(Error::InvalidWeights(format!(
                "every weight row must have {num_games} entries"
            )));
        }
        for row in &self.0 {
            self.validate_row(row)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::game::{prisoners_dilemma, social_game, PureProfile};
    use crate::rational::rat;

    fn pd() -> NormalFormGame {
        prisoners_dilemma(
            &Rational::from_int(5),
            &Rational::from_int(3),
            &Rational::from_int(1),
            &Rational::from_int(0),
        )
    }

    fn sg() -> NormalFormGame {
        social_game(&rat(5, 2), &rat(5, 2), &Rational::zero(), &Rational::zero())
    }

    #[test]
    fn zero_weight_on_second_game_reproduces_the_first() {
        let mg = MultiGame::new(vec![pd(), sg()]).unwrap();
        let w = WeightVector::new(vec![
            vec![Rational::one(), Rational::zero()],
            vec![Rational::one(), Rational::zero()],
        ])
        .unwrap();
        let g = mg.compose(&w).unwrap();
        for profile in pd().profiles() {
            for player in 0..2 {
                assert_eq!(
                    g.payoff(&profile, player).unwrap(),
                    pd().payoff(&profile, player).unwrap()
                );
            }
        }
    }

    #[test]
    fn half_half_averages_payoffs() {
        let mg = MultiGame::new(vec![pd(), sg()]).unwrap();
        let w = WeightVector::new(vec![
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(1, 2), rat(1, 2)],
        ])
        .unwrap();
        let g = mg.compose(&w).unwrap();
        // (3 + 2.5)/2 at (C,C) for player 1
        assert_eq!(g.payoff(&PureProfile(vec![0, 0]), 0).unwrap(), &rat(11, 4));
    }

    #[test]
    fn rejects_bad_weight_rows() {
        let mg = MultiGame::new(vec![pd(), sg()]).unwrap();
        assert!(WeightVector::new(vec![vec![rat(1, 2), rat(1, 4)]]).is_err());
        assert!(WeightVector::new(vec![vec![rat(3, 2), rat(-1, 2)]]).is_err());
        let w = WeightVector(vec![vec![rat(1, 2), rat(1, 2)]]);
        assert!(mg.compose(&w).is_err()); // wrong number of rows
    }

    #[test]
    fn non_uniform_composition_builds_tuple_actions() {
        let g1 = NormalFormGame::from_rows(
            &["E", "N"],
            &["E", "N"],
            &[
                vec![(rat(2, 1), rat(2, 1)), (rat(0, 1), rat(3, 1))],
                vec![(rat(3, 1), rat(0, 1)), (rat(1, 1), rat(1, 1))],
            ],
        )
        .unwrap();
        let g2 = NormalFormGame::from_rows(
            &["x", "y", "z"],
            &["x", "y"],
            &[
                vec![(rat(1, 1), rat(0, 1)), (rat(0, 1), rat(0, 1))],
                vec![(rat(0, 1), rat(1, 1)), (rat(2, 1), rat(0, 1))],
                vec![(rat(5, 1), rat(5, 1)), (rat(0, 1), rat(1, 1))],
            ],
        )
        .unwrap();
        let mg = MultiGame::new(vec![g1.clone(), g2.clone()]).unwrap();
        assert!(!mg.is_uniform());
        let w = WeightVector::new(vec![
            vec![rat(1, 4), rat(3, 4)],
            vec![rat(1, 2), rat(1, 2)],
        ])
        .unwrap();
        let g = mg.compose(&w).unwrap();
        assert_eq!(g.num_actions(0), 6);
        assert_eq!(g.num_actions(1), 4);
        assert_eq!(g.action_labels(0)[0], "E|x");
        // player 1 at (E|z, N|x): 1/4 * g1(E,N) + 3/4 * g2(z,x) = 0/4 + 15/4
        let p1_action = g.action_index(0, "E|z").unwrap();
        let p2_action = g.action_index(1, "N|x").unwrap();
        assert_eq!(
            g.payoff(&PureProfile(vec![p1_action, p2_action]), 0).unwrap(),
            &rat(15, 4)
        );
    }
}
