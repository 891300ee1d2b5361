//! Finite normal-form games with exact payoffs.
//!
//! The [`NormalFormGame`] here is the ground-truth object every other module
//! is checked against: pure equilibria come from an exhaustive weak
//! best-response scan, expected payoffs from the exact multilinear extension.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An action of one player: its index in the owning strategy set plus label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Action {
    pub index: usize,
    pub label: String,
}

/// One action index per player, in player order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PureProfile(pub Vec<usize>);

impl fmt::Debug for PureProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PureProfile{:?}", self.0)
    }
}

/// A probability vector over one player's actions. Entries are exact and sum
/// to one.
pub type MixedStrategy = Vec<Rational>;

/// One mixed strategy per player.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedProfile(pub Vec<MixedStrategy>);

impl MixedProfile {
    /// The degenerate mixture playing `profile` with probability one.
    pub fn pure(game: &NormalFormGame, profile: &PureProfile) -> Result<MixedProfile> {
        game.validate_profile(profile)?;
        Ok(MixedProfile(
            profile
                .0
                .iter()
                .enumerate()
                .map(|(p, &a)| point_mass(game.num_actions(p), a))
                .collect(),
        ))
    }
}

/// A vector that puts probability one on `index`.
pub fn point_mass(len: usize, index: usize) -> MixedStrategy {
    (0..len)
        .map(|i| if i == index { Rational::one() } else { Rational::zero() })
        .collect()
}

/// A finite N-player game: per-player ordered action labels and a payoff
/// vector for every pure profile.
#[derive(Clone, PartialEq, Eq)]
pub struct NormalFormGame {
    actions: Vec<Vec<String>>,
    /// Flattened profile index (player 0 most significant) -> per-player payoffs.
    payoffs: Vec<Vec<Rational>>,
}

impl fmt::Debug for NormalFormGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NormalFormGame")
            .field("actions", &self.actions)
            .finish_non_exhaustive()
    }
}

impl NormalFormGame {
    /// Builds a game from per-player action labels and a payoff function
    /// evaluated on every pure profile.
    pub fn new(
        actions: Vec<Vec<String>>,
        payoff_fn: impl Fn(&[usize]) -> Vec<Rational>,
    ) -> Result<Self> {
        Self::validate_actions(&actions)?;
        let num_players = actions.len();
        let mut payoffs = Vec::new();
        for profile in profiles_of(&actions) {
            let row = payoff_fn(&profile);
            if row.len() != num_players {
                return Err(Error::InvalidGame(format!(
                    "payoff vector for profile {profile:?} has length {}, expected {num_players}",
                    row.len()
                )));
            }
            payoffs.push(row);
        }
        Ok(NormalFormGame { actions, payoffs })
    }

    /// Builds a 2-player game from payoff rows: `rows[i][j]` is the pair of
    /// payoffs when player 1 plays its `i`-th action and player 2 its `j`-th.
    pub fn from_rows(
        p1_actions: &[&str],
        p2_actions: &[&str],
        rows: &[Vec<(Rational, Rational)>],
    ) -> Result<Self> {
        if rows.len() != p1_actions.len() || rows.iter().any(|r| r.len() != p2_actions.len()) {
            return Err(Error::InvalidGame("payoff rows do not match action counts".into()));
        }
        let actions = vec![
            p1_actions.iter().map(|s| s.to_string()).collect(),
            p2_actions.iter().map(|s| s.to_string()).collect(),
        ];
        NormalFormGame::new(actions, |p| {
            let (a, b) = &rows[p[0]][p[1]];
            vec![a.clone(), b.clone()]
        })
    }

    fn validate_actions(actions: &[Vec<String>]) -> Result<()> {
        if actions.is_empty() {
            return Err(Error::InvalidGame("a game needs at least one player".into()));
        }
        for (p, set) in actions.iter().enumerate() {
            if set.is_empty() {
                return Err(Error::InvalidGame(format!("player {p} has an empty strategy set")));
            }
            for (i, label) in set.iter().enumerate() {
                if label.contains(',') {
                    return Err(Error::InvalidGame(format!(
                        "action label {label:?} of player {p} contains a comma"
                    )));
                }
                if set[..i].contains(label) {
                    return Err(Error::InvalidGame(format!(
                        "duplicate action label {label:?} for player {p}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn num_players(&self) -> usize {
        self.actions.len()
    }

    pub fn num_actions(&self, player: usize) -> usize {
        self.actions[player].len()
    }

    pub fn action_labels(&self, player: usize) -> &[String] {
        &self.actions[player]
    }

    pub fn all_action_labels(&self) -> &[Vec<String>] {
        &self.actions
    }

    pub fn action(&self, player: usize, index: usize) -> Result<Action> {
        self.check_player(player)?;
        let set = &self.actions[player];
        if index >= set.len() {
            return Err(Error::ActionOutOfRange { player, action: index, len: set.len() });
        }
        Ok(Action { index, label: set[index].clone() })
    }

    pub fn action_index(&self, player: usize, label: &str) -> Option<usize> {
        self.actions[player].iter().position(|l| l == label)
    }

    fn check_player(&self, player: usize) -> Result<()> {
        if player >= self.num_players() {
            return Err(Error::PlayerOutOfRange { player, num_players: self.num_players() });
        }
        Ok(())
    }

    pub fn validate_profile(&self, profile: &PureProfile) -> Result<()> {
        if profile.0.len() != self.num_players() {
            return Err(Error::DimensionMismatch(format!(
                "profile has {} entries for a {}-player game",
                profile.0.len(),
                self.num_players()
            )));
        }
        for (p, &a) in profile.0.iter().enumerate() {
            if a >= self.num_actions(p) {
                return Err(Error::ActionOutOfRange { player: p, action: a, len: self.num_actions(p) });
            }
        }
        Ok(())
    }

    fn flat_index(&self, profile: &[usize]) -> usize {
        let mut idx = 0;
        for (p, &a) in profile.iter().enumerate() {
            idx = idx * self.num_actions(p) + a;
        }
        idx
    }

    /// Iterates all pure profiles in lexicographic order of action indices.
    pub fn profiles(&self) -> impl Iterator<Item = PureProfile> + '_ {
        profiles_of(&self.actions).map(PureProfile)
    }

    /// The stored payoff of `player` at a pure profile.
    pub fn payoff(&self, profile: &PureProfile, player: usize) -> Result<&Rational> {
        self.check_player(player)?;
        self.validate_profile(profile)?;
        Ok(&self.payoffs[self.flat_index(&profile.0)][player])
    }

    /// All players' payoffs at a pure profile.
    pub fn payoff_vector(&self, profile: &PureProfile) -> Result<&[Rational]> {
        self.validate_profile(profile)?;
        Ok(&self.payoffs[self.flat_index(&profile.0)])
    }

    fn validate_mixed(&self, profile: &MixedProfile, skip_player: Option<usize>) -> Result<()> {
        if profile.0.len() != self.num_players() {
            return Err(Error::DimensionMismatch(format!(
                "mixed profile has {} entries for a {}-player game",
                profile.0.len(),
                self.num_players()
            )));
        }
        for (p, dist) in profile.0.iter().enumerate() {
            if Some(p) == skip_player {
                continue;
            }
            if dist.len() != self.num_actions(p) {
                return Err(Error::DimensionMismatch(format!(
                    "player {p} mixture has {} entries, expected {}",
                    dist.len(),
                    self.num_actions(p)
                )));
            }
            if dist.iter().any(|x| x.is_negative()) {
                return Err(Error::InvalidDistribution(format!(
                    "player {p} mixture has a negative entry"
                )));
            }
            if dist.iter().sum::<Rational>() != Rational::one() {
                return Err(Error::InvalidDistribution(format!(
                    "player {p} mixture does not sum to 1"
                )));
            }
        }
        Ok(())
    }

    /// Exact expected payoff of `player` under a mixed profile: the sum over
    /// pure profiles of the product of probabilities times the payoff.
    pub fn expected_payoff(&self, profile: &MixedProfile, player: usize) -> Result<Rational> {
        self.check_player(player)?;
        self.validate_mixed(profile, None)?;
        Ok(self.expected_unchecked(&profile.0, player))
    }

    fn expected_unchecked(&self, dists: &[MixedStrategy], player: usize) -> Rational {
        let mut total = Rational::zero();
        for pure in profiles_of(&self.actions) {
            let mut prob = Rational::one();
            for (p, &a) in pure.iter().enumerate() {
                if dists[p][a].is_zero() {
                    prob = Rational::zero();
                    break;
                }
                prob = prob * &dists[p][a];
            }
            if !prob.is_zero() {
                total += prob * &self.payoffs[self.flat_index(&pure)][player];
            }
        }
        total
    }

    /// All actions of `player` that maximize its expected payoff against the
    /// opponents' strategies in `others` (the entry for `player` is ignored).
    /// Ties are included: a tying action is a best response.
    pub fn best_responses(&self, player: usize, others: &MixedProfile) -> Result<Vec<usize>> {
        self.check_player(player)?;
        self.validate_mixed(others, Some(player))?;
        let mut dists = others.0.clone();
        let values: Vec<Rational> = (0..self.num_actions(player))
            .map(|a| {
                dists[player] = point_mass(self.num_actions(player), a);
                self.expected_unchecked(&dists, player)
            })
            .collect();
        let best = values.iter().max().expect("non-empty strategy set").clone();
        Ok((0..values.len()).filter(|&a| values[a] == best).collect())
    }

    /// True when no player gains from a unilateral pure deviation (weak
    /// inequality; ties stay equilibria).
    pub fn is_pure_nash(&self, profile: &PureProfile) -> Result<bool> {
        self.validate_profile(profile)?;
        let base = self.flat_index(&profile.0);
        for p in 0..self.num_players() {
            let current = &self.payoffs[base][p];
            let mut deviant = profile.0.clone();
            for a in 0..self.num_actions(p) {
                if a == profile.0[p] {
                    continue;
                }
                deviant[p] = a;
                if &self.payoffs[self.flat_index(&deviant)][p] > current {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// All pure Nash equilibria, in lexicographic order of action indices.
    pub fn pure_nash(&self) -> Vec<PureProfile> {
        self.profiles()
            .filter(|p| self.is_pure_nash(p).expect("profile from iterator is valid"))
            .collect()
    }

    /// Renders a profile as `(D,C)` using the players' action labels.
    pub fn profile_label(&self, profile: &PureProfile) -> String {
        let parts: Vec<&str> = profile
            .0
            .iter()
            .enumerate()
            .map(|(p, &a)| self.actions[p][a].as_str())
            .collect();
        format!("({})", parts.join(","))
    }
}

fn profiles_of(actions: &[Vec<String>]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let sizes: Vec<usize> = actions.iter().map(|s| s.len()).collect();
    let total: usize = sizes.iter().product();
    (0..total).map(move |mut flat| {
        let mut profile = vec![0; sizes.len()];
        for p in (0..sizes.len()).rev() {
            profile[p] = flat % sizes[p];
            flat /= sizes[p];
        }
        profile
    })
}

/// The classical prisoner's dilemma matrix with payoffs T, R, P, S.
pub fn prisoners_dilemma(
    t: &Rational,
    r: &Rational,
    p: &Rational,
    s: &Rational,
) -> NormalFormGame {
    NormalFormGame::from_rows(
        &["C", "D"],
        &["C", "D"],
        &[
            vec![(r.clone(), r.clone()), (s.clone(), t.clone())],
            vec![(t.clone(), s.clone()), (p.clone(), p.clone())],
        ],
    )
    .expect("static shape")
}

/// The social game: cooperation pays `M_i`, defection pays `M'_i`,
/// independently of the opponent's action.
pub fn social_game(
    m1: &Rational,
    m2: &Rational,
    m1p: &Rational,
    m2p: &Rational,
) -> NormalFormGame {
    NormalFormGame::from_rows(
        &["C", "D"],
        &["C", "D"],
        &[
            vec![(m1.clone(), m2.clone()), (m1.clone(), m2p.clone())],
            vec![(m1p.clone(), m2.clone()), (m1p.clone(), m2p.clone())],
        ],
    )
    .expect("static shape")
}
