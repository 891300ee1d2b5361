//! Coherent pairs of equilibria, regularity of double games with finite
//! types, and pure Bayesian equilibrium construction.
//!
//! A profile `(s, u)` is a local equilibrium exactly when each player's own
//! weight lies in a closed best-response interval that does not depend on the
//! opponent's weight. The regularity machinery exploits that product
//! structure: four corner equilibria pin down candidate action pairs, and a
//! single pass over each player's types decides whether actions can be
//! assigned per type so that every cross pair is an equilibrium. The pass
//! costs O(k + l) best-response point queries per candidate quadruple, which
//! is what makes the completely-pure-regular test linear in the number of
//! types.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::double::{DoubleGame, Interval, TypeGrid};
use crate::error::{Error, Result};
use crate::game::PureProfile;
use crate::rational::Rational;

/// A pair of pure equilibria `(s,u)` and `(s,v)` sharing `player`'s action
/// `s` at one of its types, against the opponent's two extreme types.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CoherentPair {
    pub player: usize,
    pub type_index: usize,
    pub own: usize,
    pub opp_at_zero: usize,
    pub opp_at_one: usize,
}

/// Four corner profiles `(s,u), (s,v), (t,u), (t,v)` that are equilibria at
/// the four respective extreme-type corners.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct RegularityQuadruple {
    pub s: usize,
    pub t: usize,
    pub u: usize,
    pub v: usize,
}

/// A per-type action assignment: player 1 plays `p1_actions[m]` when its
/// type is the m-th ladder value, player 2 plays `p2_actions[n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct BayesianPureProfile {
    pub p1_actions: Vec<usize>,
    pub p2_actions: Vec<usize>,
}

impl BayesianPureProfile {
    /// Renders the profile as e.g. `(DDCC,DDCC)`.
    pub fn label(&self, dg: &DoubleGame) -> String {
        let side = |player: usize, actions: &[usize]| -> String {
            actions.iter().map(|&a| dg.action_labels(player)[a].clone()).collect()
        };
        format!("({},{})", side(0, &self.p1_actions), side(1, &self.p2_actions))
    }
}

fn game_profile(player: usize, own: usize, opp: usize) -> PureProfile {
    if player == 0 {
        PureProfile(vec![own, opp])
    } else {
        PureProfile(vec![opp, own])
    }
}

fn weights_for(player: usize, own_type: &Rational, opp_type: &Rational) -> (Rational, Rational) {
    if player == 0 {
        (own_type.clone(), opp_type.clone())
    } else {
        (opp_type.clone(), own_type.clone())
    }
}

/// All coherent pairs of pure equilibria for `player` at its
/// `type_index`-th type: the own action must support an equilibrium against
/// both of the opponent's extreme types.
pub fn coherent_pairs(
    dg: &DoubleGame,
    grid: &TypeGrid,
    player: usize,
    type_index: usize,
) -> Result<Vec<CoherentPair>> {
    if player > 1 {
        return Err(Error::PlayerOutOfRange { player, num_players: 2 });
    }
    let ladder = grid.ladder(player);
    if type_index >= ladder.len() {
        return Err(Error::InvalidGrid(format!(
            "type index {type_index} out of range ({} types)",
            ladder.len()
        )));
    }
    let own_type = &ladder[type_index];
    let at_extreme = |extreme: &Rational| -> Result<Vec<PureProfile>> {
        let (l, g) = weights_for(player, own_type, extreme);
        dg.local_ne(&l, &g)
    };
    let low = at_extreme(&Rational::zero())?;
    let high = at_extreme(&Rational::one())?;
    let mut pairs = Vec::new();
    for ne_low in &low {
        for ne_high in &high {
            let (own_low, opp_low) = (ne_low.0[player], ne_low.0[1 - player]);
            let (own_high, opp_high) = (ne_high.0[player], ne_high.0[1 - player]);
            if own_low == own_high {
                pairs.push(CoherentPair {
                    player,
                    type_index,
                    own: own_low,
                    opp_at_zero: opp_low,
                    opp_at_one: opp_high,
                });
            }
        }
    }
    pairs.sort();
    pairs.dedup();
    Ok(pairs)
}

/// The threshold of a coherent pair: the largest `p` (1-based) such that
/// `(s,u)` is a local equilibrium against the opponent's first `p` types,
/// with `(s,v)` an equilibrium against all later ones. Overlap at the
/// threshold type is allowed; the maximal prefix is reported.
pub fn threshold(dg: &DoubleGame, grid: &TypeGrid, pair: &CoherentPair) -> Result<usize> {
    let own_type = &grid.ladder(pair.player)[pair.type_index];
    let opp_ladder = grid.ladder(1 - pair.player);
    let is_ne = |own_action: usize, opp_action: usize, opp_type: &Rational| -> Result<bool> {
        let (l, g) = weights_for(pair.player, own_type, opp_type);
        let profile = game_profile(pair.player, own_action, opp_action);
        Ok(dg.local_ne(&l, &g)?.contains(&profile))
    };
    if !is_ne(pair.own, pair.opp_at_zero, &Rational::zero())? {
        return Err(Error::CoherenceViolated(
            "(s,u) is not an equilibrium at the opponent's extreme type 0".into(),
        ));
    }
    if !is_ne(pair.own, pair.opp_at_one, &Rational::one())? {
        return Err(Error::CoherenceViolated(
            "(s,v) is not an equilibrium at the opponent's extreme type 1".into(),
        ));
    }
    // The opponent's best-response condition is the only part that moves with
    // its type, and it holds on a closed interval starting at 0.
    let interval = dg.br_interval(1 - pair.player, pair.opp_at_zero, pair.own);
    let (_, hi) = interval.bounds().expect("coherence puts 0 in the interval");
    let p = opp_ladder.iter().take_while(|t| *t <= &hi).count();
    for (n, opp_type) in opp_ladder.iter().enumerate() {
        let prefix = n < p;
        let holds = if prefix {
            is_ne(pair.own, pair.opp_at_zero, opp_type)?
        } else {
            is_ne(pair.own, pair.opp_at_one, opp_type)?
        };
        if !holds {
            return Err(Error::CoherenceViolated(format!(
                "prefix property fails at opponent type {n}: neither side of the pair covers it"
            )));
        }
    }
    Ok(p)
}

/// All quadruples of actions inducing pure regularity, i.e. whose four
/// corner profiles are equilibria at the four extreme-type corners.
pub fn is_pure_regular(dg: &DoubleGame) -> Vec<RegularityQuadruple> {
    let corner = |l: &Rational, g: &Rational| -> BTreeSet<(usize, usize)> {
        dg.local_ne(l, g)
            .expect("extreme weights are valid")
            .into_iter()
            .map(|p| (p.0[0], p.0[1]))
            .collect()
    };
    let (zero, one) = (Rational::zero(), Rational::one());
    let ne00 = corner(&zero, &zero);
    let ne01 = corner(&zero, &one);
    let ne10 = corner(&one, &zero);
    let ne11 = corner(&one, &one);
    let mut quads = Vec::new();
    for s in 0..dg.num_actions(0) {
        for t in 0..dg.num_actions(0) {
            for u in 0..dg.num_actions(1) {
                for v in 0..dg.num_actions(1) {
                    if ne00.contains(&(s, u))
                        && ne01.contains(&(s, v))
                        && ne10.contains(&(t, u))
                        && ne11.contains(&(t, v))
                    {
                        quads.push(RegularityQuadruple { s, t, u, v });
                    }
                }
            }
        }
    }
    quads
}

/// Instrumentation of the completely-pure-regular test: how many
/// best-response point conditions were evaluated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CprStats {
    pub ne_condition_evals: u64,
}

/// Result of the completely-pure-regular test. `certificate` is the
/// lexicographically first per-type assignment (by player-1 then player-2
/// action indices) if any exists.
#[derive(Clone, Debug)]
pub struct CprOutcome {
    pub certificate: Option<BayesianPureProfile>,
    pub stats: CprStats,
    families: Vec<CertFamily>,
}

/// Per-type admissible actions; every selection is a valid certificate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct CertFamily {
    p1_choices: Vec<Vec<usize>>,
    p2_choices: Vec<Vec<usize>>,
}

impl CprOutcome {
    pub fn is_regular(&self) -> bool {
        self.certificate.is_some()
    }

    /// Every certificate reachable through the quadruple search, sorted and
    /// deduplicated. The count can grow as the product of per-type choices;
    /// tables of the size treated here stay tiny.
    pub fn all_certificates(&self) -> Vec<BayesianPureProfile> {
        let mut seen = BTreeSet::new();
        for family in &self.families {
            let mut assignment: Vec<usize> = Vec::new();
            enumerate(&family.p1_choices, &mut assignment, &mut |p1| {
                let mut partial: Vec<usize> = Vec::new();
                enumerate(&family.p2_choices, &mut partial, &mut |p2| {
                    seen.insert(BayesianPureProfile {
                        p1_actions: p1.to_vec(),
                        p2_actions: p2.to_vec(),
                    });
                });
            });
        }
        seen.into_iter().collect()
    }
}

fn enumerate(choices: &[Vec<usize>], current: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if current.len() == choices.len() {
        emit(current);
        return;
    }
    for &action in &choices[current.len()] {
        current.push(action);
        enumerate(choices, current, emit);
        current.pop();
    }
}

/// Decides whether the double game with the given type grid is completely
/// pure regular, and returns a certificate when it is.
///
/// The search follows the corner structure: every certificate must restrict
/// to a regularity quadruple at the extreme types, so assignments are sought
/// with values among a quadruple's four actions. For two-action games (the
/// whole analysis treated here) that search is exhaustive. The work per
/// quadruple is a constant number of interval constructions plus O(k + l)
/// point queries, counted in [`CprStats`].
pub fn completely_pure_regular(dg: &DoubleGame, grid: &TypeGrid) -> CprOutcome {
    let mut stats = CprStats::default();
    let quads = is_pure_regular(dg);
    stats.ne_condition_evals += 4 * (dg.num_actions(0) * dg.num_actions(1)) as u64;

    let mut families = BTreeSet::new();
    for quad in &quads {
        let own_pair = action_set(quad.s, quad.t);
        let opp_pair = action_set(quad.u, quad.v);
        // intervals indexed by (own action, opponent action)
        let br1: Vec<Vec<Interval>> = own_pair
            .iter()
            .map(|&x| opp_pair.iter().map(|&y| dg.br_interval(0, x, y)).collect())
            .collect();
        let br2: Vec<Vec<Interval>> = opp_pair
            .iter()
            .map(|&y| own_pair.iter().map(|&x| dg.br_interval(1, y, x)).collect())
            .collect();
        for used1 in subsets(&own_pair) {
            for used2 in subsets(&opp_pair) {
                let p1_choices: Vec<Vec<usize>> = grid
                    .lambda()
                    .iter()
                    .map(|lm| {
                        used1
                            .iter()
                            .copied()
                            .filter(|&x| {
                                let xi = own_pair.iter().position(|&a| a == x).unwrap();
                                used2.iter().all(|&y| {
                                    let yi = opp_pair.iter().position(|&a| a == y).unwrap();
                                    stats.ne_condition_evals += 1;
                                    br1[xi][yi].contains(lm)
                                })
                            })
                            .collect()
                    })
                    .collect();
                let p2_choices: Vec<Vec<usize>> = grid
                    .gamma()
                    .iter()
                    .map(|gn| {
                        used2
                            .iter()
                            .copied()
                            .filter(|&y| {
                                let yi = opp_pair.iter().position(|&a| a == y).unwrap();
                                used1.iter().all(|&x| {
                                    let xi = own_pair.iter().position(|&a| a == x).unwrap();
                                    stats.ne_condition_evals += 1;
                                    br2[yi][xi].contains(gn)
                                })
                            })
                            .collect()
                    })
                    .collect();
                if p1_choices.iter().all(|c| !c.is_empty())
                    && p2_choices.iter().all(|c| !c.is_empty())
                {
                    families.insert(CertFamily { p1_choices, p2_choices });
                }
            }
        }
    }

    let families: Vec<CertFamily> = families.into_iter().collect();
    let certificate = families
        .iter()
        .map(|f| BayesianPureProfile {
            p1_actions: f.p1_choices.iter().map(|c| *c.iter().min().unwrap()).collect(),
            p2_actions: f.p2_choices.iter().map(|c| *c.iter().min().unwrap()).collect(),
        })
        .min();
    CprOutcome { certificate, stats, families }
}

fn action_set(a: usize, b: usize) -> Vec<usize> {
    if a == b {
        vec![a]
    } else {
        vec![a.min(b), a.max(b)]
    }
}

fn subsets(pair: &[usize]) -> Vec<Vec<usize>> {
    match pair {
        [a] => vec![vec![*a]],
        [a, b] => vec![vec![*a], vec![*b], vec![*a, *b]],
        _ => unreachable!("action_set returns one or two actions"),
    }
}

/// Exhaustive O(k*l) soundness check of a certificate against the
/// instantiated-game oracle. Used by tests and verification tooling.
pub fn certificate_is_sound(
    dg: &DoubleGame,
    grid: &TypeGrid,
    profile: &BayesianPureProfile,
) -> Result<bool> {
    check_profile_dims(dg, grid, profile)?;
    for (m, lm) in grid.lambda().iter().enumerate() {
        for (n, gn) in grid.gamma().iter().enumerate() {
            let game = dg.instantiate(lm, gn)?;
            let pure = PureProfile(vec![profile.p1_actions[m], profile.p2_actions[n]]);
            if !game.is_pure_nash(&pure)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_profile_dims(dg: &DoubleGame, grid: &TypeGrid, profile: &BayesianPureProfile) -> Result<()> {
    if profile.p1_actions.len() != grid.k() || profile.p2_actions.len() != grid.l() {
        return Err(Error::DimensionMismatch(format!(
            "profile has {}x{} assignments for a {}x{} grid",
            profile.p1_actions.len(),
            profile.p2_actions.len(),
            grid.k(),
            grid.l()
        )));
    }
    for &a in &profile.p1_actions {
        if a >= dg.num_actions(0) {
            return Err(Error::ActionOutOfRange { player: 0, action: a, len: dg.num_actions(0) });
        }
    }
    for &a in &profile.p2_actions {
        if a >= dg.num_actions(1) {
            return Err(Error::ActionOutOfRange { player: 1, action: a, len: dg.num_actions(1) });
        }
    }
    Ok(())
}

/// A joint probability table over type pairs, from which each player's
/// conditional beliefs about the opponent are derived.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TypePrior {
    joint: Vec<Vec<Rational>>,
}

impl TypePrior {
    /// A joint table: `matrix[m][n]` is the probability of the type pair
    /// `(lambda_m, gamma_n)`. Entries must be non-negative and sum to one.
    pub fn joint(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        if matrix.is_empty() || matrix.iter().any(|r| r.len() != matrix[0].len()) {
            return Err(Error::InvalidDistribution("prior matrix must be rectangular".into()));
        }
        if matrix.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::InvalidDistribution("prior has a negative entry".into()));
        }
        let total: Rational = matrix.iter().flatten().sum();
        if total.is_zero() {
            return Err(Error::ZeroMassPrior);
        }
        if total != Rational::one() {
            return Err(Error::InvalidDistribution(format!("prior mass is {total}, not 1")));
        }
        Ok(TypePrior { joint: matrix })
    }

    /// Independent marginals combined by outer product.
    pub fn independent(p1: &[Rational], p2: &[Rational]) -> Result<Self> {
        for (name, dist) in [("p1", p1), ("p2", p2)] {
            if dist.iter().any(|x| x.is_negative()) || dist.iter().sum::<Rational>() != Rational::one()
            {
                return Err(Error::InvalidDistribution(format!(
                    "{name} marginal is not a probability distribution"
                )));
            }
        }
        TypePrior::joint(
            p1.iter()
                .map(|a| p2.iter().map(|b| a * b).collect())
                .collect(),
        )
    }

    pub fn uniform(k: usize, l: usize) -> Self {
        let cell = Rational::one() / Rational::from_int((k * l) as i64);
        TypePrior { joint: vec![vec![cell; l]; k] }
    }

    /// All mass on the single type pair `(m, n)`.
    pub fn point_mass(k: usize, l: usize, m: usize, n: usize) -> Self {
        let mut joint = vec![vec![Rational::zero(); l]; k];
        joint[m][n] = Rational::one();
        TypePrior { joint }
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.joint
    }

    fn dims(&self) -> (usize, usize) {
        (self.joint.len(), self.joint[0].len())
    }
}

/// Expected payoffs and the best-response verdict for one type.
#[derive(Clone, Debug, Serialize)]
pub struct TypeReport {
    pub type_index: usize,
    pub type_value: Rational,
    pub marginal: Rational,
    pub assigned: String,
    /// Conditional expected payoff per own action; empty for zero-mass types.
    pub expected: Vec<ActionValue>,
    pub is_best: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ActionValue {
    pub action: String,
    pub value: Rational,
}

#[derive(Clone, Debug, Serialize)]
pub struct BayesVerification {
    pub is_ne: bool,
    pub p1: Vec<TypeReport>,
    pub p2: Vec<TypeReport>,
}

/// Checks whether the per-type assignment is a pure Bayesian equilibrium
/// under the given prior: every positive-mass type's assigned action must
/// maximize the conditional expected payoff over the opponent's types (weak
/// inequality). Zero-mass types impose no constraint.
pub fn verify_bayes_ne(
    dg: &DoubleGame,
    grid: &TypeGrid,
    profile: &BayesianPureProfile,
    prior: &TypePrior,
) -> Result<BayesVerification> {
    check_profile_dims(dg, grid, profile)?;
    if prior.dims() != (grid.k(), grid.l()) {
        return Err(Error::DimensionMismatch(format!(
            "prior is {}x{} for a {}x{} grid",
            prior.dims().0,
            prior.dims().1,
            grid.k(),
            grid.l()
        )));
    }

    let side = |player: usize| -> Vec<TypeReport> {
        let ladder = grid.ladder(player);
        let own_assigned = if player == 0 { &profile.p1_actions } else { &profile.p2_actions };
        let opp_assigned = if player == 0 { &profile.p2_actions } else { &profile.p1_actions };
        ladder
            .iter()
            .enumerate()
            .map(|(i, type_value)| {
                let mass = |opp_i: usize| {
                    if player == 0 {
                        &prior.matrix()[i][opp_i]
                    } else {
                        &prior.matrix()[opp_i][i]
                    }
                };
                let marginal: Rational =
                    (0..opp_assigned.len()).map(mass).sum();
                if marginal.is_zero() {
                    return TypeReport {
                        type_index: i,
                        type_value: type_value.clone(),
                        marginal,
                        assigned: dg.action_labels(player)[own_assigned[i]].clone(),
                        expected: Vec::new(),
                        is_best: true,
                    };
                }
                let expected: Vec<Rational> = (0..dg.num_actions(player))
                    .map(|x| {
                        let weighted: Rational = (0..opp_assigned.len())
                            .map(|opp_i| {
                                let profile =
                                    game_profile(player, x, opp_assigned[opp_i]);
                                mass(opp_i) * dg.weighted_payoff(player, &profile, type_value)
                            })
                            .sum();
                        weighted / &marginal
                    })
                    .collect();
                let own_value = &expected[own_assigned[i]];
                let is_best = expected.iter().all(|v| v <= own_value);
                TypeReport {
                    type_index: i,
                    type_value: type_value.clone(),
                    marginal,
                    assigned: dg.action_labels(player)[own_assigned[i]].clone(),
                    expected: expected
                        .iter()
                        .enumerate()
                        .map(|(a, v)| ActionValue {
                            action: dg.action_labels(player)[a].clone(),
                            value: v.clone(),
                        })
                        .collect(),
                    is_best,
                }
            })
            .collect()
    };

    let p1 = side(0);
    let p2 = side(1);
    let is_ne = p1.iter().chain(p2.iter()).all(|r| r.is_best);
    Ok(BayesVerification { is_ne, p1, p2 })
}
