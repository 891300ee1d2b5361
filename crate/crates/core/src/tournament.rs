//! Round-robin tournament for the repeated double game.
//!
//! Strategies pick an action each round and may move their social
//! coefficient by at most one ladder step per round. The coefficient update
//! is applied before the action is chosen; both players' updates happen
//! simultaneously. Every match is deterministic given the tournament seed;
//! stochastic strategies draw from a per-match stream derived from the seed
//! and the pair index.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha12Rng;
use serde::Serialize;

use crate::double::{DoubleGame, TypeGrid};
use crate::error::{Error, Result};
use crate::game::PureProfile;
use crate::rational::Rational;

/// Whether a strategy can observe the opponent's current coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum InfoMode {
    Complete,
    Incomplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Seat {
    First,
    Second,
}

impl Seat {
    pub fn player(self) -> usize {
        match self {
            Seat::First => 0,
            Seat::Second => 1,
        }
    }
}

/// What a strategy sees when deciding: the last exchange, its own coefficient
/// (index and value), the opponent's current coefficient when the mode is
/// complete, and the game being played.
pub struct Observation<'a> {
    pub round: u32,
    pub prev_own: Option<usize>,
    pub prev_opp: Option<usize>,
    pub own_coeff_index: usize,
    pub own_coeff: &'a Rational,
    pub opp_coeff: Option<&'a Rational>,
    pub dg: &'a DoubleGame,
    pub grid: &'a TypeGrid,
    pub own_ladder: &'a [Rational],
    pub seat: Seat,
}

impl Observation<'_> {
    fn own_label(&self, action: usize) -> &str {
        &self.dg.action_labels(self.seat.player())[action]
    }

    fn opp_label(&self, action: usize) -> &str {
        &self.dg.action_labels(1 - self.seat.player())[action]
    }
}

/// A tournament participant. `adjust` is consulted from round 2 on and must
/// return a coefficient delta in {-1, 0, +1}; `act` then chooses an action
/// with the updated coefficient already visible in the observation.
pub trait Strategy {
    fn name(&self) -> &str;
    fn initial_coeff_index(&self, ladder: &[Rational]) -> usize;
    fn adjust(&mut self, obs: &Observation) -> i32;
    fn act(&mut self, obs: &Observation) -> usize;
}

/// Creates fresh strategy instances; one per match, never shared.
pub trait StrategyFactory {
    fn name(&self) -> &str;
    fn create(&self, rng: ChaCha12Rng) -> Box<dyn Strategy>;
}

/// A 2x2 action read as cooperate or defect.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoopDefect {
    Cooperate,
    Defect,
}

/// The coefficient rule of the winning strategy: raise it after the opponent
/// defects or after mutual defection, lower it after exploiting a
/// cooperator, keep it under mutual cooperation.
pub fn seg_update(prev_own: CoopDefect, prev_opp: CoopDefect) -> i32 {
    use CoopDefect::*;
    match (prev_own, prev_opp) {
        (Cooperate, Cooperate) => 0,
        (Cooperate, Defect) => 1,
        (Defect, Cooperate) => -1,
        (Defect, Defect) => 1,
    }
}

/// Drives one strategy through one round: the coefficient delta is taken
/// first (0 on round 1), clamped to the ladder, and the action is then chosen
/// with the updated coefficient already visible. Returns the applied delta
/// and the action.
///
/// Match play interleaves the two phases across both players so the updates
/// land simultaneously; this standalone form is the single-strategy view.
pub fn step(strategy: &mut dyn Strategy, obs: &Observation) -> Result<(i32, usize)> {
    let delta = if obs.round <= 1 { 0 } else { strategy.adjust(obs) };
    if delta.abs() > 1 {
        return Err(Error::StrategyContract(format!(
            "coefficient delta {delta} outside {{-1, 0, +1}}"
        )));
    }
    let ladder = obs.own_ladder;
    let index = (obs.own_coeff_index as i64 + delta as i64).clamp(0, ladder.len() as i64 - 1)
        as usize;
    let updated = Observation {
        round: obs.round,
        prev_own: obs.prev_own,
        prev_opp: obs.prev_opp,
        own_coeff_index: index,
        own_coeff: &ladder[index],
        opp_coeff: obs.opp_coeff,
        dg: obs.dg,
        grid: obs.grid,
        own_ladder: ladder,
        seat: obs.seat,
    };
    let action = strategy.act(&updated);
    if action >= obs.dg.num_actions(obs.seat.player()) {
        return Err(Error::StrategyContract(format!("action index {action} out of range")));
    }
    Ok((delta, action))
}

/// Result of an equilibrium lookup for one seat.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NeLookup {
    pub action: usize,
    /// Set when the pure equilibrium set was empty and the own-payoff
    /// dominant profile was used instead.
    pub fallback: bool,
}

/// Player 1's action prescribed by the local equilibria at `(lambda, gamma)`:
/// the common own action when all equilibria agree, otherwise `tiebreak`.
pub fn ne_lookup(
    dg: &DoubleGame,
    lambda: &Rational,
    gamma: &Rational,
    tiebreak: usize,
) -> Result<NeLookup> {
    ne_lookup_seat(dg, lambda, gamma, Seat::First, tiebreak)
}

fn ne_lookup_seat(
    dg: &DoubleGame,
    own: &Rational,
    opp: &Rational,
    seat: Seat,
    tiebreak: usize,
) -> Result<NeLookup> {
    let player = seat.player();
    let (l, g) = match seat {
        Seat::First => (own, opp),
        Seat::Second => (opp, own),
    };
    let equilibria = dg.local_ne(l, g)?;
    if equilibria.is_empty() {
        // no pure equilibrium: play the own action of the profile with the
        // best own payoff (first in profile order on ties)
        let mut best: Option<(PureProfile, Rational)> = None;
        for profile in dg.profiles() {
            let value = dg.weighted_payoff(player, &profile, own);
            if best.as_ref().is_none_or(|(_, top)| &value > top) {
                best = Some((profile, value));
            }
        }
        let (profile, _) = best.expect("games have at least one profile");
        return Ok(NeLookup { action: profile.0[player], fallback: true });
    }
    let first = equilibria[0].0[player];
    if equilibria.iter().all(|p| p.0[player] == first) {
        Ok(NeLookup { action: first, fallback: false })
    } else {
        Ok(NeLookup { action: tiebreak, fallback: false })
    }
}

pub mod strategies {
    //! The built-in strategies plus a fixed-behaviour plugin example.
    //!
    //! The built-ins assume the double game labels its actions `C` and `D`.

    use super::*;

    fn cd(label: &str) -> CoopDefect {
        if label == "C" {
            CoopDefect::Cooperate
        } else {
            CoopDefect::Defect
        }
    }

    fn own_action(obs: &Observation, label: &str) -> usize {
        obs.dg
            .action_index(obs.seat.player(), label)
            .unwrap_or_else(|| panic!("built-in strategies need a {label:?} action"))
    }

    /// Defects every round with coefficient pinned at the bottom of the
    /// ladder.
    pub struct AllD;

    impl Strategy for AllD {
        fn name(&self) -> &str {
            "ALLD"
        }
        fn initial_coeff_index(&self, _ladder: &[Rational]) -> usize {
            0
        }
        fn adjust(&mut self, _obs: &Observation) -> i32 {
            0
        }
        fn act(&mut self, obs: &Observation) -> usize {
            own_action(obs, "D")
        }
    }

    /// Cooperates every round with coefficient pinned at the top of the
    /// ladder.
    pub struct AllC;

    impl Strategy for AllC {
        fn name(&self) -> &str {
            "ALLC"
        }
        fn initial_coeff_index(&self, ladder: &[Rational]) -> usize {
            ladder.len() - 1
        }
        fn adjust(&mut self, _obs: &Observation) -> i32 {
            0
        }
        fn act(&mut self, obs: &Observation) -> usize {
            own_action(obs, "C")
        }
    }

    /// Cooperates first, then repeats the opponent's previous action.
    /// Keeps its coefficient at the bottom of the ladder.
    pub struct Tft;

    impl Strategy for Tft {
        fn name(&self) -> &str {
            "TFT"
        }
        fn initial_coeff_index(&self, _ladder: &[Rational]) -> usize {
            0
        }
        fn adjust(&mut self, _obs: &Observation) -> i32 {
            0
        }
        fn act(&mut self, obs: &Observation) -> usize {
            match obs.prev_opp {
                Some(a) => own_action(obs, obs.opp_label(a)),
                None => own_action(obs, "C"),
            }
        }
    }

    /// Plays what the local equilibria prescribe (defecting on ambiguity)
    /// and moves its coefficient by the four-rule update. Starts at 0.
    /// In incomplete mode the unknown opponent coefficient is proxied by
    /// its own.
    pub struct Seg;

    impl Strategy for Seg {
        fn name(&self) -> &str {
            "SEG"
        }
        fn initial_coeff_index(&self, _ladder: &[Rational]) -> usize {
            0
        }
        fn adjust(&mut self, obs: &Observation) -> i32 {
            match (obs.prev_own, obs.prev_opp) {
                (Some(own), Some(opp)) => seg_update(
                    cd(obs.own_label(own)),
                    cd(obs.opp_label(opp)),
                ),
                _ => 0,
            }
        }
        fn act(&mut self, obs: &Observation) -> usize {
            let opp = obs.opp_coeff.unwrap_or(obs.own_coeff);
            let tiebreak = own_action(obs, "D");
            ne_lookup_seat(obs.dg, obs.own_coeff, opp, obs.seat, tiebreak)
                .expect("ladder weights are valid")
                .action
        }
    }

    /// Where a fixed strategy places its initial coefficient.
    #[derive(Clone, Copy, Debug)]
    pub enum InitialIndex {
        Bottom,
        Top,
        At(usize),
    }

    /// Constant behaviour: one action, one coefficient, forever. Handy as a
    /// plugin example and for benchmark opponents.
    pub struct Fixed {
        pub name: String,
        pub initial: InitialIndex,
        pub action_label: String,
    }

    impl Fixed {
        pub fn new(name: &str, initial: InitialIndex, action_label: &str) -> Self {
            Fixed { name: name.into(), initial, action_label: action_label.into() }
        }
    }

    impl Strategy for Fixed {
        fn name(&self) -> &str {
            &self.name
        }
        fn initial_coeff_index(&self, ladder: &[Rational]) -> usize {
            match self.initial {
                InitialIndex::Bottom => 0,
                InitialIndex::Top => ladder.len() - 1,
                InitialIndex::At(i) => i.min(ladder.len() - 1),
            }
        }
        fn adjust(&mut self, _obs: &Observation) -> i32 {
            0
        }
        fn act(&mut self, obs: &Observation) -> usize {
            own_action(obs, &self.action_label)
        }
    }

    pub(super) struct BuiltinFactory(pub &'static str);

    impl StrategyFactory for BuiltinFactory {
        fn name(&self) -> &str {
            self.0
        }
        fn create(&self, _rng: ChaCha12Rng) -> Box<dyn Strategy> {
            match self.0 {
                "SEG" => Box::new(Seg),
                "ALLC" => Box::new(AllC),
                "ALLD" => Box::new(AllD),
                "TFT" => Box::new(Tft),
                other => unreachable!("no builtin named {other}"),
            }
        }
    }
}

/// The names accepted by [`builtin_factory`].
pub const BUILTIN_STRATEGIES: [&str; 4] = ["SEG", "ALLC", "ALLD", "TFT"];

pub fn builtin_factory(name: &str) -> Result<Box<dyn StrategyFactory>> {
    if BUILTIN_STRATEGIES.contains(&name) {
        let name: &'static str = BUILTIN_STRATEGIES
            .iter()
            .find(|n| **n == name)
            .expect("checked above");
        Ok(Box::new(strategies::BuiltinFactory(name)))
    } else {
        Err(Error::UnknownStrategy(name.into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundRecord {
    pub round: u32,
    pub action1: String,
    pub action2: String,
    pub coeff1: Rational,
    pub coeff2: Rational,
    pub payoff1: Rational,
    pub payoff2: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Forfeit {
    pub seat: u8,
    pub round: u32,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchRecord {
    pub strategy1: String,
    pub strategy2: String,
    pub rounds: Vec<RoundRecord>,
    pub total1: Rational,
    pub total2: Rational,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub forfeit: Option<Forfeit>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TournamentConfig {
    pub rounds: u32,
    pub mode: InfoMode,
    pub seed: u64,
}

impl Default for TournamentConfig {
    fn default() -> Self {
        TournamentConfig { rounds: 200, mode: InfoMode::Complete, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankingRow {
    pub rank: usize,
    pub strategy: String,
    pub total: Rational,
    pub average: Rational,
    pub initial_coeff: Rational,
    pub round1_action: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct TournamentResult {
    pub config: TournamentConfig,
    pub rankings: Vec<RankingRow>,
    pub matches: Vec<MatchRecord>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E3779B97F4A7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D049BB133111EB);
    x ^ (x >> 31)
}

fn match_rng(seed: u64, pair_index: usize, seat: usize) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(splitmix64(
        seed ^ splitmix64((pair_index as u64) << 1 | seat as u64),
    ))
}

/// Plays one match between fresh instances from the two factories.
#[allow(clippy::needless_range_loop)]
pub fn play_match(
    a: &dyn StrategyFactory,
    b: &dyn StrategyFactory,
    dg: &DoubleGame,
    grid: &TypeGrid,
    config: &TournamentConfig,
    pair_index: usize,
) -> Result<MatchRecord> {
    if config.rounds == 0 {
        return Err(Error::InvalidGame("a match needs at least one round".into()));
    }
    let mut s1 = a.create(match_rng(config.seed, pair_index, 0));
    let mut s2 = b.create(match_rng(config.seed, pair_index, 1));
    let ladders = [grid.ladder(0), grid.ladder(1)];
    let mut idx = [
        s1.initial_coeff_index(ladders[0]),
        s2.initial_coeff_index(ladders[1]),
    ];
    for (seat, &i) in idx.iter().enumerate() {
        if i >= ladders[seat].len() {
            return Err(Error::StrategyContract(format!(
                "initial coefficient index {i} outside the ladder"
            )));
        }
    }

    let mut record = MatchRecord {
        strategy1: a.name().to_string(),
        strategy2: b.name().to_string(),
        rounds: Vec::with_capacity(config.rounds as usize),
        total1: Rational::zero(),
        total2: Rational::zero(),
        forfeit: None,
    };
    let mut prev: Option<(usize, usize)> = None;

    'rounds: for round in 1..=config.rounds {
        // both deltas are computed from the previous round, then applied
        // simultaneously before either player acts
        let mut deltas = [0i32; 2];
        if round > 1 {
            for seat in 0..2 {
                let obs = observe(dg, grid, config, seat, round, idx, prev);
                let strategy: &mut Box<dyn Strategy> = if seat == 0 { &mut s1 } else { &mut s2 };
                deltas[seat] = strategy.adjust(&obs);
                if deltas[seat].abs() > 1 {
                    forfeit(&mut record, seat, round, "coefficient delta outside {-1,0,+1}");
                    break 'rounds;
                }
            }
        }
        for seat in 0..2 {
            let next = idx[seat] as i64 + deltas[seat] as i64;
            idx[seat] = next.clamp(0, ladders[seat].len() as i64 - 1) as usize;
        }

        let mut actions = [0usize; 2];
        for seat in 0..2 {
            let obs = observe(dg, grid, config, seat, round, idx, prev);
            let strategy: &mut Box<dyn Strategy> = if seat == 0 { &mut s1 } else { &mut s2 };
            actions[seat] = strategy.act(&obs);
            if actions[seat] >= dg.num_actions(seat) {
                forfeit(&mut record, seat, round, "action index out of range");
                break 'rounds;
            }
        }

        let profile = PureProfile(vec![actions[0], actions[1]]);
        let payoff1 = dg.weighted_payoff(0, &profile, &ladders[0][idx[0]]);
        let payoff2 = dg.weighted_payoff(1, &profile, &ladders[1][idx[1]]);
        record.total1 += &payoff1;
        record.total2 += &payoff2;
        record.rounds.push(RoundRecord {
            round,
            action1: dg.action_labels(0)[actions[0]].clone(),
            action2: dg.action_labels(1)[actions[1]].clone(),
            coeff1: ladders[0][idx[0]].clone(),
            coeff2: ladders[1][idx[1]].clone(),
            payoff1,
            payoff2,
        });
        prev = Some((actions[0], actions[1]));
    }
    Ok(record)
}

fn forfeit(record: &mut MatchRecord, seat: usize, round: u32, reason: &str) {
    if seat == 0 {
        record.total1 = Rational::zero();
    } else {
        record.total2 = Rational::zero();
    }
    record.forfeit = Some(Forfeit { seat: seat as u8 + 1, round, reason: reason.into() });
}

fn observe<'a>(
    dg: &'a DoubleGame,
    grid: &'a TypeGrid,
    config: &TournamentConfig,
    seat: usize,
    round: u32,
    idx: [usize; 2],
    prev: Option<(usize, usize)>,
) -> Observation<'a> {
    let (own_prev, opp_prev) = match prev {
        Some((a1, a2)) => {
            if seat == 0 {
                (Some(a1), Some(a2))
            } else {
                (Some(a2), Some(a1))
            }
        }
        None => (None, None),
    };
    let own_ladder = grid.ladder(seat);
    let opp_ladder = grid.ladder(1 - seat);
    Observation {
        round,
        prev_own: own_prev,
        prev_opp: opp_prev,
        own_coeff_index: idx[seat],
        own_coeff: &own_ladder[idx[seat]],
        opp_coeff: match config.mode {
            InfoMode::Complete => Some(&opp_ladder[idx[1 - seat]]),
            InfoMode::Incomplete => None,
        },
        dg,
        grid,
        own_ladder,
        seat: if seat == 0 { Seat::First } else { Seat::Second },
    }
}

/// Runs the round robin: every unordered pair of strategies, including each
/// against itself, plays exactly one match. A strategy's total is the sum of
/// its own scores over its matches (a self-match counts once), the average
/// divides by the number of matches, and the ranking sorts by total with
/// ties broken by name.
pub fn run_tournament(
    factories: &[Box<dyn StrategyFactory>],
    dg: &DoubleGame,
    grid: &TypeGrid,
    config: &TournamentConfig,
) -> Result<TournamentResult> {
    if factories.is_empty() {
        return Err(Error::InvalidGame("a tournament needs at least one strategy".into()));
    }
    for (i, f) in factories.iter().enumerate() {
        if factories[..i].iter().any(|g| g.name() == f.name()) {
            return Err(Error::InvalidGame(format!("duplicate strategy name {:?}", f.name())));
        }
    }

    let n = factories.len();
    let mut totals = vec![Rational::zero(); n];
    let mut matches = Vec::new();
    let mut pair_index = 0usize;
    for i in 0..n {
        for j in i..n {
            let record =
                play_match(factories[i].as_ref(), factories[j].as_ref(), dg, grid, config, pair_index)?;
            if i == j {
                totals[i] += &record.total1;
            } else {
                totals[i] += &record.total1;
                totals[j] += &record.total2;
            }
            matches.push(record);
            pair_index += 1;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| {
        totals[y]
            .cmp(&totals[x])
            .then_with(|| factories[x].name().cmp(factories[y].name()))
    });
    let rankings = order
        .iter()
        .enumerate()
        .map(|(pos, &i)| {
            let mut probe = factories[i].create(match_rng(config.seed, usize::MAX, i % 2));
            let ladder = grid.ladder(0);
            let initial_index = probe.initial_coeff_index(ladder).min(ladder.len() - 1);
            let first_obs = Observation {
                round: 1,
                prev_own: None,
                prev_opp: None,
                own_coeff_index: initial_index,
                own_coeff: &ladder[initial_index],
                opp_coeff: None,
                dg,
                grid,
                own_ladder: ladder,
                seat: Seat::First,
            };
            let round1 = probe.act(&first_obs);
            RankingRow {
                rank: pos + 1,
                strategy: factories[i].name().to_string(),
                total: totals[i].clone(),
                average: &totals[i] / &Rational::from_int(n as i64),
                initial_coeff: ladder[initial_index].clone(),
                round1_action: dg.action_labels(0)[round1.min(dg.num_actions(0) - 1)].clone(),
            }
        })
        .collect();
    Ok(TournamentResult { config: *config, rankings, matches })
}

/// The ranking table as CSV, mirroring the tournament report layout.
pub fn ranking_csv(result: &TournamentResult) -> String {
    let mut out = String::from("rank,strategy,total,average,initial_coeff,round1_action\n");
    for row in &result.rankings {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.rank, row.strategy, row.total, row.average, row.initial_coeff, row.round1_action
        ));
    }
    out
}

/// One CSV row per round of a match.
pub fn match_trace_csv(record: &MatchRecord) -> String {
    let mut out = String::from("round,action1,action2,coeff1,coeff2,payoff1,payoff2\n");
    for r in &record.rounds {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.round, r.action1, r.action2, r.coeff1, r.coeff2, r.payoff1, r.payoff2
        ));
    }
    out
}
