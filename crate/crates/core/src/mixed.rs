//! Mixed Nash equilibria of 2x2 games by support enumeration.
//!
//! Pure supports come from the exhaustive pure-equilibrium scan; full
//! supports from the exact indifference equations. Degenerate games, where a
//! whole segment of mixtures is in equilibrium, are reported as families with
//! their endpoint mixtures instead of being collapsed or dropped.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{point_mass, MixedStrategy, NormalFormGame, PureProfile};
use crate::rational::Rational;

/// An isolated mixed equilibrium (point masses for pure ones).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MixedNe {
    pub p1: MixedStrategy,
    pub p2: MixedStrategy,
}

/// A one-parameter segment of equilibria: `fixed` is one player's strategy,
/// the other player's mixtures sweep from `lo` to `hi` (inclusive).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct MixedFamily {
    pub varying_player: usize,
    pub fixed: MixedStrategy,
    pub lo: MixedStrategy,
    pub hi: MixedStrategy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MixedNashOutcome {
    pub equilibria: Vec<MixedNe>,
    pub families: Vec<MixedFamily>,
    pub degenerate: bool,
}

impl MixedNashOutcome {
    /// Exact membership test: is `(p1, p2)` one of the reported equilibria,
    /// either isolated or inside a family segment?
    pub fn contains(&self, p1: &MixedStrategy, p2: &MixedStrategy) -> bool {
        if self.equilibria.iter().any(|ne| &ne.p1 == p1 && &ne.p2 == p2) {
            return true;
        }
        self.families.iter().any(|f| {
            let (varying, fixed) = if f.varying_player == 0 { (p1, p2) } else { (p2, p1) };
            if fixed != &f.fixed {
                return false;
            }
            let (a, b) = (&f.lo[0], &f.hi[0]);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            lo <= &varying[0] && &varying[0] <= hi
        })
    }
}

/// Probability-`p` mixture on a two-action set: `[p, 1-p]`.
fn mix(p: &Rational) -> MixedStrategy {
    vec![p.clone(), Rational::one() - p]
}

/// Root of `p*dc + (1-p)*dd = 0`, if the equation is non-degenerate.
fn affine_root(dc: &Rational, dd: &Rational) -> Option<Rational> {
    if dc == dd {
        None
    } else {
        Some(dd / &(dd - dc))
    }
}

/// All Nash equilibria of a 2-player, 2x2 game, found by support enumeration
/// in exact arithmetic.
pub fn mixed_nash_2x2(game: &NormalFormGame) -> Result<MixedNashOutcome> {
    if game.num_players() != 2 || game.num_actions(0) != 2 || game.num_actions(1) != 2 {
        return Err(Error::DimensionMismatch(
            "mixed_nash_2x2 requires a 2-player game with 2 actions per player".into(),
        ));
    }
    let u = |player: usize, a: usize, b: usize| {
        game.payoff(&PureProfile(vec![a, b]), player).expect("valid 2x2 profile").clone()
    };

    let mut equilibria: Vec<MixedNe> = game
        .pure_nash()
        .into_iter()
        .map(|p| MixedNe { p1: point_mass(2, p.0[0]), p2: point_mass(2, p.0[1]) })
        .collect();
    let mut families: Vec<MixedFamily> = Vec::new();

    // Player 1's gain of action 0 over action 1 against each pure opponent
    // action, and symmetrically for player 2.
    let d1 = [&u(0, 0, 0) - &u(0, 1, 0), &u(0, 0, 1) - &u(0, 1, 1)];
    let d2 = [&u(1, 0, 0) - &u(1, 0, 1), &u(1, 1, 0) - &u(1, 1, 1)];

    // Support {0,1} x {y}: player 1 must be indifferent against y, and y must
    // stay a weak best response over an interval of player-1 mixtures.
    for (y, gain) in d1.iter().enumerate() {
        if !gain.is_zero() {
            continue;
        }
        // sign condition on f(p) = p*d2[0] + (1-p)*d2[1], where y best means
        // f >= 0 for y = 0 and f <= 0 for y = 1
        if let Some((lo, hi)) = weak_interval(&d2[0], &d2[1], y == 0) {
            push_segment(&mut equilibria, &mut families, 0, point_mass(2, y), lo, hi);
        }
    }
    // Support {x} x {0,1}.
    for (x, gain) in d2.iter().enumerate() {
        if !gain.is_zero() {
            continue;
        }
        if let Some((lo, hi)) = weak_interval(&d1[0], &d1[1], x == 0) {
            push_segment(&mut equilibria, &mut families, 1, point_mass(2, x), lo, hi);
        }
    }

    // Full support: both indifference equations.
    let p_star = affine_root(&d2[0], &d2[1]);
    let q_star = affine_root(&d1[0], &d1[1]);
    match (p_star, q_star) {
        (Some(p), Some(q)) => {
            if interior(&p) && interior(&q) {
                equilibria.push(MixedNe { p1: mix(&p), p2: mix(&q) });
            }
        }
        (None, Some(q)) => {
            // player 2 indifferent for every p
            if d2[0].is_zero() && interior(&q) {
                families.push(MixedFamily {
                    varying_player: 0,
                    fixed: mix(&q),
                    lo: mix(&Rational::zero()),
                    hi: mix(&Rational::one()),
                });
            }
        }
        (Some(p), None) => {
            if d1[0].is_zero() && interior(&p) {
                families.push(MixedFamily {
                    varying_player: 1,
                    fixed: mix(&p),
                    lo: mix(&Rational::zero()),
                    hi: mix(&Rational::one()),
                });
            }
        }
        // both players totally indifferent: covered by the semi-support
        // families above
        (None, None) => {}
    }

    equilibria.sort();
    equilibria.dedup();
    families.sort();
    families.dedup();
    let degenerate = !families.is_empty();
    Ok(MixedNashOutcome { equilibria, families, degenerate })
}

fn interior(p: &Rational) -> bool {
    p.is_positive() && p < &Rational::one()
}

/// Solves `p*gc + (1-p)*gd >= 0` (or `<= 0` when `want_nonneg` is false)
/// within [0, 1]; returns the closed solution interval if non-empty.
fn weak_interval(gc: &Rational, gd: &Rational, want_nonneg: bool) -> Option<(Rational, Rational)> {
    let (gc, gd) = if want_nonneg { (gc.clone(), gd.clone()) } else { (-gc, -gd) };
    // f(p) = p*gc + (1-p)*gd = gd + p*(gc - gd) >= 0
    let slope = &gc - &gd;
    if slope.is_zero() {
        return if !gd.is_negative() { Some((Rational::zero(), Rational::one())) } else { None };
    }
    let root = -&gd / &slope;
    let (lo, hi) = if slope.is_positive() {
        (root.max(Rational::zero()), Rational::one())
    } else {
        (Rational::zero(), root.min(Rational::one()))
    };
    if lo <= hi {
        Some((lo, hi))
    } else {
        None
    }
}

fn push_segment(
    equilibria: &mut Vec<MixedNe>,
    families: &mut Vec<MixedFamily>,
    varying_player: usize,
    fixed: MixedStrategy,
    lo: Rational,
    hi: Rational,
) {
    if lo == hi {
        // a single mixture; skip endpoints, those are pure profiles already
        // reported by the pure scan
        if interior(&lo) {
            let varying = mix(&lo);
            let (p1, p2) = if varying_player == 0 {
                (varying, fixed)
            } else {
                (fixed, varying)
            };
            equilibria.push(MixedNe { p1, p2 });
        }
    } else {
        families.push(MixedFamily { varying_player, fixed, lo: mix(&lo), hi: mix(&hi) });
    }
}
