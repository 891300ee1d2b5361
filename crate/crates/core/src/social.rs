//! The prisoner's dilemma extended with a social game.
//!
//! The first basic game is the classical PD, the second rewards cooperation
//! with `M_i` and punishes defection with `M'_i` independently of the
//! opponent's action. Validated parameters give a double game whose
//! equilibrium structure over the social coefficients falls into one of
//! three cases, delimited by the crossing points of the payoff lines.

use serde::Serialize;

use crate::double::{DoubleGame, TypeGrid};
use crate::error::{Error, Result};
use crate::game::{prisoners_dilemma, social_game};
use crate::rational::Rational;

/// Payoff constants of the PD + social game pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SocialParams {
    pub t: Rational,
    pub r: Rational,
    pub p: Rational,
    pub s: Rational,
    pub m1: Rational,
    pub m2: Rational,
    pub m1p: Rational,
    pub m2p: Rational,
}

/// How the two inner crossing points are ordered, i.e. the sign of
/// `(P-S) - (T-R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CaseTag {
    #[serde(rename = "A_LT_B")]
    ALtB,
    #[serde(rename = "B_LT_A")]
    BLtA,
    #[serde(rename = "A_EQ_B")]
    AEqB,
}

/// Weights at which the payoff lines of a player cross: `a_i` where staying
/// with mutual defection stops paying, `b_i` where cooperation against a
/// cooperator starts paying, `c_i` where the two mismatched outcomes swap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingPoints {
    pub a1: Rational,
    pub b1: Rational,
    pub c1: Rational,
    pub a2: Rational,
    pub b2: Rational,
    pub c2: Rational,
}

/// Type grids used in the worked examples and the tournament.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleVariant {
    /// Four types per player: 0, a_i, b_i, 1.
    I,
    /// Five types per player: 0, a_i, (a_i+b_i)/2, b_i, 1. Needs a_i < b_i.
    II,
}

impl SocialParams {
    /// Validates the full parameter chain, including `M'_1 = M'_2 = S`.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        t: Rational,
        r: Rational,
        p: Rational,
        s: Rational,
        m1: Rational,
        m2: Rational,
        m1p: Rational,
        m2p: Rational,
    ) -> Result<Self> {
        let params = SocialParams { t, r, p, s, m1, m2, m1p, m2p };
        params.validate(false)?;
        Ok(params)
    }

    /// Like [`SocialParams::new`] but without requiring `M'_i = S`, so the
    /// general social game stays constructible. All other chains still hold.
    #[allow(clippy::too_many_arguments)]
    pub fn new_relaxed(
        t: Rational,
        r: Rational,
        p: Rational,
        s: Rational,
        m1: Rational,
        m2: Rational,
        m1p: Rational,
        m2p: Rational,
    ) -> Result<Self> {
        let params = SocialParams { t, r, p, s, m1, m2, m1p, m2p };
        params.validate(true)?;
        Ok(params)
    }

    /// The constants used throughout the worked analysis:
    /// T=5, R=3, M1=M2=5/2, P=1, M'=S=0.
    pub fn standard() -> Self {
        SocialParams::new(
            Rational::from_int(5),
            Rational::from_int(3),
            Rational::from_int(1),
            Rational::from_int(0),
            Rational::new(5, 2),
            Rational::new(5, 2),
            Rational::from_int(0),
            Rational::from_int(0),
        )
        .expect("standard constants satisfy every chain")
    }

    fn validate(&self, relax_mprime: bool) -> Result<()> {
        let two = Rational::from_int(2);
        let require = |ok: bool, name: &str| -> Result<()> {
            if ok {
                Ok(())
            } else {
                Err(Error::ParamViolation(name.to_string()))
            }
        };
        require(self.t > self.r, "T > R")?;
        require(self.r > self.p, "R > P")?;
        require(self.p > self.s, "P > S")?;
        require(self.r > (&self.t + &self.s) / &two, "R > (T+S)/2")?;
        require(self.m1 > self.m1p, "M1 > M1'")?;
        require(self.m2 > self.m2p, "M2 > M2'")?;
        require(self.m1 > (&self.r + &self.p) / &two, "M1 > (R+P)/2")?;
        require(self.m2 > (&self.r + &self.p) / &two, "M2 > (R+P)/2")?;
        require(self.r > self.m1, "R > M1")?;
        require(self.r > self.m2, "R > M2")?;
        require(self.m1 > self.p, "M1 > P")?;
        require(self.m2 > self.p, "M2 > P")?;
        if !relax_mprime {
            require(self.m1p == self.s, "M1' = S")?;
            require(self.m2p == self.s, "M2' = S")?;
        }
        Ok(())
    }

    /// The double game with the PD first and the social game second.
    pub fn build_dg(&self) -> DoubleGame {
        let pd = prisoners_dilemma(&self.t, &self.r, &self.p, &self.s);
        let sg = social_game(&self.m1, &self.m2, &self.m1p, &self.m2p);
        DoubleGame::new(pd, sg).expect("PD and SG share the C/D strategy sets")
    }

    /// Exact crossing points of the payoff lines. Computed from the general
    /// affine crossings, which reduce to
    /// `a_i = (P-S)/(M_i+P-2S)`, `b_i = (T-R)/(T-S+M_i-R)`,
    /// `c_i = (T-S)/(M_i+T-2S)` when `M'_i = S`. Under the validated chains
    /// all six lie in (0, 1) and `c_i` exceeds both `a_i` and `b_i`.
    pub fn crossing_points(&self) -> CrossingPoints {
        let cross = |m: &Rational, mp: &Rational| {
            let gap = m - mp; // > 0 by validation
            let a = (&self.p - &self.s) / &(&(&self.p - &self.s) + &gap);
            let b = (&self.t - &self.r) / &(&(&self.t - &self.r) + &gap);
            let c = (&self.t - &self.s) / &(&(&self.t - &self.s) + &gap);
            (a, b, c)
        };
        let (a1, b1, c1) = cross(&self.m1, &self.m1p);
        let (a2, b2, c2) = cross(&self.m2, &self.m2p);
        let points = CrossingPoints { a1, b1, c1, a2, b2, c2 };
        debug_assert!(points.c1 > points.a1.clone().max(points.b1.clone()));
        debug_assert!(points.c2 > points.a2.clone().max(points.b2.clone()));
        points
    }

    /// Which of the three orderings of `a_i` and `b_i` holds.
    pub fn classify_case(&self) -> CaseTag {
        let lhs = &self.p - &self.s;
        let rhs = &self.t - &self.r;
        if lhs < rhs {
            CaseTag::ALtB
        } else if lhs > rhs {
            CaseTag::BLtA
        } else {
            CaseTag::AEqB
        }
    }

    /// The example type grids, built from each player's own crossing points.
    /// Variant I is the sorted set {0, a_i, b_i, 1}; variant II inserts the
    /// midpoint (a_i+b_i)/2 and is only defined when a_i < b_i.
    pub fn example_grid(&self, variant: ExampleVariant) -> Result<TypeGrid> {
        let cp = self.crossing_points();
        let axis = |a: &Rational, b: &Rational| -> Result<Vec<Rational>> {
            let mut values = match variant {
                ExampleVariant::I => vec![
                    Rational::zero(),
                    a.clone(),
                    b.clone(),
                    Rational::one(),
                ],
                ExampleVariant::II => {
                    if a >= b {
                        return Err(Error::UnsupportedVariant(
                            "variant II requires a_i < b_i".into(),
                        ));
                    }
                    vec![
                        Rational::zero(),
                        a.clone(),
                        (a + b) / Rational::from_int(2),
                        b.clone(),
                        Rational::one(),
                    ]
                }
            };
            values.sort();
            values.dedup();
            Ok(values)
        };
        TypeGrid::new(axis(&cp.a1, &cp.b1)?, axis(&cp.a2, &cp.b2)?)
    }
}
