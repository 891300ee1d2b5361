//! Exact-arithmetic engine for weighted compositions of finite games.
//!
//! Players split their investment across several basic games; payoffs are
//! the convex combination of basic-game payoffs under per-player weights.
//! The crate covers:
//!
//! - finite normal-form games with exact rational payoffs, pure equilibria
//!   by exhaustive weak best-response scan, and 2x2 mixed equilibria by
//!   support enumeration ([`game`], [`mixed`]);
//! - multi-game composition and the 2-player double game, whose equilibrium
//!   regions are axis-aligned rectangles in the weight square ([`multigame`],
//!   [`double`]);
//! - coherent pairs, pure regularity, the linear-time completely-pure-regular
//!   test and pure Bayesian equilibrium verification ([`regularity`]);
//! - the prisoner's dilemma extended with a social game ([`social`]);
//! - a deterministic round-robin tournament for the repeated double game
//!   with the SEG strategy family ([`tournament`]);
//! - JSON file formats for games, grids and priors ([`json`]).

pub mod double;
pub mod error;
pub mod game;
pub mod json;
pub mod mixed;
pub mod multigame;
pub mod rational;
pub mod regularity;
pub mod social;
pub mod tournament;

pub use double::{DoubleGame, Interval, RegionDiagram, TypeGrid};
pub use error::{Error, Result};
pub use game::{Action, MixedProfile, NormalFormGame, PureProfile};
pub use rational::Rational;
pub use social::{CaseTag, CrossingPoints, ExampleVariant, SocialParams};

#[cfg(test)]
mod concurrency {
    // analysis types are immutable after construction and shareable across
    // threads; operations on them are reentrant
    fn assert_send_sync<T: Send + Sync>() {}

    #[test]
    fn analysis_types_are_send_and_sync() {
        assert_send_sync::<crate::Rational>();
        assert_send_sync::<crate::NormalFormGame>();
        assert_send_sync::<crate::DoubleGame>();
        assert_send_sync::<crate::TypeGrid>();
        assert_send_sync::<crate::RegionDiagram>();
        assert_send_sync::<crate::SocialParams>();
        assert_send_sync::<crate::regularity::TypePrior>();
        assert_send_sync::<crate::regularity::BayesianPureProfile>();
        assert_send_sync::<crate::tournament::TournamentResult>();
    }
}
