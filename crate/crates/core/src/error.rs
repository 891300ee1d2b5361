use thiserror::Error;

/// Crate-wide error type. Validation and contract failures carry a message
/// naming the violated invariant or inequality.
#[derive(Debug, Error)]
pub enum Error {
    #[error("player index {player} out of range for a {num_players}-player game")]
    PlayerOutOfRange { player: usize, num_players: usize },
    #[error("action index {action} out of range for player {player} ({len} actions)")]
    ActionOutOfRange { player: usize, action: usize, len: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error("invalid game definition: {0}")]
    InvalidGame(String),
    #[error("multi-game is not uniform: {0}")]
    NotUniform(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("invalid type grid: {0}")]
    InvalidGrid(String),
    #[error("parameter constraint violated: {0}")]
    ParamViolation(String),
    #[error("unsupported grid variant: {0}")]
    UnsupportedVariant(String),
    #[error("degenerate interpolation: (1-g)*A + g*B is zero at the requested weight")]
    DegenerateInterpolation,
    #[error("coherence violated: {0}")]
    CoherenceViolated(String),
    #[error("prior has zero total mass")]
    ZeroMassPrior,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("strategy contract violation: {0}")]
    StrategyContract(String),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
