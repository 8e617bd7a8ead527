use thiserror::Error;

/// Errors raised by game construction and analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("column count mismatch: {left} vs {right}")]
    ColumnMismatch { left: usize, right: usize },

    #[error("index {index} out of range 1..={bound} ({what})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("payoff is -inf at {0}; operation requires finite payoffs")]
    InfinitePayoff(String),

    #[error("weight of player {player} is {weight}; weights must be positive")]
    NonpositiveWeight { player: usize, weight: f64 },

    #[error("missing payoff entry: {0}")]
    MissingEntry(String),

    #[error("bad prior: {0}")]
    BadPrior(String),

    #[error("type {ty} of player {player} has zero marginal probability")]
    ZeroProbabilityType { player: usize, ty: usize },

    #[error("infeasible update: every candidate of player {player} is -inf at state {state}")]
    InfeasibleUpdate { player: usize, state: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation error in `{field}`: {message}")]
    Validation { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_index(what: &'static str, index: usize, bound: usize) -> Result<()> {
    if index == 0 || index > bound {
        Err(Error::IndexOutOfRange { what, index, bound })
    } else {
        Ok(())
    }
}
