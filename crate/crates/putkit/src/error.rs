use thiserror::Error;

/// Error type shared by all modules of the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("alphabets do not match: {context} (expected {expected}, got {got})")]
    AlphabetMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no convergence: certified gap {gap:.3e} > tol {tol:.3e} after {iterations} iterations")]
    NoConvergence {
        gap: f64,
        tol: f64,
        iterations: usize,
    },

    #[error("grid too large: {points:.3e} points exceeds limit {limit:.3e}")]
    GridTooLarge { points: f64, limit: f64 },

    #[error("division by zero support: column {index} is nonzero but its weight is zero")]
    DivisionBySupportZero { index: usize },

    #[error("singular weight: output symbol {index} has zero mass but a nonzero numerator")]
    SingularWeight { index: usize },

    #[error("vacuous bound: the Berry-Esseen correction leaves the quantile argument outside (0,1)")]
    VacuousBound,
}

pub type Result<T> = std::result::Result<T, Error>;
