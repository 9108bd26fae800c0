use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("arity must be at least 1")]
    ZeroArity,

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("ideal containment violated: {0}")]
    NotContained(String),

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("operation requires a proper ideal")]
    UnitIdeal,

    #[error("support {0:?} is not a maximal associated prime")]
    NotMaximalSupport(Vec<usize>),

    #[error("power index must be at least 1")]
    ZeroPower,

    #[error(
        "no quasi-polynomial with period <= {max_period} and degree <= {max_degree} fits the data"
    )]
    NoFit { max_period: u64, max_degree: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
