use thiserror::Error;

/// Errors raised by the library.
///
/// Verification outcomes (axiom failures, unbiasedness deviations, search
/// non-convergence) are values, not errors. Only malformed requests land here.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{count} bases in dimension {dimension} exceeds the maximum of {max}")]
    BoundViolation {
        dimension: usize,
        count: usize,
        max: usize,
    },
    #[error("usage error: {0}")]
    Usage(String),
    #[error("format error: {0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
