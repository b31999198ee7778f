use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    InvalidPrime(u32),

    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { got: usize, max: usize },

    #[error("rings differ: {0}")]
    RingMismatch(String),

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("computation cancelled")]
    Cancelled,

    #[error("resource limit exceeded: {0}")]
    LimitExceeded(String),
}
