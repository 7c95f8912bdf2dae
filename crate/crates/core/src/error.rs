use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value out of double-precision range: {0}")]
    Range(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("groebner budget of {budget} monomial operations exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("chain length {n} exceeds the necklace cap {cap}")]
    NecklaceCap { n: usize, cap: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular or ill-conditioned (condition estimate {0:e})")]
    IllConditioned(f64),
    #[error("root refinement did not converge: {0}")]
    NoConvergence(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
