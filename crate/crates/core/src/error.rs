use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },

    #[error("layout mismatch: expected rank {expected}, found {found}")]
    LayoutMismatch { expected: usize, found: usize },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("operation undefined on the zero vector")]
    ZeroVector,

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("filtration violation at step {step}, generator {generator}: {reason}")]
    Filtration { step: usize, generator: usize, reason: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
