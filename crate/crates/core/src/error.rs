use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed braiding matrix at row {row}, column {col}: {reason}")]
    MatrixEntry {
        row: usize,
        col: usize,
        reason: String,
    },

    #[error("division by zero")]
    DivisionByZero,

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("element is not homogeneous")]
    NonHomogeneous,

    #[error("degree mismatch")]
    DegreeMismatch,

    #[error("cap exceeded: {0}")]
    CapExceeded(String),

    #[error("invalid Cartan data: {0}")]
    InvalidSpec(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
