use thiserror::Error;

/// Errors raised by the certification library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(
        "matrix must be square and non-empty: row {row} has {found} entries, expected {expected}"
    )]
    NotSquare {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("matrix has no rows")]
    Empty,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("operation requires dimension at least {min}, got {n}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("zero pivot: the trailing diagonal entry is 0")]
    SingularPivot,

    #[error("dimension {n} exceeds the minor enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("point does not assign variable d{0}")]
    MissingVariable(usize),

    #[error("polynomial has degree {degree} in d{var}; at most 2 is allowed here")]
    DegreeTooHigh { var: usize, degree: u32 },

    #[error("depth {depth} out of range 0..={max}")]
    DepthOutOfRange { depth: usize, max: usize },

    #[error("no stable matrix found after {attempts} attempts")]
    RejectionBudget { attempts: usize },

    #[error("eigensolver failed to converge for the scaled matrix")]
    Eigensolver,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
