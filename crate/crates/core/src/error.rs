use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("Jacobi identity fails on (e{}, e{}, e{})", .i + 1, .j + 1, .k + 1)]
    Jacobi { i: usize, j: usize, k: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("map is not a derivation")]
    NotADerivation,

    #[error("map is not skew-symmetric for the metric")]
    NotSkew,

    #[error("bilinear form is degenerate")]
    DegenerateForm,

    #[error("bilinear form is not symmetric")]
    NotSymmetric,

    #[error("bilinear form is not ad-invariant")]
    NotAdInvariant,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("proof script step {step}: {msg}")]
    Script { step: usize, msg: String },

    #[error("catalog: {0}")]
    Catalog(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
