use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("entries must be strictly increasing (d{index} = {prev} is not below d{next_index} = {next})", next_index = index + 1)]
    NotIncreasing {
        index: usize,
        prev: String,
        next: String,
    },

    #[error("degree sequence must start with 0, found {0}")]
    NonZeroStart(String),

    #[error("degree sequence needs codimension at least 1")]
    TooShort,

    #[error("Betti vector entries must be positive (B{index} = {value})")]
    NonPositiveBetti { index: usize, value: String },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("unsupported codimension {0}")]
    UnsupportedCodim(usize),

    #[error("zero polynomial has no finite root set")]
    ZeroPolynomial,

    #[error("unsupported component shape: {0}")]
    UnsupportedComponent(String),

    #[error("fixture error: {0}")]
    Fixture(String),

    #[error("search bound too large for exact scan: {0}")]
    BoundTooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
