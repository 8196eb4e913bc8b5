use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("polynomial has the same sign at both ends of [{lo}, {hi}]")]
    SameSign { lo: String, hi: String },

    #[error("invalid interval: {0}")]
    InvalidInterval(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("invalid covariance: {0}")]
    InvalidCovariance(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("hypergeometric series does not terminate: a = {0} is not a nonpositive integer")]
    NonTerminating(String),

    #[error("hypergeometric denominator (c)_{index} vanishes before termination (c = {c})")]
    PoleBeforeTermination { c: String, index: usize },

    #[error("derivative has no sign change on {0}")]
    NoSignChange(String),

    #[error("unequal variances: {0} != {1}")]
    UnequalVariances(String, String),

    #[error("invalid degenerate triple: {0}")]
    InvalidTriple(String),

    #[error("(X, Y) covariance block is singular")]
    SingularSubBlock,

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
