use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCount(usize, usize),
    #[error("arity mismatch: expected {expected} images, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("quotient is infinite-dimensional: X{0} has no pure power in the ideal")]
    InfiniteDimensional(usize),
    #[error("algebra mismatch")]
    AlgebraMismatch,
    #[error("ill-defined homomorphism: generator {0} does not map into the target ideal")]
    IllDefined(String),
    #[error("image of X{0} has a nonzero constant term")]
    NonAugmented(usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("cap exceeded: {what} = {value}, cap {cap}")]
    CapExceeded { what: String, value: usize, cap: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inconsistent: {0}")]
    Inconsistent(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("point mismatch: {0}")]
    PointMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
