use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BtError {
    #[error("evaluation point must be invertible (q0 = 0 given)")]
    ZeroEvaluationPoint,
    #[error("scalars belong to different fields")]
    FieldMismatch,
    #[error("{0} is not a usable prime modulus")]
    NotPrime(u64),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("not a set partition of 1..{n}: {blocks:?}")]
    InvalidSetPartition { n: usize, blocks: Vec<Vec<usize>> },
    #[error("moebius({0}, {1}) undefined: first argument is not finer")]
    NotFiner(String, String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau exceeds tensor bounds: {0}")]
    BoundExceeded(String),
    #[error("malformed element: {0}")]
    MalformedElement(String),
}

pub type Result<T> = std::result::Result<T, BtError>;
