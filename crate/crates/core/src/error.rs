use thiserror::Error;

use crate::ratfunc::RatFuncError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("basis of size {requested} exceeds the configured cap {cap}")]
    SizeCap { requested: u128, cap: u128 },
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("generator index {index} out of range for {context}")]
    IndexOutOfRange { index: i64, context: String },
    #[error("index sets overlap at position {0}")]
    Overlap(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error(transparent)]
    Field(#[from] RatFuncError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
