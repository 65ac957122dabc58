use thiserror::Error;

use crate::Side;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid extension basis: {0}")]
    InvalidBasis(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("ambient dimension mismatch: expected {expected}, got {got}")]
    AmbientMismatch { expected: usize, got: usize },
    #[error("slice {index} is linearly dependent on the previous slices")]
    DependentSlices { index: usize },
    #[error("row {index} is linearly dependent on the previous rows")]
    DependentRows { index: usize },
    #[error("{what}: {size} exceeds the enumeration cap {cap}")]
    EnumerationTooLarge { what: &'static str, size: String, cap: u64 },
    #[error("code is {side}-degenerate: {detail}")]
    DegenerateCode { side: Side, detail: String },
    #[error("degenerate system: {0}")]
    DegenerateSystem(String),
    #[error("transform is singular")]
    SingularTransform,
    #[error("not an [n x n, n, n] code: {0}")]
    NotASemifieldCode(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
