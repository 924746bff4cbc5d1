use thiserror::Error;

/// Errors raised by the algebra operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },
    #[error("algebra must have positive total dimension")]
    EmptyAlgebra,
    #[error("product [{left},{right}] has the wrong parity for its result")]
    GradingViolation { left: String, right: String },
    #[error("vector is not homogeneous")]
    NotHomogeneous,
    #[error("the algebra is not nilpotent")]
    NotNilpotent,
    #[error("{block} block of the basis change is singular")]
    SingularMap { block: &'static str },
    #[error("right multiplication by the sampled even vector is not nilpotent")]
    NonNilpotentOperator,
    #[error("operation needs a nonzero even part")]
    NoEvenPart,
    #[error("no even vector outside [L0,L0] among the candidates")]
    NoCandidate,
    #[error("algebra is not zero-filiform")]
    NotZeroFiliform,
    #[error("no chain generator found for the {part} part")]
    NoChainGenerator { part: &'static str },
    #[error("index {index} out of range for basis of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
}
