use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero quaternion")]
    DivisionByZero,
    #[error("direction must be a unit pure quaternion")]
    NotUnitPure,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix dimension must be at least {required}, got {actual}")]
    DimensionTooSmall { required: usize, actual: usize },
    #[error("expected a unit vector (norm {0:.3e})")]
    NotUnitVector(f64),
    #[error("expected a normal operator (commutator residual {0:.3e})")]
    NotNormal(f64),
    #[error("expected a complex operator in the standard basis (j/k residual {0:.3e})")]
    NotComplexOperator(f64),
    #[error("eigenvalue computation failed: {0}")]
    EigenFailure(String),
    #[error("random draw remained singular after {0} retries")]
    SingularDraw(usize),
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("entries of S must be nonnegative")]
    NegativeWeight,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid matrix file: {0}")]
    InvalidFile(String),
}
