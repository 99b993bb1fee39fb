use crate::arith::ArithError;

/// Errors raised by library operations. Mathematical failures of a
/// verification are not errors; they are reported in the returned reports.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("operands belong to different Hopf algebras ({left} vs {right})")]
    AlgebraMismatch { left: String, right: String },
    #[error("{what} requires n >= {min}, got {n}")]
    InvalidOrder { what: &'static str, n: i64, min: i64 },
    #[error("{k} does not divide {n}")]
    NotADivisor { n: i64, k: i64 },
    #[error("group-likes do not form a cyclic group: {0}")]
    NonCyclicGrouplikes(String),
    #[error("branch limit of {limit} exceeded")]
    BranchLimitExceeded { limit: usize },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("malformed Hopf algebra data: {0}")]
    Malformed(String),
    #[error("Hopf algebra failed validation: {0}")]
    Validation(String),
    #[error("JSON: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
