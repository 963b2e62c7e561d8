use cp3_algebra::DomainError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    /// Unknown system, generator, chart or solution id.
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Domain(#[from] DomainError),
    /// A triangular substitution whose inverse could not be read off.
    #[error("substitution is not invertible by back-substitution: {0}")]
    NotInvertible(String),
    #[error("verification failed: {check}: {witness}")]
    Verification { check: String, witness: String },
}

pub(crate) fn usage(what: &str, name: &str) -> CoreError {
    CoreError::Usage(format!("unknown {what} {name:?}"))
}
