use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomainError {
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("denominator is not a power of {var} times a {var}-free factor")]
    NotLaurent { var: String },
    #[error("constraint relation must be linear with a nonzero coefficient on {var}")]
    BadConstraint { var: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}
