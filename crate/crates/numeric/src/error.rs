use cp3_core::CoreError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    /// A denominator dropped below the pole guard.
    #[error("pole near t = {t}: |{what}| = {magnitude:e}")]
    Pole { t: f64, what: String, magnitude: f64 },
    #[error("step size underflow at t = {t} (h = {h:e})")]
    StepUnderflow { t: f64, h: f64 },
    /// The path from t0 to t1 would cross the fixed singularity t = 0.
    #[error("path from {t0} to {t1} crosses t = 0")]
    CrossesOrigin { t0: f64, t1: f64 },
    #[error("parameters violate the constraint by {0:e}")]
    Constraint(f64),
    #[error("expression uses {0}, which is neither a state variable nor a bound parameter")]
    Unbound(String),
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("csv: {0}")]
    Csv(String),
}

impl From<csv::Error> for NumericError {
    fn from(e: csv::Error) -> Self {
        NumericError::Csv(e.to_string())
    }
}
