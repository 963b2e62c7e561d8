//! Numeric integration of the complex flows, with trajectory-level
//! checks of Bäcklund symmetries and first integrals.
//!
//! Everything is generic over the real scalar `F`; the `*64` aliases fix
//! it to `f64`.

use std::fmt::{Debug, Display, LowerExp};

pub mod checks;
pub mod compile;
pub mod error;
pub mod export;
pub mod flow;
pub mod integrate;

pub use checks::{integral_drift_check, symmetry_commute_check, DriftReport, CommuteReport};
pub use compile::Compiled;
pub use error::NumericError;
pub use export::{write_csv, csv_header};
pub use flow::Flow;
pub use integrate::{integrate, integrate_fixed, NumericConfig, Trajectory};

/// Real scalar used for time and for both parts of complex states.
pub trait Real: num_traits::Float + Display + LowerExp + Debug + Send + Sync + 'static {}

impl<T: num_traits::Float + Display + LowerExp + Debug + Send + Sync + 'static> Real for T {}

pub type C64 = num_complex::Complex<f64>;
pub type Config64 = NumericConfig<f64>;
pub type Trajectory64 = Trajectory<f64>;
pub type Flow64 = Flow<f64>;

/// Commuting checks pass below this discrepancy.
pub const COMMUTE_THRESHOLD: f64 = 1e-6;
/// Drift checks pass below this relative drift.
pub const DRIFT_THRESHOLD: f64 = 1e-8;
