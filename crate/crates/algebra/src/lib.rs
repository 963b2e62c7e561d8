//! Exact sparse polynomial and rational-function arithmetic over the
//! Gaussian rationals ℚ(i), in a fixed global set of variables.
//!
//! The core types are generic over a coefficient [`Field`]; the aliases at
//! the bottom fix the field used throughout the rest of the workspace.

pub mod constraint;
pub mod error;
pub mod field;
pub mod gaussian;
pub mod gcd;
mod modgcd;
pub mod modular;
pub mod monomial;
mod parse;
pub mod poly;
pub mod ratfn;
pub mod rational;
pub mod var;

pub use constraint::{equals_mod_constraint, ConstraintIdeal};
pub use error::{DomainError, ParseError};
pub use field::Field;
pub use gaussian::GaussianRational;
pub use gcd::{gcd, gcd_list};
pub use monomial::Monomial;
pub use poly::MPoly;
pub use ratfn::{Bindings, RationalFunction};
pub use rational::Rational;
pub use var::{Var, VarSet, NVARS};

pub type Poly = MPoly<GaussianRational>;
pub type RatFn = RationalFunction<GaussianRational>;
pub type Constraint = ConstraintIdeal<GaussianRational>;
pub type Subst = Bindings<GaussianRational>;

/// Parses an expression, panicking on malformed input; meant for literals
/// embedded in source code.
pub fn rf(s: &str) -> RatFn {
    RatFn::parse(s).unwrap_or_else(|e| panic!("bad expression {s:?}: {e}"))
}
