use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::modular::{PRIME, SQRT_NEG_ONE};
use crate::rational::Rational;

/// An exact coefficient field for [`MPoly`](crate::MPoly).
///
/// Besides the field operations, every implementor provides a residue map
/// into F_p (see [`crate::modular`]); the gcd code uses it to certify
/// coprimality cheaply.
pub trait Field: Clone + PartialEq + Eq + Hash + Debug + Display + Zero + One + Send + Sync + 'static {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Panics when `other` is zero.
    fn over(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_rational(r: Rational) -> Self;
    /// Image in F_p with i ↦ `sqrt_neg_one`, `None` when the value's
    /// denominator vanishes mod p.
    fn residue_in(&self, p: u64, sqrt_neg_one: u64) -> Option<u64>;

    /// Builds `re + im·i`; `None` when `im ≠ 0` and the field is real.
    fn from_parts(re: Rational, im: Rational) -> Option<Self>;

    /// Image under the default homomorphism into F_[`PRIME`].
    fn residue(&self) -> Option<u64> {
        self.residue_in(PRIME, SQRT_NEG_ONE)
    }

    /// √−1, for fields that contain it.
    fn imaginary_unit() -> Option<Self> {
        None
    }

    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n))
    }

    fn inv(&self) -> Self {
        Self::one().over(self)
    }
}

impl Field for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn over(&self, other: &Self) -> Self {
        self / other
    }
    fn negate(&self) -> Self {
        -self.clone()
    }
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn residue_in(&self, p: u64, _sqrt_neg_one: u64) -> Option<u64> {
        self.mod_prime(p)
    }
    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        im.is_zero().then_some(re)
    }
}
