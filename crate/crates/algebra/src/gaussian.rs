//! Gaussian rationals a + b·i with a, b ∈ ℚ.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::Field;
use crate::modular::{add_mod, mul_mod};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        Self::real(Rational::new(n, d))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
    fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }
}

impl Field for GaussianRational {
    fn plus(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn minus(&self, o: &Self) -> Self {
        GaussianRational { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn times(&self, o: &Self) -> Self {
        if self.im.is_zero() && o.im.is_zero() {
            return Self::real(&self.re * &o.re);
        }
        let re = &(&self.re * &o.re) - &(&self.im * &o.im);
        let im = &(&self.re * &o.im) + &(&self.im * &o.re);
        GaussianRational { re, im }
    }

    fn over(&self, o: &Self) -> Self {
        if o.im.is_zero() {
            return GaussianRational { re: &self.re / &o.re, im: &self.im / &o.re };
        }
        let n = o.norm();
        let num = self.times(&o.conj());
        GaussianRational { re: &num.re / &n, im: &num.im / &n }
    }

    fn negate(&self) -> Self {
        GaussianRational { re: -self.re.clone(), im: -self.im.clone() }
    }

    fn from_rational(r: Rational) -> Self {
        Self::real(r)
    }

    fn imaginary_unit() -> Option<Self> {
        Some(Self::i())
    }

    fn residue_in(&self, p: u64, sqrt_neg_one: u64) -> Option<u64> {
        let re = self.re.mod_prime(p)?;
        if self.im.is_zero() {
            return Some(re);
        }
        let im = self.im.mod_prime(p)?;
        Some(add_mod(re, mul_mod(im, sqrt_neg_one, p), p))
    }

    fn from_parts(re: Rational, im: Rational) -> Option<Self> {
        Some(GaussianRational { re, im })
    }
}

macro_rules! ops {
    ($tr:ident, $m:ident, $f:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: Self) -> Self {
                self.$f(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for &'a GaussianRational {
            type Output = GaussianRational;
            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                self.$f(rhs)
            }
        }
    };
}
ops!(Add, add, plus);
ops!(Sub, sub, minus);
ops!(Mul, mul, times);
ops!(Div, div, over);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        self.negate()
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::real(Rational::from_integer(n))
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => write!(f, "i"),
            (true, false) if (-self.im.clone()).is_one() => write!(f, "-i"),
            (true, false) => write!(f, "{}*i", self.im),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "({}-{}*i)", self.re, self.im.abs())
                } else {
                    write!(f, "({}+{}*i)", self.re, self.im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modular::PRIME;

    fn g(a: i64, b: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_integer(a), Rational::from_integer(b))
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = GaussianRational::i();
        assert_eq!(i.times(&i), g(-1, 0));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = g(3, -2);
        let b = g(1, 4);
        assert_eq!(a.times(&b).over(&b), a);
        assert_eq!(b.inv().times(&b), GaussianRational::one());
    }

    #[test]
    fn residue_is_a_ring_homomorphism() {
        let a = GaussianRational::new(Rational::new(1, 3), Rational::new(-5, 7));
        let b = g(2, 9);
        let lhs = a.times(&b).residue().unwrap();
        let rhs = mul_mod(a.residue().unwrap(), b.residue().unwrap(), PRIME);
        assert_eq!(lhs, rhs);
        let lhs = a.plus(&b).residue().unwrap();
        assert_eq!(lhs, add_mod(a.residue().unwrap(), b.residue().unwrap(), PRIME));
    }
}
