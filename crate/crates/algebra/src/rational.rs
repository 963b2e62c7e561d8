//! Arbitrary-precision rationals with an inline fast path for word-sized values.
//!
//! Nearly every coefficient met in practice fits in an `i64` numerator and
//! denominator, so `Rational` keeps those inline and only promotes to a
//! `BigRational` when an intermediate product overflows. Canonical form is
//! maintained at all times: lowest terms, positive denominator, and the small
//! representation whenever the value fits, which makes structural equality
//! and hashing agree with numeric equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone)]
enum Repr {
    Small(i64, i64),
    Big(BigRational),
}

#[derive(Clone)]
pub struct Rational(Repr);

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    pub fn from_integer(n: i64) -> Self {
        Rational(Repr::Small(n, 1))
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut n, mut d) = if den < 0 { (-num, -den) } else { (num, den) };
        let g = gcd_u128(n.unsigned_abs(), d as u128) as i128;
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Rational(Repr::Small(0, 1));
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(BigRational::new_raw(BigInt::from(n), BigInt::from(d)))),
        }
    }

    /// Wraps an already reduced big rational, demoting it when it fits.
    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rational(Repr::Small(n, d)),
            _ => Rational(Repr::Big(r)),
        }
    }

    pub fn from_bigs(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(num, den))
    }

    pub fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(n, _) => *n < 0,
            Repr::Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Repr::Big(r) => Self::from_big(r.recip()),
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Small(n, d) => *n as f64 / *d as f64,
            Repr::Big(r) => r.to_f64().unwrap_or(f64::NAN),
        }
    }

    /// Residue modulo a prime `p`; `None` when `p` divides the denominator.
    pub fn mod_prime(&self, p: u64) -> Option<u64> {
        let (n, d) = match &self.0 {
            Repr::Small(n, d) => (
                (*n as i128).rem_euclid(p as i128) as u64,
                (*d as i128).rem_euclid(p as i128) as u64,
            ),
            Repr::Big(r) => {
                let pb = BigInt::from(p);
                let n = r.numer().mod_floor(&pb).to_u64().unwrap();
                let d = r.denom().mod_floor(&pb).to_u64().unwrap();
                (n, d)
            }
        };
        if d == 0 {
            return None;
        }
        Some(crate::modular::mul_mod(n, crate::modular::inv_mod(d, p), p))
    }

    pub fn pow(&self, e: i32) -> Self {
        if e < 0 {
            return self.recip().pow(-e);
        }
        let mut acc = Rational::one();
        let mut base = self.clone();
        let mut e = e as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn is_one(&self) -> bool {
        matches!(self.0, Repr::Small(1, 1))
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(a), Repr::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.numer().hash(state);
                r.denom().hash(state);
            }
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d + c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_sub(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rational::from_i128(a * d - c * b, b * d)
            }
            _ => Rational::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_mul(*c) {
                        return Rational(Repr::Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                // cross-cancel first so the i128 product cannot overflow
                let g1 = gcd_u128(a.unsigned_abs(), d as u128).max(1) as i128;
                let g2 = gcd_u128(c.unsigned_abs(), b as u128).max(1) as i128;
                Rational::from_i128((a / g1) * (c / g2), (b / g2) * (d / g1))
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl<'a> Div<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero rational");
        self * &rhs.recip()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => match n.checked_neg() {
                Some(m) => Rational(Repr::Small(m, d)),
                None => Rational::from_i128(-(n as i128), d as i128),
            },
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, 1) => write!(f, "{n}"),
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal `{0}`")]
pub struct ParseRationalError(pub String);

impl FromStr for Rational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_bigs(n, d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
        assert_eq!(Rational::new(0, -5), Rational::zero());
        assert_eq!(Rational::new(6, 3).to_string(), "2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_integer(i64::MAX);
        let sq = &big * &big;
        assert_eq!(sq.numer(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small(..)));
    }

    #[test]
    fn parse_and_mod() {
        let r: Rational = "-3/6".parse().unwrap();
        assert_eq!(r, Rational::new(-1, 2));
        let p = 13;
        // -1/2 mod 13 = 6
        assert_eq!(r.mod_prime(p), Some(6));
        assert_eq!(Rational::new(1, 13).mod_prime(13), None);
    }
}
