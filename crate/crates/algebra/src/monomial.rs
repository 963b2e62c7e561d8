use std::cmp::Ordering;
use std::fmt;

use crate::var::{Var, VarSet, NVARS};

/// Exponent vector over the global variable order.
///
/// The derived `Ord` compares total degree first and then exponents
/// lexicographically, which is exactly graded-lex with `x` largest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    deg: u32,
    exps: [u16; NVARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { deg: 0, exps: [0; NVARS] }
    }

    pub fn var(v: Var, e: u16) -> Self {
        let mut m = Monomial::one();
        m.exps[v.index()] = e;
        m.deg = e as u32;
        m
    }

    pub fn from_exps(exps: [u16; NVARS]) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, v: Var) -> u16 {
        self.exps[v.index()]
    }

    pub fn exps(&self) -> &[u16; NVARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn support(&self) -> VarSet {
        let mut s = VarSet::EMPTY;
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                s.insert(Var(i as u8));
            }
        }
        s
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).expect("monomial exponent overflow");
        }
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other.divides(self)`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a -= *b;
        }
        Monomial { deg: self.deg - other.deg, exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        Monomial::from_exps(exps)
    }

    pub fn set_exp(&mut self, v: Var, e: u16) {
        let old = self.exps[v.index()];
        self.exps[v.index()] = e;
        self.deg = self.deg - old as u32 + e as u32;
    }

    /// Copy with the exponent of `v` cleared.
    pub fn without(&self, v: Var) -> Monomial {
        let mut m = self.clone();
        m.set_exp(v, 0);
        m
    }

    /// Copy keeping only the exponents of variables in `keep`.
    pub fn restrict(&self, keep: VarSet) -> Monomial {
        let mut exps = [0u16; NVARS];
        for v in keep.iter() {
            exps[v.index()] = self.exps[v.index()];
        }
        Monomial::from_exps(exps)
    }

    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.cmp(other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            let v = Var(i as u8);
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grlex_order() {
        let x = Monomial::var(Var::X, 1);
        let y2 = Monomial::var(Var::Y, 2);
        let t = Monomial::var(Var::T, 1);
        assert!(y2 > x);
        assert!(x > t);
        assert!(x.mul(&t) > Monomial::var(Var::Y, 1).mul(&t));
        assert!(Monomial::one() < t);
    }

    #[test]
    fn divide_and_gcd() {
        let a = Monomial::var(Var::X, 3).mul(&Monomial::var(Var::T, 1));
        let b = Monomial::var(Var::X, 1);
        assert!(b.divides(&a));
        assert_eq!(a.div(&b), Monomial::var(Var::X, 2).mul(&Monomial::var(Var::T, 1)));
        assert_eq!(a.gcd(&Monomial::var(Var::X, 2)), Monomial::var(Var::X, 2));
    }
}
