//! Sparse multivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::Field;
use crate::monomial::Monomial;
use crate::var::{Var, VarSet};

/// Sparse polynomial over a [`Field`]; terms are kept sorted by descending
/// graded-lex order with no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<C: Field> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Field> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    pub fn var(v: Var) -> Self {
        MPoly { terms: vec![(Monomial::var(v, 1), C::one())] }
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            MPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, combining duplicates and dropping zeros.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut v: Vec<(Monomial, C)> = terms.into_iter().collect();
        v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self::from_sorted_with_duplicates(v)
    }

    fn from_sorted_with_duplicates(v: Vec<(Monomial, C)>) -> Self {
        let mut out: Vec<(Monomial, C)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.plus(&c),
                _ => {
                    if let Some((_, lc)) = out.last() {
                        if lc.is_zero() {
                            out.pop();
                        }
                    }
                    out.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = out.last() {
            if lc.is_zero() {
                out.pop();
            }
        }
        MPoly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn leading_term(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms.first().map(|t| t.1.clone()).unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    /// Total degree counted only over the variables in `vars`.
    pub fn degree_in_set(&self, vars: VarSet) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| vars.iter().map(|v| m.exp(v) as u32).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn vars(&self) -> VarSet {
        self.terms.iter().fold(VarSet::EMPTY, |s, (m, _)| s.union(m.support()))
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) != 0)
    }

    pub fn is_free_of(&self, vars: VarSet) -> bool {
        self.vars().intersection(vars).is_empty()
    }

    /// Largest monomial dividing every term (`1` for the zero polynomial).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        let mut g = first.clone();
        for (m, _) in it {
            if g.is_one() {
                break;
            }
            g = g.gcd(m);
        }
        g
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.clone(), k.times(c))).collect() }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.mul(mono), k.times(c))).collect() }
    }

    /// Divides every term by `mono`, which must divide each of them.
    pub fn div_monomial(&self, mono: &Monomial) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, k)| (m.div(mono), k.clone())).collect() }
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, lc)) if lc.is_one() => self.clone(),
            Some((_, lc)) => self.scale(&lc.inv()),
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a[i].1.plus(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        MPoly { terms: out }
    }

    pub fn neg_ref(&self) -> Self {
        MPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.negate())).collect() }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let (small, large) =
            if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_monomial(m, c);
        }
        let mut prods = Vec::with_capacity(small.terms.len() * large.terms.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                prods.push((ma.mul(mb), ca.times(cb)));
            }
        }
        prods.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Self::from_sorted_with_duplicates(prods)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: Var) -> Self {
        let terms: Vec<(Monomial, C)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(v) > 0)
            .map(|(m, c)| {
                let e = m.exp(v);
                let mut m2 = m.clone();
                m2.set_exp(v, e - 1);
                (m2, c.times(&C::from_i64(e as i64)))
            })
            .collect();
        // lowering one exponent can reorder terms
        Self::from_terms(terms)
    }

    /// Coefficients as a polynomial in `v`: entry `k` multiplies `v^k`.
    pub fn coefficients_in(&self, v: Var) -> Vec<Self> {
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(v) as usize].push((m.without(v), c.clone()));
        }
        // removing v from a sorted list keeps each bucket sorted only up to
        // ties in v's degree, which all land in one bucket, so resort
        buckets.into_iter().map(Self::from_terms).collect()
    }

    /// Inverse of [`coefficients_in`](Self::coefficients_in).
    pub fn from_coefficients_in(v: Var, coeffs: &[Self]) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            let vk = Monomial::var(v, k as u16);
            for (m, a) in &c.terms {
                terms.push((m.mul(&vk), a.clone()));
            }
        }
        Self::from_terms(terms)
    }

    /// Groups terms by their monomial in `vars`; returns the coefficient
    /// polynomials (free of `vars`) in descending order of that monomial.
    pub fn coefficients_wrt(&self, vars: VarSet) -> Vec<(Monomial, Self)> {
        let mut groups: BTreeMap<Monomial, Vec<(Monomial, C)>> = BTreeMap::new();
        let rest = VarSet(!vars.0);
        for (m, c) in &self.terms {
            groups
                .entry(m.restrict(vars))
                .or_default()
                .push((m.restrict(rest), c.clone()));
        }
        groups.into_iter().rev().map(|(k, ts)| (k, Self::from_terms(ts))).collect()
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.inv();
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                if !dm.divides(m) {
                    return None;
                }
                out.push((m.div(dm), c.times(&inv)));
            }
            return Some(MPoly { terms: out });
        }
        if d.total_degree() > self.total_degree() {
            return None;
        }
        let (dlm, dlc) = &d.terms[0];
        let inv = dlc.inv();
        let mut rem: BTreeMap<Monomial, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, C)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if !dlm.divides(&m) {
                return None;
            }
            let qm = m.div(dlm);
            let qc = c.times(&inv);
            for (tm, tc) in &d.terms[1..] {
                let key = tm.mul(&qm);
                let delta = tc.times(&qc);
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get().minus(&delta);
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(delta.negate());
                    }
                }
            }
            quot.push((qm, qc));
        }
        // quotient terms come out in descending order already
        Some(MPoly { terms: quot })
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Evaluates at a point in any ring reachable from the coefficients.
    pub fn eval<T>(&self, coeff: impl Fn(&C) -> T, point: impl Fn(Var) -> T) -> T
    where
        T: Clone + num_traits::Zero + num_traits::One + std::ops::Mul<Output = T>,
    {
        let mut cache: Vec<Option<T>> = vec![None; crate::var::NVARS];
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = coeff(c);
            for v in m.support().iter() {
                let base = cache[v.index()].get_or_insert_with(|| point(v)).clone();
                let mut p = T::one();
                for _ in 0..m.exp(v) {
                    p = p * base.clone();
                }
                term = term * p;
            }
            acc = acc + term;
        }
        acc
    }
}

impl<C: Field> Default for MPoly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Field> From<C> for MPoly<C> {
    fn from(c: C) -> Self {
        Self::constant(c)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<C: Field> $tr for MPoly<C> {
            type Output = MPoly<C>;
            fn $m(self, rhs: Self) -> Self {
                self.$f(&rhs)
            }
        }
        impl<'a, C: Field> $tr<&'a MPoly<C>> for &'a MPoly<C> {
            type Output = MPoly<C>;
            fn $m(self, rhs: &MPoly<C>) -> MPoly<C> {
                self.$f(rhs)
            }
        }
    };
}
binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

impl<C: Field> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<C: Field> Zero for MPoly<C> {
    fn zero() -> Self {
        MPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Field> One for MPoly<C> {
    fn one() -> Self {
        MPoly::one()
    }
}

impl<C: Field> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.is_one() {
                c.to_string()
            } else if c.is_one() {
                m.to_string()
            } else if c.negate().is_one() {
                format!("-{m}")
            } else {
                format!("{c}*{m}")
            };
            if i == 0 {
                f.write_str(&body)?;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl<C: Field> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
