//! Reduced rational functions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};


use crate::error::DomainError;
use crate::field::Field;
use crate::gcd::gcd;
use crate::monomial::Monomial;
use crate::poly::MPoly;
use crate::var::{Var, VarSet};

/// `num / den` with `gcd(num, den) = 1` and `den` monic under graded-lex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<C: Field> {
    num: MPoly<C>,
    den: MPoly<C>,
}

/// A partial assignment of variables to rational functions.
pub type Bindings<C> = BTreeMap<Var, RationalFunction<C>>;

impl<C: Field> RationalFunction<C> {
    /// Reduces `num / den` to its canonical representative.
    pub fn new(num: MPoly<C>, den: MPoly<C>) -> Result<Self, DomainError> {
        if den.is_zero() {
            return Err(DomainError::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: MPoly<C>, den: MPoly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let c = den.leading_coeff();
            return if c.is_one() {
                RationalFunction { num, den }
            } else {
                RationalFunction { num: num.scale(&c.inv()), den: MPoly::one() }
            };
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Self::make_monic(n, d)
    }

    fn make_monic(num: MPoly<C>, den: MPoly<C>) -> Self {
        let lc = den.leading_coeff();
        if lc.is_one() {
            RationalFunction { num, den }
        } else {
            let inv = lc.inv();
            RationalFunction { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Re-reduces a value; a no-op on anything built through this API.
    pub fn normalize(&self) -> Self {
        Self::reduce(self.num.clone(), self.den.clone())
    }

    pub fn zero() -> Self {
        RationalFunction { num: MPoly::zero(), den: MPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        RationalFunction { num: MPoly::constant(c), den: MPoly::one() }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::constant(C::from_i64(n))
    }

    /// The rational number `n / d`; panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::constant(C::from_i64(n).over(&C::from_i64(d)))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MPoly::var(v))
    }

    pub fn from_poly(p: MPoly<C>) -> Self {
        RationalFunction { num: p, den: MPoly::one() }
    }

    pub fn num(&self) -> &MPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<C> {
        &self.den
    }

    pub fn into_parts(self) -> (MPoly<C>, MPoly<C>) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<C> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn as_poly(&self) -> Option<&MPoly<C>> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars().union(self.den.vars())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.num.contains_var(v) || self.den.contains_var(v)
    }

    /// True iff the denominator involves none of `vars`.
    pub fn is_polynomial_in(&self, vars: VarSet) -> bool {
        self.den.is_free_of(vars)
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        if self.den.is_one() {
            return RationalFunction { num: &(&self.num * &o.den) + &o.num, den: o.den.clone() };
        }
        if o.den.is_one() {
            return RationalFunction { num: &self.num + &(&o.num * &self.den), den: self.den.clone() };
        }
        let g = gcd(&self.den, &o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            return Self::make_monic(num, &self.den * &o.den);
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = o.den.div_exact(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&o.num * &b1);
        let g2 = gcd(&num, &g);
        let (num, g) = if g2.is_one() {
            (num, g)
        } else {
            (num.div_exact(&g2).expect("gcd divides"), g.div_exact(&g2).expect("gcd divides"))
        };
        Self::make_monic(num, &(&b1 * &d1) * &g)
    }

    pub fn neg_ref(&self) -> Self {
        RationalFunction { num: self.num.neg_ref(), den: self.den.clone() }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g1 = gcd(&self.num, &o.den);
        let g2 = gcd(&o.num, &self.den);
        let div = |p: &MPoly<C>, g: &MPoly<C>| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = &div(&self.num, &g1) * &div(&o.num, &g2);
        let den = &div(&self.den, &g2) * &div(&o.den, &g1);
        Self::make_monic(num, den)
    }

    pub fn recip(&self) -> Result<Self, DomainError> {
        if self.num.is_zero() {
            return Err(DomainError::ZeroDenominator);
        }
        Ok(Self::make_monic(self.den.clone(), self.num.clone()))
    }

    pub fn div_ref(&self, o: &Self) -> Result<Self, DomainError> {
        Ok(self.mul_ref(&o.recip()?))
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFunction { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: i32) -> Result<Self, DomainError> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let k = e.unsigned_abs();
        // powers of a reduced fraction stay reduced and monic
        Ok(RationalFunction { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn derivative(&self, v: Var) -> Self {
        let dn = self.num.derivative(v);
        if self.den.is_constant() {
            return RationalFunction { num: dn, den: self.den.clone() };
        }
        let dd = self.den.derivative(v);
        if dd.is_zero() {
            return Self::reduce(dn, self.den.clone());
        }
        // (n/d)' = (n' d - n d') / d²
        let num = &(&dn * &self.den) - &(&self.num * &dd);
        Self::reduce(num, self.den.pow(2))
    }

    /// Exact substitution, normalized. Unbound variables stay as they are.
    pub fn substitute(&self, b: &Bindings<C>) -> Result<Self, DomainError> {
        let bound: Vec<Var> = self.vars().iter().filter(|v| b.contains_key(v)).collect();
        if bound.is_empty() {
            return Ok(self.clone());
        }
        let (n, en) = substitute_poly(&self.num, &bound, b);
        let (d, ed) = substitute_poly(&self.den, &bound, b);
        if d.is_zero() {
            return Err(DomainError::ZeroDenominator);
        }
        let mut num = n;
        let mut den = d;
        for (i, v) in bound.iter().enumerate() {
            let bi = b[v].den();
            if bi.is_one() || en[i] == ed[i] {
                continue;
            }
            if ed[i] > en[i] {
                num = &num * &bi.pow((ed[i] - en[i]) as u32);
            } else {
                den = &den * &bi.pow((en[i] - ed[i]) as u32);
            }
        }
        Ok(Self::reduce(num, den))
    }

    /// Substitution of a single variable.
    pub fn substitute_var(&self, v: Var, value: &Self) -> Result<Self, DomainError> {
        let mut b = Bindings::new();
        b.insert(v, value.clone());
        self.substitute(&b)
    }

    /// Splits into powers of `v`: `self = Σ c_k v^k` with each `c_k` free of
    /// `v`. Requires the denominator to be `v^m` times something free of `v`.
    pub fn laurent_in(&self, v: Var) -> Result<BTreeMap<i32, Self>, DomainError> {
        let m = self.den.terms().iter().map(|(mono, _)| mono.exp(v)).min().unwrap_or(0);
        let rest = if m == 0 { self.den.clone() } else { self.den.div_monomial(&Monomial::var(v, m)) };
        if rest.contains_var(v) {
            return Err(DomainError::NotLaurent { var: v.name().to_string() });
        }
        let mut out = BTreeMap::new();
        for (k, c) in self.num.coefficients_in(v).into_iter().enumerate() {
            if !c.is_zero() {
                out.insert(k as i32 - m as i32, Self::reduce(c, rest.clone()));
            }
        }
        Ok(out)
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> RationalFunction<D> {
        RationalFunction::reduce(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

// Common-denominator Horner scheme: returns N and the exponents e_i with
// p(bindings) = N / Π b_i^{e_i}, where x_i ↦ a_i / b_i.
fn substitute_poly<C: Field>(p: &MPoly<C>, bound: &[Var], b: &Bindings<C>) -> (MPoly<C>, Vec<u16>) {
    let degs: Vec<u16> = bound.iter().map(|&v| p.degree_in(v)).collect();
    let mut a_pows: Vec<Vec<MPoly<C>>> = Vec::with_capacity(bound.len());
    let mut b_pows: Vec<Vec<MPoly<C>>> = Vec::with_capacity(bound.len());
    for (i, v) in bound.iter().enumerate() {
        let f = &b[v];
        a_pows.push(powers(f.num(), degs[i]));
        b_pows.push(if f.den().is_one() { Vec::new() } else { powers(f.den(), degs[i]) });
    }
    let n = horner(p, 0, bound, &degs, &a_pows, &b_pows);
    (n, degs)
}

fn powers<C: Field>(base: &MPoly<C>, d: u16) -> Vec<MPoly<C>> {
    let mut out = Vec::with_capacity(d as usize + 1);
    out.push(MPoly::one());
    for k in 1..=d as usize {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

fn horner<C: Field>(
    p: &MPoly<C>,
    i: usize,
    bound: &[Var],
    degs: &[u16],
    a_pows: &[Vec<MPoly<C>>],
    b_pows: &[Vec<MPoly<C>>],
) -> MPoly<C> {
    if i == bound.len() || p.is_zero() {
        // remaining levels contribute their full b-power
        let mut out = p.clone();
        if !p.is_zero() {
            for j in i..bound.len() {
                if !b_pows[j].is_empty() && degs[j] > 0 {
                    out = &out * &b_pows[j][degs[j] as usize];
                }
            }
        }
        return out;
    }
    if degs[i] == 0 {
        return horner(p, i + 1, bound, degs, a_pows, b_pows);
    }
    let coeffs = p.coefficients_in(bound[i]);
    let mut acc = MPoly::zero();
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = horner(c, i + 1, bound, degs, a_pows, b_pows);
        if k > 0 {
            term = &term * &a_pows[i][k];
        }
        let bk = degs[i] as usize - k;
        if !b_pows[i].is_empty() && bk > 0 {
            term = &term * &b_pows[i][bk];
        }
        acc = &acc + &term;
    }
    acc
}

impl<C: Field> Default for RationalFunction<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Field> From<MPoly<C>> for RationalFunction<C> {
    fn from(p: MPoly<C>) -> Self {
        Self::from_poly(p)
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $f:ident) => {
        impl<C: Field> $tr for RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: Self) -> Self {
                self.$f(&rhs)
            }
        }
        impl<'a, C: Field> $tr<&'a RationalFunction<C>> for &'a RationalFunction<C> {
            type Output = RationalFunction<C>;
            fn $m(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
                self.$f(rhs)
            }
        }
    };
}
binop!(Add, add, add_ref);
binop!(Sub, sub, sub_ref);
binop!(Mul, mul, mul_ref);

/// Panics on division by zero; use [`RationalFunction::div_ref`] to handle it.
impl<C: Field> Div for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn div(self, rhs: Self) -> Self {
        self.div_ref(&rhs).expect("division by zero rational function")
    }
}

impl<'a, C: Field> Div<&'a RationalFunction<C>> for &'a RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn div(self, rhs: &RationalFunction<C>) -> RationalFunction<C> {
        self.div_ref(rhs).expect("division by zero rational function")
    }
}

impl<C: Field> Neg for RationalFunction<C> {
    type Output = RationalFunction<C>;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<C: Field> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = if self.num.len() > 1 { format!("({})", self.num) } else { self.num.to_string() };
        let d = self.den.to_string();
        // a product like q^3*t still needs parentheses after '/'
        let d = if d.contains(['+', '-', '*', ' ']) { format!("({d})") } else { d };
        write!(f, "{n}/{d}")
    }
}

impl<C: Field> fmt::Debug for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
