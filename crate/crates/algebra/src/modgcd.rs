//! Modular multivariate gcd.
//!
//! Images over F_p are computed by Brown's dense evaluation/interpolation
//! scheme with early termination. A Gaussian coefficient a + b·i is
//! recovered from its images under both embeddings i ↦ ±√−1, then lifted
//! across primes by CRT and rational reconstruction. The lifted candidate is
//! accepted only after exact trial division, so a bad prime or an unlucky
//! evaluation point can cost time but never correctness.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::Field;
use crate::modular::{add_mod, gaussian_primes, inv_mod, mul_mod, pow_mod, sub_mod, UniPoly};
use crate::monomial::Monomial;
use crate::poly::MPoly;
use crate::rational::Rational;
use crate::var::{Var, VarSet, NVARS};

type Exps = [u16; NVARS];

const MAX_PRIMES: usize = 48;

fn primes() -> &'static [(u64, u64)] {
    static PRIMES: OnceLock<Vec<(u64, u64)>> = OnceLock::new();
    PRIMES.get_or_init(|| gaussian_primes(MAX_PRIMES))
}

/// Sparse polynomial over F_p in positional variables, lex-descending.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PPoly {
    terms: Vec<(Exps, u64)>,
}

impl PPoly {
    fn zero() -> Self {
        PPoly { terms: Vec::new() }
    }

    fn from_terms(mut v: Vec<(Exps, u64)>, p: u64) -> Self {
        v.sort_unstable_by_key(|a| std::cmp::Reverse(a.0));
        let mut out: Vec<(Exps, u64)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc = add_mod(*lc, c, p),
                _ => {
                    if matches!(out.last(), Some((_, 0))) {
                        out.pop();
                    }
                    out.push((e, c));
                }
            }
        }
        if matches!(out.last(), Some((_, 0))) {
            out.pop();
        }
        PPoly { terms: out }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lm(&self) -> Option<&Exps> {
        self.terms.first().map(|t| &t.0)
    }

    fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0)
    }

    fn scale(&self, c: u64, p: u64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        PPoly { terms: self.terms.iter().map(|(e, k)| (*e, mul_mod(*k, c, p))).collect() }
    }

    fn monic(&self, p: u64) -> Self {
        match self.terms.first() {
            None => Self::zero(),
            Some((_, 1)) => self.clone(),
            Some((_, c)) => self.scale(inv_mod(*c, p), p),
        }
    }

    fn add(&self, other: &Self, p: u64) -> Self {
        let mut v = self.terms.clone();
        v.extend_from_slice(&other.terms);
        Self::from_terms(v, p)
    }

    fn sub(&self, other: &Self, p: u64) -> Self {
        let mut v = self.terms.clone();
        v.extend(other.terms.iter().map(|(e, c)| (*e, sub_mod(0, *c, p))));
        Self::from_terms(v, p)
    }

    fn mul(&self, other: &Self, p: u64) -> Self {
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x += *y;
                }
                v.push((e, mul_mod(*ca, *cb, p)));
            }
        }
        Self::from_terms(v, p)
    }

    /// Substitutes `r` for position `k`.
    fn eval_at(&self, k: usize, r: u64, p: u64) -> Self {
        let v = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e2 = *e;
                let d = e2[k];
                e2[k] = 0;
                (e2, mul_mod(*c, pow_mod(r, d as u64, p), p))
            })
            .collect();
        Self::from_terms(v, p)
    }

    fn degree_at(&self, k: usize) -> usize {
        self.terms.iter().map(|(e, _)| e[k] as usize).max().unwrap_or(0)
    }

    /// Groups by the exponents other than position `k`; each group is a
    /// univariate polynomial in position `k`. Groups come lex-descending.
    fn groups_at(&self, k: usize) -> Vec<(Exps, UniPoly)> {
        let mut map: BTreeMap<Exps, Vec<u64>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = *e;
            let d = key[k] as usize;
            key[k] = 0;
            let slot = map.entry(key).or_default();
            if slot.len() <= d {
                slot.resize(d + 1, 0);
            }
            slot[d] = *c;
        }
        map.into_iter().rev().map(|(k, v)| (k, UniPoly::new(v))).collect()
    }

    fn from_groups(groups: &[(Exps, UniPoly)], k: usize, p: u64) -> Self {
        let mut v = Vec::new();
        for (key, u) in groups {
            for (d, &c) in u.coeffs.iter().enumerate() {
                if c != 0 {
                    let mut e = *key;
                    e[k] = d as u16;
                    v.push((e, c));
                }
            }
        }
        Self::from_terms(v, p)
    }

    fn univariate_at(u: &UniPoly, k: usize) -> Self {
        let terms = u
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| {
                let mut e = [0u16; NVARS];
                e[k] = d as u16;
                (e, c)
            })
            .collect();
        PPoly { terms }
    }

    fn div_exact(&self, d: &Self, p: u64) -> Option<Self> {
        let (dlm, dlc) = d.terms.first()?;
        let inv = inv_mod(*dlc, p);
        let mut rem: BTreeMap<Exps, u64> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            if m.iter().zip(dlm.iter()).any(|(a, b)| a < b) {
                return None;
            }
            let mut qm = m;
            for (x, y) in qm.iter_mut().zip(dlm.iter()) {
                *x -= *y;
            }
            let qc = mul_mod(c, inv, p);
            for (tm, tc) in &d.terms[1..] {
                let mut key = *tm;
                for (x, y) in key.iter_mut().zip(qm.iter()) {
                    *x += *y;
                }
                let delta = mul_mod(*tc, qc, p);
                let e = rem.entry(key).or_insert(0);
                *e = sub_mod(*e, delta, p);
                if *e == 0 {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        Some(PPoly { terms: quot })
    }
}

fn content_of_groups(groups: &[(Exps, UniPoly)], p: u64) -> UniPoly {
    let mut g = UniPoly::new(Vec::new());
    for (_, u) in groups {
        g = g.gcd(u, p);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Monic (lex) gcd over F_p of two nonzero polynomials in positions 0..=k,
/// or `None` if the interpolation does not settle.
fn gcd_rec(a: &PPoly, b: &PPoly, k: usize, p: u64) -> Option<PPoly> {
    if k == 0 {
        let ua = a.groups_at(0);
        let ub = b.groups_at(0);
        let g = ua[0].1.gcd(&ub[0].1, p);
        return Some(PPoly::univariate_at(&g, 0));
    }
    let mut ga = a.groups_at(k);
    let mut gb = b.groups_at(k);
    let ca = content_of_groups(&ga, p);
    let cb = content_of_groups(&gb, p);
    let c = ca.gcd(&cb, p);
    for (_, u) in ga.iter_mut() {
        *u = u.div_rem(&ca, p).0;
    }
    for (_, u) in gb.iter_mut() {
        *u = u.div_rem(&cb, p).0;
    }
    let pure = |g: &[(Exps, UniPoly)]| g.len() == 1 && g[0].0.iter().all(|&e| e == 0);
    if pure(&ga) || pure(&gb) {
        return Some(PPoly::univariate_at(&c, k));
    }
    let (lca, lcb) = (ga[0].1.clone(), gb[0].1.clone());
    let gamma = lca.gcd(&lcb, p);
    let app = PPoly::from_groups(&ga, k, p);
    let bpp = PPoly::from_groups(&gb, k, p);
    let bound = app.degree_at(k).min(bpp.degree_at(k)) + gamma.degree().unwrap_or(0);

    let mut interp: Option<PPoly> = None;
    let mut modulus = UniPoly::one();
    let mut lm_cur: Option<Exps> = None;
    let mut npts = 0usize;
    let mut r = 0u64;
    let mut tries = 0usize;
    loop {
        r += 1;
        tries += 1;
        if tries > 4 * (bound + 8) {
            return None;
        }
        let gr_val = gamma.eval(r, p);
        if gr_val == 0 || lca.eval(r, p) == 0 || lcb.eval(r, p) == 0 {
            continue;
        }
        let ar = app.eval_at(k, r, p);
        let br = bpp.eval_at(k, r, p);
        let img = gcd_rec(&ar, &br, k - 1, p)?;
        if img.is_constant() {
            return Some(PPoly::univariate_at(&c, k).monic(p));
        }
        let lm = *img.lm().expect("nonzero image");
        match lm_cur {
            Some(cur) if lm > cur => continue,
            Some(cur) if lm == cur => {}
            _ => {
                interp = None;
                modulus = UniPoly::one();
                npts = 0;
                lm_cur = Some(lm);
            }
        }
        let img = img.scale(gr_val, p);
        let mut stable = false;
        match interp.take() {
            None => interp = Some(img),
            Some(g) => {
                let diff = img.sub(&g.eval_at(k, r, p), p);
                if diff.is_zero() {
                    stable = true;
                    interp = Some(g);
                } else {
                    let scale = inv_mod(modulus.eval(r, p), p);
                    let q = PPoly::univariate_at(&modulus, k).scale(scale, p);
                    interp = Some(g.add(&diff.mul(&q, p), p));
                }
            }
        }
        modulus = modulus.mul(&UniPoly::new(vec![p - r, 1]), p);
        npts += 1;
        if stable || npts > bound {
            let g = interp.as_ref().expect("set above");
            let mut groups = g.groups_at(k);
            let cg = content_of_groups(&groups, p);
            for (_, u) in groups.iter_mut() {
                *u = u.div_rem(&cg, p).0;
            }
            let h = PPoly::from_groups(&groups, k, p).monic(p);
            if app.div_exact(&h, p).is_some() && bpp.div_exact(&h, p).is_some() {
                let full = h.mul(&PPoly::univariate_at(&c, k), p);
                return Some(full.monic(p));
            }
        }
    }
}

fn image<C: Field>(f: &MPoly<C>, vars: &[Var], p: u64, s: u64) -> Option<PPoly> {
    let mut terms = Vec::with_capacity(f.len());
    for (m, c) in f.terms() {
        let r = c.residue_in(p, s)?;
        if r == 0 {
            // a vanishing coefficient may hide the true leading term
            return None;
        }
        let mut e = [0u16; NVARS];
        for (i, v) in vars.iter().enumerate() {
            e[i] = m.exp(*v);
        }
        terms.push((e, r));
    }
    Some(PPoly::from_terms(terms, p))
}

fn rational_reconstruction(u: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound = (m / BigInt::from(2)).sqrt();
    let (mut r0, mut r1) = (m.clone(), u.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !r1.gcd(&t1).is_one() {
        return None;
    }
    Some(Rational::from_bigs(r1, t1))
}

struct Lift {
    lm: Exps,
    modulus: BigInt,
    re: BTreeMap<Exps, BigInt>,
    im: BTreeMap<Exps, BigInt>,
}

fn crt(old: &BigInt, m: &BigInt, new: u64, p: u64) -> BigInt {
    let old_p = old.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p");
    let m_p = m.mod_floor(&BigInt::from(p)).to_u64().expect("reduced mod p");
    let k = mul_mod(sub_mod(new, old_p, p), inv_mod(m_p, p), p);
    old + m * BigInt::from(k)
}

/// Gcd of two nonzero polynomials that both involve exactly `vars`.
pub(crate) fn modular_gcd<C: Field>(a: &MPoly<C>, b: &MPoly<C>, vars: VarSet) -> Option<MPoly<C>> {
    let order: Vec<Var> = vars.iter().collect();
    let k = order.len() - 1;
    let complex = C::imaginary_unit().is_some();
    let mut lift: Option<Lift> = None;
    for &(p, s) in primes() {
        let (Some(ap), Some(bp)) = (image(a, &order, p, s), image(b, &order, p, s)) else {
            continue;
        };
        let Some(g1) = gcd_rec(&ap, &bp, k, p) else { continue };
        if g1.is_constant() {
            return Some(MPoly::one());
        }
        let g2 = if complex {
            let (Some(am), Some(bm)) = (image(a, &order, p, p - s), image(b, &order, p, p - s))
            else {
                continue;
            };
            if am == ap && bm == bp {
                g1.clone()
            } else {
                let Some(g2) = gcd_rec(&am, &bm, k, p) else { continue };
                if g2.lm() != g1.lm() {
                    continue;
                }
                g2
            }
        } else {
            g1.clone()
        };
        let lm = *g1.lm().expect("nonconstant");
        let mut vals: BTreeMap<Exps, (u64, u64)> = BTreeMap::new();
        for (e, c) in &g1.terms {
            vals.entry(*e).or_default().0 = *c;
        }
        for (e, c) in &g2.terms {
            vals.entry(*e).or_default().1 = *c;
        }
        let inv2 = inv_mod(2, p);
        let inv2s = inv_mod(mul_mod(2, s, p), p);
        let parts: BTreeMap<Exps, (u64, u64)> = vals
            .into_iter()
            .map(|(e, (r1, r2))| {
                let re = mul_mod(add_mod(r1, r2, p), inv2, p);
                let im = mul_mod(sub_mod(r1, r2, p), inv2s, p);
                (e, (re, im))
            })
            .collect();
        match &mut lift {
            Some(l) if lm > l.lm => continue,
            Some(l) if lm == l.lm => {
                let keys: Vec<Exps> =
                    l.re.keys().chain(parts.keys()).copied().collect::<std::collections::BTreeSet<_>>().into_iter().collect();
                let zero = BigInt::zero();
                for e in keys {
                    let (nr, ni) = parts.get(&e).copied().unwrap_or((0, 0));
                    let or = l.re.get(&e).cloned().unwrap_or_else(|| zero.clone());
                    let oi = l.im.get(&e).cloned().unwrap_or_else(|| zero.clone());
                    l.re.insert(e, crt(&or, &l.modulus, nr, p));
                    l.im.insert(e, crt(&oi, &l.modulus, ni, p));
                }
                l.modulus *= BigInt::from(p);
            }
            _ => {
                lift = Some(Lift {
                    lm,
                    modulus: BigInt::from(p),
                    re: parts.iter().map(|(e, (r, _))| (*e, BigInt::from(*r))).collect(),
                    im: parts.iter().map(|(e, (_, i))| (*e, BigInt::from(*i))).collect(),
                });
            }
        }
        let l = lift.as_ref().expect("set above");
        if let Some(cand) = reconstruct::<C>(l, &order) {
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand.monic());
            }
        }
    }
    None
}

fn reconstruct<C: Field>(l: &Lift, order: &[Var]) -> Option<MPoly<C>> {
    let mut terms = Vec::with_capacity(l.re.len());
    for (e, re) in &l.re {
        let re = rational_reconstruction(re, &l.modulus)?;
        let im = rational_reconstruction(&l.im[e], &l.modulus)?;
        if re.is_zero() && im.is_zero() {
            continue;
        }
        let c = C::from_parts(re, im)?;
        let mut exps = [0u16; NVARS];
        for (i, v) in order.iter().enumerate() {
            exps[v.index()] = e[i];
        }
        terms.push((Monomial::from_exps(exps), c));
    }
    Some(MPoly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rf;

    #[test]
    fn recovers_gaussian_factor() {
        let g = rf("x^2*y*t - (2 + i)*x - 2*y/3").num().clone();
        let a = &g * rf("x*y + t^2 + 1").num();
        let b = &g * rf("y^2 - i*t*x").num();
        let h = modular_gcd(&a, &b, a.vars()).unwrap();
        assert_eq!(h, g.monic());
    }

    #[test]
    fn coprime_inputs() {
        let a = rf("x*y + t + 1").num().clone();
        let b = rf("x^2 - y*t").num().clone();
        assert!(modular_gcd(&a, &b, a.vars()).unwrap().is_one());
    }
}
