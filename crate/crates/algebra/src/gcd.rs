//! Multivariate gcd over an exact field.
//!
//! Strategy, cheapest first:
//! 1. strip the monomial content;
//! 2. variables occurring in only one argument cannot occur in the gcd, so
//!    the gcd is the gcd of the coefficients with respect to them;
//! 3. trial division;
//! 4. modular images: evaluate all but one variable at a random point of
//!    F_p and take a univariate gcd. Degree zero there proves the true gcd is
//!    free of that variable (when the leading coefficient survives). Proven
//!    free variables are again split off into coefficients;
//! 5. what remains goes to the modular algorithm in [`crate::modgcd`], with a
//!    subresultant sequence as the fallback should that run out of primes.
//!
//! Every branch is exact; the random points only decide how much work is
//! skipped.

use std::cell::RefCell;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::field::Field;
use crate::modular::{add_mod, mul_mod, pow_mod, UniPoly, PRIME};
use crate::monomial::Monomial;
use crate::poly::MPoly;
use crate::var::{Var, VarSet, NVARS};

thread_local! {
    static RNG: RefCell<StdRng> = RefCell::new(StdRng::seed_from_u64(0x5eed_cafe));
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd<C: Field>(a: &MPoly<C>, b: &MPoly<C>) -> MPoly<C> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let gm = ma.gcd(&mb);
    let a2 = if ma.is_one() { a.clone() } else { a.div_monomial(&ma) };
    let b2 = if mb.is_one() { b.clone() } else { b.div_monomial(&mb) };
    let core = gcd_primitive_monomial(&a2, &b2);
    if gm.is_one() {
        core
    } else {
        core.mul_monomial(&gm, &C::one())
    }
}

/// Monic gcd of a list; the empty list gives 0.
pub fn gcd_list<C: Field>(polys: &[MPoly<C>]) -> MPoly<C> {
    let mut sorted: Vec<&MPoly<C>> = polys.iter().filter(|p| !p.is_zero()).collect();
    sorted.sort_by_key(|p| (p.total_degree(), p.len()));
    let mut it = sorted.into_iter();
    let Some(first) = it.next() else {
        return MPoly::zero();
    };
    let mut g = first.monic();
    for p in it {
        if g.is_one() {
            break;
        }
        g = gcd(&g, p);
    }
    g
}

// Both arguments are nonzero with trivial monomial content.
fn gcd_primitive_monomial<C: Field>(a: &MPoly<C>, b: &MPoly<C>) -> MPoly<C> {
    if a.is_constant() || b.is_constant() {
        return MPoly::one();
    }
    let (am, bm) = (a.monic(), b.monic());
    if am == bm {
        return am;
    }
    let (va, vb) = (a.vars(), b.vars());
    let lonely = va.minus(vb).union(vb.minus(va));
    if !lonely.is_empty() {
        return gcd_of_coefficients(a, b, lonely);
    }
    if let Some(g) = trial_division(a, b) {
        return g;
    }
    let free = certify_free_vars(a, b, va);
    if free == va {
        return MPoly::one();
    }
    if !free.is_empty() {
        return gcd_of_coefficients(a, b, free);
    }
    crate::modgcd::modular_gcd(a, b, va).unwrap_or_else(|| prs_gcd(a, b, va))
}

fn gcd_of_coefficients<C: Field>(a: &MPoly<C>, b: &MPoly<C>, vars: VarSet) -> MPoly<C> {
    let mut coeffs: Vec<MPoly<C>> = a.coefficients_wrt(vars).into_iter().map(|(_, c)| c).collect();
    coeffs.extend(b.coefficients_wrt(vars).into_iter().map(|(_, c)| c));
    gcd_list(&coeffs)
}

fn trial_division<C: Field>(a: &MPoly<C>, b: &MPoly<C>) -> Option<MPoly<C>> {
    let (small, large) = if (b.total_degree(), b.len()) <= (a.total_degree(), a.len()) {
        (b, a)
    } else {
        (a, b)
    };
    for v in small.vars().iter() {
        if small.degree_in(v) > large.degree_in(v) {
            return None;
        }
    }
    large.div_exact(small).map(|_| small.monic())
}

// Residues of the coefficients, or None if some denominator dies mod p.
fn residues<C: Field>(p: &MPoly<C>) -> Option<Vec<u64>> {
    p.terms().iter().map(|(_, c)| c.residue()).collect()
}

fn univariate_image(
    p: &[(Monomial, u64)],
    v: Var,
    point: &[u64; NVARS],
    deg: usize,
) -> UniPoly {
    let mut coeffs = vec![0u64; deg + 1];
    for (m, r) in p {
        let mut val = *r;
        for u in m.support().iter() {
            if u != v {
                val = mul_mod(val, pow_mod(point[u.index()], m.exp(u) as u64, PRIME), PRIME);
            }
        }
        let k = m.exp(v) as usize;
        coeffs[k] = add_mod(coeffs[k], val, PRIME);
    }
    UniPoly::new(coeffs)
}

/// Variables in `vars` that the gcd of `a` and `b` provably does not involve.
fn certify_free_vars<C: Field>(a: &MPoly<C>, b: &MPoly<C>, vars: VarSet) -> VarSet {
    let (Some(ra), Some(rb)) = (residues(a), residues(b)) else {
        return VarSet::EMPTY;
    };
    let ta: Vec<(Monomial, u64)> = a.terms().iter().map(|(m, _)| m.clone()).zip(ra).collect();
    let tb: Vec<(Monomial, u64)> = b.terms().iter().map(|(m, _)| m.clone()).zip(rb).collect();
    let mut free = VarSet::EMPTY;
    for attempt in 0..2 {
        let mut point = [0u64; NVARS];
        RNG.with(|rng| {
            let mut rng = rng.borrow_mut();
            for slot in point.iter_mut() {
                *slot = rng.gen_range(1..PRIME);
            }
        });
        for v in vars.minus(free).iter() {
            let (da, db) = (a.degree_in(v) as usize, b.degree_in(v) as usize);
            let ia = univariate_image(&ta, v, &point, da);
            let ib = univariate_image(&tb, v, &point, db);
            if ia.degree() != Some(da) || ib.degree() != Some(db) {
                continue;
            }
            if ia.gcd(&ib, PRIME).degree() == Some(0) {
                free.insert(v);
            }
        }
        // a second point only helps if the first lost a leading coefficient
        if attempt == 0 && free == vars {
            break;
        }
    }
    free
}

fn leading_in<C: Field>(p: &MPoly<C>, v: Var) -> (u16, MPoly<C>) {
    let d = p.degree_in(v);
    let lc = MPoly::from_terms(
        p.terms().iter().filter(|(m, _)| m.exp(v) == d).map(|(m, c)| (m.without(v), c.clone())),
    );
    (d, lc)
}

fn content_in<C: Field>(p: &MPoly<C>, v: Var) -> MPoly<C> {
    gcd_list(&p.coefficients_in(v))
}

fn primitive_part_in<C: Field>(p: &MPoly<C>, v: Var) -> MPoly<C> {
    let c = content_in(p, v);
    if c.is_constant() {
        return p.monic();
    }
    p.div_exact(&c).expect("content divides").monic()
}

// lc(b)^(deg a - deg b + 1) · a mod b, in v
fn pseudo_remainder<C: Field>(a: &MPoly<C>, b: &MPoly<C>, v: Var) -> MPoly<C> {
    let (db, lcb) = leading_in(b, v);
    let da = a.degree_in(v);
    let mut steps_left = (da + 1).saturating_sub(db) as u32;
    let mut r = a.clone();
    loop {
        if r.is_zero() {
            return r;
        }
        let (dr, lcr) = leading_in(&r, v);
        if dr < db {
            break;
        }
        let shift = Monomial::var(v, dr - db);
        let sub = (&lcr * b).mul_monomial(&shift, &C::one());
        r = &(&r * &lcb) - &sub;
        steps_left -= 1;
    }
    if steps_left > 0 {
        r = &r * &lcb.pow(steps_left);
    }
    r
}

// Subresultant PRS in the variable of lowest degree.
fn prs_gcd<C: Field>(a: &MPoly<C>, b: &MPoly<C>, vars: VarSet) -> MPoly<C> {
    let v = vars
        .iter()
        .min_by_key(|&v| (a.degree_in(v).max(b.degree_in(v)), v.0))
        .expect("nonconstant polynomials have variables");
    let ca = content_in(a, v);
    let cb = content_in(b, v);
    let c = gcd(&ca, &cb);
    let strip = |p: &MPoly<C>, k: &MPoly<C>| if k.is_constant() { p.clone() } else { p.div_exact(k).expect("content divides") };
    let mut f = strip(a, &ca);
    let mut g = strip(b, &cb);
    if f.degree_in(v) < g.degree_in(v) {
        std::mem::swap(&mut f, &mut g);
    }
    let mut sg = MPoly::<C>::one();
    let mut sh = MPoly::<C>::one();
    loop {
        let delta = (f.degree_in(v) - g.degree_in(v)) as u32;
        let r = pseudo_remainder(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            g = MPoly::one();
            break;
        }
        let divisor = &sg * &sh.pow(delta);
        f = g;
        g = r.div_exact(&divisor).expect("subresultant division is exact");
        sg = leading_in(&f, v).1;
        sh = if delta == 0 {
            sh
        } else {
            let num = sg.pow(delta);
            num.div_exact(&sh.pow(delta - 1)).expect("subresultant division is exact")
        };
    }
    let g = if g.is_constant() { g } else { primitive_part_in(&g, v) };
    (&c * &g).monic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = MPoly<Rational>;

    fn v(x: Var) -> P {
        P::var(x)
    }

    #[test]
    fn shared_factor_is_found() {
        let f = &v(Var::X) * &v(Var::Y) + P::from_i64(1);
        let a = &f * &(&v(Var::X) - &v(Var::T));
        let b = &f * &(&v(Var::Y) + &v(Var::T).pow(2));
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn coprime_and_monomial_content() {
        let a = &v(Var::X).pow(2) * &(&v(Var::Y) + &P::from_i64(1));
        let b = &v(Var::X) * &(&v(Var::Y) - &P::from_i64(1));
        assert_eq!(gcd(&a, &b), v(Var::X));
    }

    #[test]
    fn prs_path() {
        // factors sharing every variable defeat the cheap paths
        let f = &(&v(Var::X) + &v(Var::Y)) + &v(Var::Z);
        let g1 = &(&v(Var::X) * &v(Var::Y)) + &(&v(Var::Z) + &P::from_i64(2));
        let g2 = &(&v(Var::X) * &v(Var::Z)) + &(&v(Var::Y) * &v(Var::Y));
        let a = &f.pow(2) * &g1;
        let b = &f * &g2;
        assert_eq!(prs_gcd(&a, &b, a.vars()), f.monic());
        assert_eq!(gcd(&a, &b), f.monic());
    }
}
