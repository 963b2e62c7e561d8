//! Holomorphy charts: birational changes of the phase coordinates in which
//! the Hamiltonian, possibly shifted, stays polynomial.
//!
//! Chart images give the new coordinates in terms of the old ones. New
//! coordinates are written with the capital phase variables `X … P` while a
//! chart is being inverted, then renamed back when charts are chained.

use cp3_algebra::{rf, RatFn, Subst, Var, VarSet};

use crate::error::{usage, CoreError};
use crate::report::{Check, Status};
use crate::system::{build_system, HamiltonianSystem, SystemId};

/// Which expression a chart is expected to keep polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    H,
    HPlusQ,
    HPlusInvP,
}

impl Target {
    pub fn as_str(self) -> &'static str {
        match self {
            Target::H => "H",
            Target::HPlusQ => "H+q",
            Target::HPlusInvP => "H+1/p",
        }
    }

    pub fn expression(self, sys: &HamiltonianSystem) -> RatFn {
        let shift = match self {
            Target::H => RatFn::zero(),
            Target::HPlusQ => rf("q"),
            Target::HPlusInvP => rf("1/p"),
        };
        &sys.hamiltonian + &shift
    }
}

#[derive(Debug, Clone)]
pub struct Chart {
    pub system: SystemId,
    pub id: &'static str,
    /// New coordinates as functions of the old ones (or of the parent
    /// chart's coordinates when `parent` is set).
    pub images: Vec<RatFn>,
    pub target: Target,
    pub parent: Option<&'static str>,
}

struct Spec {
    id: &'static str,
    images: [&'static str; 6],
    target: Target,
    parent: Option<&'static str>,
}

const fn spec(id: &'static str, images: [&'static str; 6], target: Target, parent: Option<&'static str>) -> Spec {
    Spec { id, images, target, parent }
}

const D6: &[Spec] = &[
    spec("r0", ["1/x", "-((y-1)*x+a0)*x", "z", "w", "q", "p"], Target::H, None),
    spec("r1", ["1/x", "-(y*x+a1)*x", "z", "w", "q", "p"], Target::H, None),
    spec("r2", ["-((x-z)*y-a2)*y", "1/y", "z", "w+y", "q", "p"], Target::H, None),
    spec("r3", ["x", "y", "1/z", "-(w*z+a3)*z", "q", "p"], Target::H, None),
    spec("r4", ["x", "y", "-((z-q)*w-a4)*w", "1/w", "q", "p+w"], Target::H, Some("r3")),
    spec("r5", ["x", "y", "z", "w", "1/q", "-(p*q+a5)*q"], Target::H, None),
    spec("r6", ["x", "y", "z", "w", "1/q", "-((p-t)*q+a6)*q"], Target::HPlusQ, None),
];

const B5: &[Spec] = &[
    spec("r0", ["x+2*a0/y+1/y^2", "y", "z", "w", "q", "p"], Target::H, None),
    spec("r1", ["-((x-z)*y-a1)*y", "1/y", "z", "w+y", "q", "p"], Target::H, None),
    spec("r2", ["x", "y", "1/z", "-(w*z+a2)*z", "q", "p"], Target::H, None),
    spec("r3", ["x", "y", "-((z-q)*w-a3)*w", "1/w", "q", "p+w"], Target::H, Some("r4")),
    spec("r4", ["x", "y", "z", "w", "1/q", "-(p*q+a4)*q"], Target::H, None),
    spec("r5", ["x", "y", "z", "w", "1/q", "-((p-t)*q+a5)*q"], Target::HPlusQ, None),
];

const D52: &[Spec] = &[
    spec("r0", ["x+2*a0/y+1/y^2", "y", "z", "w", "q", "p"], Target::H, None),
    spec("r1", ["-((x-z)*y-a1)*y", "1/y", "z", "w+y", "q", "p"], Target::H, None),
    spec("r2", ["x", "y", "1/z", "-(w*z+a2)*z", "q", "p"], Target::H, None),
    spec("r3", ["x", "y", "-((z-q)*w-a3)*w", "1/w", "q", "p+w"], Target::H, Some("r2")),
    spec("r4", ["x", "y", "z", "w", "q+2*a4/p-t/p^2", "p"], Target::HPlusInvP, None),
];

fn specs(id: SystemId) -> &'static [Spec] {
    match id {
        SystemId::D6 => D6,
        SystemId::B5 => B5,
        SystemId::D52 => D52,
        SystemId::D51 | SystemId::A1D7 => &[],
    }
}

pub fn chart_ids(id: SystemId) -> Vec<&'static str> {
    specs(id).iter().map(|s| s.id).collect()
}

pub fn chart(id: SystemId, chart_id: &str) -> Result<Chart, CoreError> {
    let s = specs(id)
        .iter()
        .find(|s| s.id == chart_id)
        .ok_or_else(|| usage(&format!("chart of {id}"), chart_id))?;
    Ok(Chart {
        system: id,
        id: s.id,
        images: s.images.iter().map(|e| rf(e)).collect(),
        target: s.target,
        parent: s.parent,
    })
}

fn big(i: usize) -> Var {
    Var::BIG_PHASE[i]
}

/// Solves `images(old) = NEW` for the old phase variables by repeated
/// Möbius back-substitution: each step picks an equation that is fractional
/// linear in exactly one unsolved variable.
pub fn invert(images: &[RatFn], phase: &[Var]) -> Result<Vec<RatFn>, CoreError> {
    let n = phase.len();
    let mut solved: Vec<Option<RatFn>> = vec![None; n];
    let mut used = vec![false; n];
    for _ in 0..n {
        let mut b = Subst::new();
        for (v, s) in phase.iter().zip(&solved) {
            if let Some(s) = s {
                b.insert(*v, s.clone());
            }
        }
        let mut progress = false;
        for i in 0..n {
            if used[i] {
                continue;
            }
            let f = images[i].substitute(&b)?;
            let open: Vec<usize> = (0..n).filter(|&k| solved[k].is_none() && f.contains_var(phase[k])).collect();
            if open.len() != 1 {
                continue;
            }
            let k = open[0];
            let Some(sol) = solve_moebius(&f, phase[k], &RatFn::var(big(i)))? else {
                continue;
            };
            solved[k] = Some(sol);
            used[i] = true;
            progress = true;
            break;
        }
        if !progress {
            break;
        }
    }
    if solved.iter().any(Option::is_none) {
        let shown: Vec<String> = images.iter().map(|f| f.to_string()).collect();
        return Err(CoreError::NotInvertible(shown.join(", ")));
    }
    // solved variables are substituted before each step, so every solution
    // is already explicit in the new coordinates
    Ok(solved.into_iter().map(Option::unwrap).collect())
}

/// `(a v + b)/(c v + d) = rhs` solved for `v`, if `f` has that shape.
fn solve_moebius(f: &RatFn, v: Var, rhs: &RatFn) -> Result<Option<RatFn>, CoreError> {
    let num = f.num().coefficients_in(v);
    let den = f.den().coefficients_in(v);
    if num.len() > 2 || den.len() > 2 {
        return Ok(None);
    }
    let coeff = |c: &[cp3_algebra::Poly], i: usize| c.get(i).cloned().map(RatFn::from_poly).unwrap_or_else(RatFn::zero);
    let (b, a) = (coeff(&num, 0), coeff(&num, 1));
    let (d, c) = (coeff(&den, 0), coeff(&den, 1));
    let top = &b - &(&d * rhs);
    let bottom = &(&c * rhs) - &a;
    if bottom.is_zero() {
        return Ok(None);
    }
    Ok(Some(top.div_ref(&bottom)?))
}

fn rename_to_small(f: &RatFn, phase: &[Var]) -> Result<RatFn, CoreError> {
    let mut b = Subst::new();
    for (i, &v) in phase.iter().enumerate() {
        b.insert(big(i), RatFn::var(v));
    }
    Ok(f.substitute(&b)?)
}

/// `expr` written in the chart's coordinates, as a function of `X … P`.
/// Composite charts pass through their parent first.
pub fn transform(c: &Chart, expr: &RatFn) -> Result<RatFn, CoreError> {
    let sys = build_system(c.system);
    let phase = sys.phase_vars();
    let expr = match c.parent {
        Some(p) => rename_to_small(&transform(&chart(c.system, p)?, expr)?, &phase)?,
        None => expr.clone(),
    };
    let inv = invert(&c.images, &phase)?;
    let mut b = Subst::new();
    for (v, s) in phase.iter().zip(inv) {
        b.insert(*v, s);
    }
    Ok(sys.constraint.try_reduce(&expr.substitute(&b)?)?)
}

pub fn new_phase_set(n: usize) -> VarSet {
    VarSet::of(&Var::BIG_PHASE[..n])
}

/// The chart's printed target expression, transformed and tested for
/// polynomiality in the new phase variables.
pub fn check_polynomiality(id: SystemId, chart_id: &str) -> Result<Check, CoreError> {
    let c = chart(id, chart_id)?;
    polynomiality_of(&c, c.target)
}

/// Same test with an explicit target, used for negative controls.
pub fn polynomiality_of(c: &Chart, target: Target) -> Result<Check, CoreError> {
    let sys = build_system(c.system);
    let expr = sys.constraint.reduce(&target.expression(&sys));
    let label = match c.parent {
        Some(p) => format!("{} {}({}({}))", c.system, c.id, p, target.as_str()),
        None => format!("{} {}({})", c.system, c.id, target.as_str()),
    };
    let h = transform(c, &expr)?;
    let ok = h.is_polynomial_in(new_phase_set(sys.phase_vars().len()));
    let witness = if ok { "polynomial".to_string() } else { format!("denominator {}", h.den()) };
    Ok(Check::new(label, Status::from_bool(ok), witness))
}

pub fn verify_charts(id: SystemId) -> Vec<Check> {
    chart_ids(id)
        .into_iter()
        .map(|c| check_polynomiality(id, c).unwrap_or_else(|e| Check::new(format!("{id} {c}"), Status::Fail, e.to_string())))
        .collect()
}

/// Charts whose printed target is not plain `H`, checked against `H`
/// alone. Each of these is expected to fail.
pub fn negative_controls(id: SystemId) -> Vec<Check> {
    specs(id)
        .iter()
        .filter(|s| s.target != Target::H)
        .map(|s| {
            let c = chart(id, s.id).expect("roster chart");
            match polynomiality_of(&c, Target::H) {
                Ok(mut k) => {
                    k.name = format!("{} unshifted", k.name);
                    k
                }
                Err(e) => Check::new(format!("{id} {} unshifted", s.id), Status::Fail, e.to_string()),
            }
        })
        .collect()
}

/// `images(invert(images)) = NEW` and `invert(images)(images) = old`;
/// the defects are returned, empty when both hold.
pub fn round_trip_defects(c: &Chart) -> Result<Vec<String>, CoreError> {
    let sys = build_system(c.system);
    let phase = sys.phase_vars();
    let inv = invert(&c.images, &phase)?;
    let mut to_new = Subst::new();
    for (v, s) in phase.iter().zip(&inv) {
        to_new.insert(*v, s.clone());
    }
    let mut to_old = Subst::new();
    for (i, f) in c.images.iter().enumerate() {
        to_old.insert(big(i), f.clone());
    }
    let mut bad = Vec::new();
    for (i, f) in c.images.iter().enumerate() {
        let back = f.substitute(&to_new)?;
        if back != RatFn::var(big(i)) {
            bad.push(format!("image {i}: {back}"));
        }
    }
    for (v, s) in phase.iter().zip(&inv) {
        let back = s.substitute(&to_old)?;
        if back != RatFn::var(*v) {
            bad.push(format!("{}: {back}", v.name()));
        }
    }
    Ok(bad)
}
