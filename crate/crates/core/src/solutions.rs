//! Closed-form special solutions, written in a root variable `s` with
//! `t = s^k`, and first integrals of the two-dimensional blocks.

use std::fmt;
use std::str::FromStr;

use cp3_algebra::{rf, RatFn, Subst, Var};

use crate::error::{usage, CoreError};
use crate::map::poisson;
use crate::report::{Check, Status};
use crate::system::{build_system, subsystem, Subsystem, SystemId, COMPONENT_LABELS};
use crate::weyl;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SeedId {
    D6Fixed,
    D6Alg1,
    D6Alg2,
    D52Alg,
}

impl SeedId {
    pub const ALL: [SeedId; 4] = [SeedId::D6Fixed, SeedId::D6Alg1, SeedId::D6Alg2, SeedId::D52Alg];

    pub fn as_str(self) -> &'static str {
        match self {
            SeedId::D6Fixed => "D6_fixed",
            SeedId::D6Alg1 => "D6_alg1",
            SeedId::D6Alg2 => "D6_alg2",
            SeedId::D52Alg => "D52_alg",
        }
    }
}

impl fmt::Display for SeedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeedId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        SeedId::ALL
            .into_iter()
            .find(|d| d.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| usage("solution", s))
    }
}

/// Phase coordinates as functions of `s`, valid at the given parameters.
/// Parameter values may keep some parameters free.
#[derive(Debug, Clone, PartialEq)]
pub struct ClosedFormSolution {
    pub name: String,
    pub system: SystemId,
    pub root_exponent: u32,
    pub phase: Vec<RatFn>,
    pub params: Vec<RatFn>,
}

fn exprs(es: &[&str]) -> Vec<RatFn> {
    es.iter().map(|e| rf(e)).collect()
}

pub fn seed_solution(id: SeedId) -> ClosedFormSolution {
    let (system, k, phase, params) = match id {
        SeedId::D6Fixed => (
            SystemId::D6,
            1,
            exprs(&["0", "1/2", "0", "0", "0", "s/2"]),
            exprs(&["1/2-a2-a3-a4-a6", "1/2-a2-a3-a4-a6", "a2", "a3", "a4", "a6", "a6"]),
        ),
        SeedId::D6Alg1 => (
            SystemId::D6,
            2,
            exprs(&["s", "0", "s", "-a3/(2*s)", "1/s", "0"]),
            exprs(&["(1-2*a3)/2", "0", "0", "a3", "0", "0", "(1-2*a3)/2"]),
        ),
        SeedId::D6Alg2 => (
            SystemId::D6,
            2,
            exprs(&["-s", "1", "s", "-a3/(2*s)", "-1/s", "s^2"]),
            exprs(&["0", "(1+2*a3)/2", "-a3", "a3", "-a3", "(1+2*a3)/2", "0"]),
        ),
        SeedId::D52Alg => return d52_branch(true),
    };
    ClosedFormSolution { name: id.as_str().to_string(), system, root_exponent: k, phase, params }
}

/// The t^{1/4} solution; the z component is printed with a ± sign.
pub fn d52_branch(plus: bool) -> ClosedFormSolution {
    let z = if plus { "i*s^2" } else { "-i*s^2" };
    ClosedFormSolution {
        name: format!("D52_alg{}", if plus { "" } else { " (z = -i s^2)" }),
        system: SystemId::D52,
        root_exponent: 4,
        phase: exprs(&[
            "-((1+i)/4)*(s + 2*(1+i)*s^2)",
            "-(1-i)/(2*s)",
            z,
            "-i*(2*a0+2*a1-1)/(2*s^2)",
            "((1+i) + 4*i*s)/(4*s^3)",
            "(1/2 - i/2)*s^3",
        ]),
        params: exprs(&["a0", "a1", "1-2*a0-2*a1", "a1", "a0"]),
    }
}

impl ClosedFormSolution {
    fn bindings(&self) -> Subst {
        let sys = build_system(self.system);
        let mut b: Subst = sys.params.iter().copied().zip(self.params.iter().cloned()).collect();
        for (v, e) in sys.phase_vars().into_iter().zip(&self.phase) {
            b.insert(v, e.clone());
        }
        b.insert(Var::T, RatFn::var(Var::S).pow(self.root_exponent as i32).expect("positive power"));
        b
    }

    /// `(d/ds φᵢ)/(k s^{k−1}) − Fᵢ(φ, s^k)` per component.
    pub fn residuals(&self) -> Result<Vec<RatFn>, CoreError> {
        let sys = build_system(self.system);
        let k = self.root_exponent as i32;
        let dt_ds = &RatFn::from_i64(k as i64) * &RatFn::var(Var::S).pow(k - 1)?;
        let b = self.bindings();
        sys.vector_field()
            .components
            .iter()
            .zip(&self.phase)
            .map(|(f, phi)| Ok(&phi.derivative(Var::S).div_ref(&dt_ds)? - &f.substitute(&b)?))
            .collect()
    }

    /// The parameter relation evaluated at the parameter values.
    pub fn constraint_residual(&self) -> Result<RatFn, CoreError> {
        let sys = build_system(self.system);
        let b: Subst = sys.params.iter().copied().zip(self.params.iter().cloned()).collect();
        Ok(RatFn::from_poly(sys.constraint.relation().clone()).substitute(&b)?)
    }
}

pub fn verify_solution(sol: &ClosedFormSolution) -> Result<Vec<Check>, CoreError> {
    let r = sol.residuals()?;
    let c = sol.constraint_residual()?;
    Ok(vec![
        Check::residuals(format!("{} residuals", sol.name), &COMPONENT_LABELS, &r),
        Check::residuals(format!("{} constraint", sol.name), &["relation"], &[c]),
    ])
}

/// The seed's own report; the t^{1/4} solution reports both branches.
pub fn verify_seed(id: SeedId) -> Result<Vec<Check>, CoreError> {
    let mut out = verify_solution(&seed_solution(id))?;
    match id {
        SeedId::D6Fixed => {
            out.push(pi1_fixed_point_check()?);
            let control = perturbed_control()?;
            out.push(Check::new(
                "D6_fixed perturbed control",
                Status::from_bool(control.is_fail()),
                format!("y = 1/3 {}", if control.is_fail() { "rejected" } else { "accepted" }),
            ));
        }
        SeedId::D52Alg => out.extend(verify_solution(&d52_branch(false))?),
        _ => {}
    }
    Ok(out)
}

/// π₁ applied to the fixed solution returns it, parameters included.
pub fn pi1_fixed_point_check() -> Result<Check, CoreError> {
    let sol = seed_solution(SeedId::D6Fixed);
    let pi1 = weyl::generator(SystemId::D6, "pi1")?;
    let b = sol.bindings();
    let mut bad = Vec::new();
    for (i, img) in pi1.images().iter().enumerate() {
        let got = img.substitute(&b)?;
        if got != sol.phase[i] {
            bad.push(format!("{}: {got}", COMPONENT_LABELS[i]));
        }
    }
    let t = pi1.t_image().substitute(&b)?;
    if t != RatFn::var(Var::S) {
        bad.push(format!("t: {t}"));
    }
    for (i, img) in pi1.param_images().iter().enumerate() {
        let got = img.substitute(&b)?;
        if got != sol.params[i] {
            bad.push(format!("a{i}: {got}"));
        }
    }
    Ok(if bad.is_empty() {
        Check::pass("D6_fixed pi1 fixed point", "pi1(solution) = solution")
    } else {
        Check::new("D6_fixed pi1 fixed point", Status::Fail, bad.join("; "))
    })
}

/// The fixed solution with y moved to 1/3; must not verify.
pub fn perturbed_control() -> Result<Check, CoreError> {
    let mut sol = seed_solution(SeedId::D6Fixed);
    sol.name = "D6_fixed perturbed".to_string();
    sol.phase[1] = rf("1/3");
    let r = sol.residuals()?;
    Ok(Check::residuals(&sol.name, &COMPONENT_LABELS, &r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntegralId {
    I1,
    I2,
    I3,
    I4,
    I5,
}

impl IntegralId {
    pub const ALL: [IntegralId; 5] = [IntegralId::I1, IntegralId::I2, IntegralId::I3, IntegralId::I4, IntegralId::I5];

    pub fn as_str(self) -> &'static str {
        match self {
            IntegralId::I1 => "I1",
            IntegralId::I2 => "I2",
            IntegralId::I3 => "I3",
            IntegralId::I4 => "I4",
            IntegralId::I5 => "I5",
        }
    }
}

impl FromStr for IntegralId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        IntegralId::ALL
            .into_iter()
            .find(|d| d.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| usage("first integral", s))
    }
}

#[derive(Debug, Clone)]
pub struct FirstIntegral {
    pub id: IntegralId,
    pub hamiltonian: Subsystem,
    pub expression: RatFn,
    /// Whether `t·K = I` is stated for this pair.
    pub scaled: bool,
}

pub fn first_integral(id: IntegralId) -> FirstIntegral {
    let (h, e, scaled) = match id {
        IntegralId::I1 => (Subsystem::K1, "q^2*p^2 + (al-1)*q*p + p", true),
        IntegralId::I2 => (Subsystem::K2, "q^2*p^2 + q*p^2 - (al+1)*q*p + be*p", true),
        IntegralId::I3 => (Subsystem::H3, "q^2*p^2 + al*q*p + q", false),
        IntegralId::I4 => (Subsystem::H4, "q*p", false),
        IntegralId::I5 => (Subsystem::K5, "q^2*p^2 + al*q*p - q", false),
    };
    FirstIntegral { id, hamiltonian: h, expression: rf(e), scaled }
}

/// `{I, K} + ∂I/∂t` along the named flow.
pub fn time_derivative(fi: &FirstIntegral) -> RatFn {
    let h = subsystem(fi.hamiltonian);
    &poisson(&fi.expression, &h.expression, &[h.pair]) + &fi.expression.derivative(Var::T)
}

pub fn verify_first_integral(id: IntegralId) -> Vec<Check> {
    let fi = first_integral(id);
    let name = id.as_str();
    let h = fi.hamiltonian.as_str();
    let mut out = vec![Check::residuals(format!("{name} along {h}"), &["dI/dt"], &[time_derivative(&fi)])];
    if fi.scaled {
        let k = subsystem(fi.hamiltonian).expression;
        let r = &(&RatFn::var(Var::T) * &k) - &fi.expression;
        out.push(Check::residuals(format!("t {h} = {name}"), &["tK - I"], &[r]));
    }
    out
}
