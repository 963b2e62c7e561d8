//! The Hamiltonians, their constraints, Hamilton's equations, and the
//! identities relating each system to its printed form.

use std::fmt;
use std::str::FromStr;

use cp3_algebra::{rf, Constraint, RatFn, Subst, Var, VarSet};

use crate::error::{usage, CoreError};
use crate::report::Check;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    D6,
    B5,
    D52,
    D51,
    /// The two-dimensional H_III^{D7} system with its A1 symmetry.
    A1D7,
}

impl SystemId {
    pub const ALL: [SystemId; 5] = [SystemId::D6, SystemId::B5, SystemId::D52, SystemId::D51, SystemId::A1D7];
    /// The six-dimensional systems.
    pub const MAIN: [SystemId; 4] = [SystemId::D6, SystemId::B5, SystemId::D52, SystemId::D51];

    pub fn as_str(self) -> &'static str {
        match self {
            SystemId::D6 => "d6",
            SystemId::B5 => "b5",
            SystemId::D52 => "d52",
            SystemId::D51 => "d51",
            SystemId::A1D7 => "a1d7",
        }
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SystemId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        SystemId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| usage("system", s))
    }
}

#[derive(Debug, Clone)]
pub struct HamiltonianSystem {
    pub id: SystemId,
    pub hamiltonian: RatFn,
    /// Canonical pairs (u, v) with du/dt = ∂H/∂v, dv/dt = −∂H/∂u.
    pub pairs: Vec<(Var, Var)>,
    pub params: Vec<Var>,
    pub constraint: Constraint,
}

impl HamiltonianSystem {
    /// Phase variables in pair order: u₀, v₀, u₁, v₁, …
    pub fn phase_vars(&self) -> Vec<Var> {
        self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    pub fn phase_set(&self) -> VarSet {
        VarSet::of(&self.phase_vars())
    }

    pub fn vector_field(&self) -> VectorField {
        hamilton_equations(&self.hamiltonian, &self.pairs)
    }

    /// Total degree of the numerator of t·H in the phase variables.
    pub fn phase_degree(&self) -> u32 {
        let th = &self.hamiltonian * &RatFn::var(Var::T);
        th.num().degree_in_set(self.phase_set())
    }
}

/// Right-hand sides in the order of [`HamiltonianSystem::phase_vars`].
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    pub components: Vec<RatFn>,
}

pub fn hamilton_equations(h: &RatFn, pairs: &[(Var, Var)]) -> VectorField {
    let components = pairs.iter().flat_map(|&(u, v)| [h.derivative(v), -h.derivative(u)]).collect();
    VectorField { components }
}

fn alphas(n: usize) -> Vec<Var> {
    (0..n).map(Var::alpha).collect()
}

const PAIRS: [(Var, Var); 3] = [(Var::X, Var::Y), (Var::Z, Var::W), (Var::Q, Var::P)];

pub fn build_system(id: SystemId) -> HamiltonianSystem {
    let a = Var::alpha;
    let (h, params, constraint) = match id {
        SystemId::D6 => (
            "(x^2*(y-1)*y + x*((a0+a1)*y - a1) + t*y)/t \
             + (z^2*(w-1)*w + z*((a0+a1+2*a2+2*a3)*w - a3) + t*w)/t \
             + (q^2*(p-t)*p + q*((a5+a6-1)*p - t*a5) + p)/t \
             + 2*y*z*(z*w + a3)/t - 2*(y+w)*p/t",
            alphas(7),
            Constraint::linear(&[(1, a(0)), (1, a(1)), (2, a(2)), (2, a(3)), (2, a(4)), (1, a(5)), (1, a(6))], 1, a(6)),
        ),
        SystemId::B5 => (
            "(x^2*y^2 + 2*a0*x*y + x + t*y)/t \
             + (z^2*w^2 + 2*(a0+a1+a2)*z*w + t*w)/t \
             + (q^2*p^2 - t*q^2*p + (a4+a5-1)*q*p - a4*t*q)/t \
             + 2*y*z*(z*w + a2)/t - 2*(y+w)*p/t",
            alphas(6),
            Constraint::linear(&[(2, a(0)), (2, a(1)), (2, a(2)), (2, a(3)), (1, a(4)), (1, a(5))], 1, a(5)),
        ),
        SystemId::D52 => (
            "(x^2*y^2 + 2*a0*x*y + x)/(2*t) \
             + (z^2*w^2 + 2*(a0+a1+a2)*z*w)/(2*t) \
             + (q^2*p^2 + 2*(a4-1)*q*p - t*q)/(2*t) \
             + y*z*(z*w + a2)/t - (y+w)*p/t",
            alphas(5),
            Constraint::linear(&[(1, a(0)), (1, a(1)), (1, a(2)), (1, a(3)), (1, a(4))], 1, a(4)),
        ),
        SystemId::D51 => (
            "(x^2*y^2 + x*y^2 - (a0+a1)*x*y - a0*y)/t \
             + (z^2*w^2 + (a0+a1+2*a2)*z*w + z + t*w)/t \
             + (q^2*p^2 - t*q^2*p - (1-a4-a5)*q*p - a4*t*q)/t \
             + 2*(x*z - w*p)/t",
            alphas(6),
            Constraint::linear(&[(1, a(0)), (1, a(1)), (2, a(2)), (2, a(3)), (1, a(4)), (1, a(5))], 1, a(5)),
        ),
        SystemId::A1D7 => (
            "(q^2*p^2 + b1*q*p + q + t*p)/t",
            vec![Var::B0, Var::B1],
            Constraint::linear(&[(1, Var::B0), (1, Var::B1)], 1, Var::B0),
        ),
    };
    let pairs = if id == SystemId::A1D7 { vec![(Var::Q, Var::P)] } else { PAIRS.to_vec() };
    HamiltonianSystem {
        id,
        hamiltonian: rf(h),
        pairs,
        params,
        constraint: constraint.expect("literal constraints are well formed"),
    }
}

/// The right-hand sides as printed next to each Hamiltonian; D51 and A1D7
/// have none.
pub fn printed_vector_field(id: SystemId) -> Option<VectorField> {
    let rows: [&str; 6] = match id {
        SystemId::D6 => [
            "(2*x^2*y + 2*z^2*w - x^2 - (a0+a1)*x + 2*a3*z - 2*p + t)/t",
            "(-2*x*y^2 + 2*x*y - (a0+a1)*y + a1)/t",
            "(2*z^2*w + 2*y*z^2 - z^2 - (2*a4 - 1 + a5 + a6)*z - 2*p + t)/t",
            "(-2*z*w^2 - 4*y*z*w + 2*z*w - 2*a3*y + (2*a4 - 1 + a5 + a6)*w + a3)/t",
            "(2*q^2*p - t*q^2 - 2*y - 2*w + (a5 + a6 - 1)*q + 1)/t",
            "(-2*q*p^2 + 2*t*q*p - (a5 + a6 - 1)*p + t*a5)/t",
        ],
        SystemId::B5 => [
            "(2*x^2*y + 2*z^2*w + 2*a0*x + 2*a2*z - 2*p + t)/t",
            "(-2*x*y^2 - 2*a0*y - 1)/t",
            "(2*z^2*w + 2*y*z^2 + 2*(a0+a1+a2)*z - 2*p + t)/t",
            "(-2*z*w^2 - 4*y*z*w - 2*a2*y - 2*(a0+a1+a2)*w)/t",
            "(2*q^2*p - t*q^2 - 2*y - 2*w - 2*(a0+a1+a2+a3)*q)/t",
            "(-2*q*p^2 + 2*t*q*p + 2*(a0+a1+a2+a3)*p + t*a4)/t",
        ],
        SystemId::D52 => [
            "(x^2*y + z^2*w + a0*x + a2*z - p)/t",
            "(-2*x*y^2 - 2*a0*y - 1)/(2*t)",
            "(z^2*w + y*z^2 + (a0+a1+a2)*z - p)/t",
            "(-z*w^2 - 2*y*z*w - a2*y - (a0+a1+a2)*w)/t",
            "(q^2*p - y - w + (a4 - 1)*q)/t",
            "(-2*q*p^2 - 2*(a4 - 1)*p + t)/(2*t)",
        ],
        SystemId::D51 | SystemId::A1D7 => return None,
    };
    Some(VectorField { components: rows.iter().map(|r| rf(r)).collect() })
}

pub const COMPONENT_LABELS: [&str; 6] = ["dx/dt", "dy/dt", "dz/dt", "dw/dt", "dq/dt", "dp/dt"];

/// Derived field against the printed one, one check per component.
pub fn vector_field_checks(id: SystemId) -> Vec<Check> {
    let sys = build_system(id);
    let Some(printed) = printed_vector_field(id) else {
        return Vec::new();
    };
    let derived = sys.vector_field();
    derived
        .components
        .iter()
        .zip(&printed.components)
        .zip(COMPONENT_LABELS)
        .map(|((d, p), label)| {
            let r = sys.constraint.reduce(&(d - p));
            Check::residuals(format!("{id} {label}"), &[label], &[r])
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Subsystem {
    HIII,
    HtildeIII,
    HIIID7,
    H1,
    H2,
    H3,
    H4,
    H5,
    K1,
    K2,
    K5,
}

impl Subsystem {
    pub const ALL: [Subsystem; 11] = [
        Subsystem::HIII,
        Subsystem::HtildeIII,
        Subsystem::HIIID7,
        Subsystem::H1,
        Subsystem::H2,
        Subsystem::H3,
        Subsystem::H4,
        Subsystem::H5,
        Subsystem::K1,
        Subsystem::K2,
        Subsystem::K5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Subsystem::HIII => "HIII",
            Subsystem::HtildeIII => "HtildeIII",
            Subsystem::HIIID7 => "HIII_D7",
            Subsystem::H1 => "H1",
            Subsystem::H2 => "H2",
            Subsystem::H3 => "H3",
            Subsystem::H4 => "H4",
            Subsystem::H5 => "H5",
            Subsystem::K1 => "K1",
            Subsystem::K2 => "K2",
            Subsystem::K5 => "K5",
        }
    }
}

impl FromStr for Subsystem {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        Subsystem::ALL
            .into_iter()
            .find(|h| h.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| usage("hamiltonian", s))
    }
}

/// A two-dimensional building block, written in its own pair and parameters.
#[derive(Debug, Clone)]
pub struct SubsystemHamiltonian {
    pub id: Subsystem,
    pub expression: RatFn,
    pub pair: (Var, Var),
    pub params: Vec<Var>,
}

impl SubsystemHamiltonian {
    /// Renames the pair to `pair` and binds the parameters, all at once.
    pub fn instantiate(&self, pair: (Var, Var), params: &[RatFn]) -> RatFn {
        assert_eq!(params.len(), self.params.len(), "{} takes {} parameters", self.id.as_str(), self.params.len());
        let mut b = Subst::new();
        b.insert(self.pair.0, RatFn::var(pair.0));
        b.insert(self.pair.1, RatFn::var(pair.1));
        for (v, e) in self.params.iter().zip(params) {
            b.insert(*v, e.clone());
        }
        self.expression.substitute(&b).expect("renaming keeps denominators")
    }

    pub fn vector_field(&self) -> VectorField {
        hamilton_equations(&self.expression, &[self.pair])
    }

    /// γ₁ of H_III, fixed by γ₀ + 2γ₁ + γ₂ = 1.
    pub fn gamma1(&self) -> Option<RatFn> {
        (self.id == Subsystem::HIII).then(|| rf("(1 - g0 - g2)/2"))
    }
}

pub fn subsystem(id: Subsystem) -> SubsystemHamiltonian {
    // H5's printed signature also lists β, which its formula never uses
    let (e, pair, params): (&str, _, Vec<Var>) = match id {
        Subsystem::HIII => ("(u^2*v*(v-1) + u*((g0+g2)*v - g0) + t*v)/t", (Var::U, Var::V), vec![Var::G0, Var::G2]),
        Subsystem::HtildeIII => {
            ("(u^2*v*(v-t) - u*((-g0+g2)*v + g0*t) + v)/t", (Var::U, Var::V), vec![Var::G0, Var::G2])
        }
        Subsystem::HIIID7 => ("(q^2*p^2 + b1*q*p + q + t*p)/t", (Var::Q, Var::P), vec![Var::B1]),
        Subsystem::H1 => ("(q^2*p^2 + al*q*p + t*p)/t", (Var::Q, Var::P), vec![Var::AL]),
        Subsystem::H2 => ("(q^2*p^2 - t*q^2*p + al*q*p + be*t*q)/t", (Var::Q, Var::P), vec![Var::AL, Var::BE]),
        Subsystem::H3 => ("(q^2*p^2 + al*q*p + q)/(2*t)", (Var::Q, Var::P), vec![Var::AL]),
        Subsystem::H4 => ("(q^2*p^2 + al*q*p)/(2*t)", (Var::Q, Var::P), vec![Var::AL]),
        Subsystem::H5 => ("(q^2*p^2 + al*q*p - t*q)/(2*t)", (Var::Q, Var::P), vec![Var::AL]),
        Subsystem::K1 => ("(q^2*p^2 + (al-1)*q*p + p)/t", (Var::Q, Var::P), vec![Var::AL]),
        Subsystem::K2 => ("(q^2*p^2 + q*p^2 - (al+1)*q*p + be*p)/t", (Var::Q, Var::P), vec![Var::AL, Var::BE]),
        Subsystem::K5 => ("(q^2*p^2 + al*q*p - q)/(2*t)", (Var::Q, Var::P), vec![Var::AL]),
    };
    SubsystemHamiltonian { id, expression: rf(e), pair, params }
}

/// H minus its printed split into building blocks and coupling terms.
pub fn decomposition_residual(id: SystemId) -> Option<RatFn> {
    let sys = build_system(id);
    let (x, y, z, w, q, p) = (Var::X, Var::Y, Var::Z, Var::W, Var::Q, Var::P);
    let parts = match id {
        SystemId::D6 => vec![
            subsystem(Subsystem::HIII).instantiate((x, y), &[rf("a1"), rf("a0")]),
            subsystem(Subsystem::HIII).instantiate((z, w), &[rf("a3"), rf("a0 + a1 + 2*a2 + a3")]),
            subsystem(Subsystem::HtildeIII).instantiate((q, p), &[rf("a5"), rf("1 - a6")]),
            rf("2*y*z*(z*w + a3)/t - 2*(y + w)*p/t"),
        ],
        SystemId::B5 => vec![
            subsystem(Subsystem::HIIID7).instantiate((x, y), &[rf("2*a0")]),
            subsystem(Subsystem::H1).instantiate((z, w), &[rf("2*(a0 + a1 + a2)")]),
            subsystem(Subsystem::H2).instantiate((q, p), &[rf("a4 + a5 - 1"), rf("-a4")]),
            rf("2*y*z*(z*w + a2)/t - 2*(y + w)*p/t"),
        ],
        SystemId::D52 => vec![
            subsystem(Subsystem::H3).instantiate((x, y), &[rf("2*a0")]),
            subsystem(Subsystem::H4).instantiate((z, w), &[rf("2*(a0 + a1 + a2)")]),
            subsystem(Subsystem::H5).instantiate((q, p), &[rf("2*(a4 - 1)")]),
            rf("y*z*(z*w + a2)/t - (y + w)*p/t"),
        ],
        _ => return None,
    };
    let sum = parts.iter().fold(RatFn::zero(), |acc, h| &acc + h);
    Some(sys.constraint.reduce(&(&sys.hamiltonian - &sum)))
}

pub fn decomposition_check(id: SystemId) -> Option<Check> {
    decomposition_residual(id).map(|r| Check::residuals(format!("{id} decomposition"), &["H - split"], &[r]))
}

/// Coefficients read off after reducing the H_III^{D7} flow to a scalar
/// second-order equation for y(τ), with y = q/τ and t = τ².
#[derive(Debug, Clone)]
pub struct ScalarReduction {
    /// The reduced equation minus the target form with the expected a, b, c, d.
    pub residual: RatFn,
    pub a: RatFn,
    pub b: RatFn,
    pub c: RatFn,
    pub d: RatFn,
    /// Terms of y'' − y'²/y + y'/τ not of the shape (ay² + b)/τ + cy³ + d/y.
    pub leftover: RatFn,
}

/// In the reduction u, v, r stand for y, dy/dτ and d²y/dτ².
pub fn scalar_piii_reduction() -> ScalarReduction {
    let h = subsystem(Subsystem::HIIID7).expression;
    let (q, p, t) = (Var::Q, Var::P, Var::T);
    let dh_dp = h.derivative(p);
    let dh_dq = h.derivative(q);
    // dq/dt = ∂H/∂p is affine in p: solve it for p
    let slope = dh_dp.derivative(p);
    let offset = dh_dp.substitute_var(p, &RatFn::zero()).unwrap();

    let tau = RatFn::var(Var::TAU);
    let (yv, yp, ypp) = (RatFn::var(Var::U), RatFn::var(Var::V), RatFn::var(Var::R));
    let mut to_tau = Subst::new();
    to_tau.insert(q, &tau * &yv);
    to_tau.insert(t, &tau * &tau);
    let in_tau = |f: &RatFn| f.substitute(&to_tau).unwrap();
    let d_tau = |f: &RatFn| {
        let mut s = f.derivative(Var::TAU);
        s = &s + &(&yp * &f.derivative(Var::U));
        &s + &(&ypp * &f.derivative(Var::V))
    };
    let two_tau = &tau * &RatFn::from_i64(2);
    // dq/dt along τ: (y + τ y')/(2τ)
    let qd = &d_tau(&(&tau * &yv)) / &two_tau;
    let p_expr = &(&qd - &in_tau(&offset)) / &in_tau(&slope);
    let mut p_only = Subst::new();
    p_only.insert(p, p_expr.clone());
    let pd = &d_tau(&p_expr) / &two_tau;
    let rhs = in_tau(&-dh_dq).substitute(&p_only).unwrap();
    let res = &pd - &rhs;
    // res is affine in y''
    let lead = res.derivative(Var::R);
    let rest = res.substitute_var(Var::R, &RatFn::zero()).unwrap();
    let ypp_solved = -(&rest / &lead);

    let base = &(&ypp_solved - &(&(&yp * &yp) / &yv)) + &(&yp / &tau);
    let target = rf("(-8*u^2 + 4*(1 - b1))/tau - 4/u");
    let residual = &base - &target;

    // τ·y·(base) = a y³ + b y + c τ y⁴ + d τ
    let scaled = &(&base * &tau) * &yv;
    let coeff = |ey: u16, et: u16| -> RatFn {
        let Some(n) = scaled.as_poly() else { return RatFn::zero() };
        let want_vars = VarSet::of(&[Var::U, Var::TAU, Var::V]);
        n.coefficients_wrt(want_vars)
            .into_iter()
            .find(|(m, _)| m.exp(Var::U) == ey && m.exp(Var::TAU) == et && m.exp(Var::V) == 0)
            .map(|(_, c)| RatFn::from_poly(c))
            .unwrap_or_else(RatFn::zero)
    };
    let (a, b, c, d) = (coeff(3, 0), coeff(1, 0), coeff(4, 1), coeff(0, 1));
    let shaped = shape(&a, &b, &c, &d);
    let leftover = &scaled - &shaped;
    ScalarReduction { residual, a, b, c, d, leftover }
}

fn shape(a: &RatFn, b: &RatFn, c: &RatFn, d: &RatFn) -> RatFn {
    let (u, tau) = (RatFn::var(Var::U), RatFn::var(Var::TAU));
    let u3 = &(&u * &u) * &u;
    let mut out = a * &u3;
    out = &out + &(b * &u);
    out = &out + &(&(c * &tau) * &(&u3 * &u));
    &out + &(d * &tau)
}

pub fn scalar_piii_checks() -> Vec<Check> {
    let r = scalar_piii_reduction();
    let expect = [("a", &r.a, rf("-8")), ("b", &r.b, rf("4*(1 - b1)")), ("c", &r.c, rf("0")), ("d", &r.d, rf("-4"))];
    let mut out = vec![Check::residuals(
        "HIII_D7 scalar reduction",
        &["residual", "unshaped terms"],
        &[r.residual.clone(), r.leftover.clone()],
    )];
    for (name, got, want) in expect {
        let diff = got - &want;
        let status = crate::report::Status::from_bool(diff.is_zero());
        out.push(Check::new(format!("HIII_D7 scalar coefficient {name}"), status, format!("{name} = {got}")));
    }
    out
}
