//! Degenerations of the D6 system, the B5 → D5⁽¹⁾ change of variables and
//! the small symplectic maps between two-dimensional blocks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use cp3_algebra::{rf, Constraint, RatFn, Subst, Var};

use crate::charts::invert;
use crate::error::{usage, CoreError};
use crate::map::{symplectic_defects, BirationalMap};
use crate::report::{Check, Status};
use crate::system::{build_system, subsystem, Subsystem, SystemId, VectorField};
use crate::weyl;

fn bind(pairs: impl IntoIterator<Item = (Var, RatFn)>) -> Subst {
    pairs.into_iter().collect()
}

fn rename(f: &RatFn, from: &[Var], to: &[Var]) -> Result<RatFn, CoreError> {
    Ok(f.substitute(&bind(from.iter().zip(to).map(|(&a, &b)| (a, RatFn::var(b)))))?)
}

const NEW_LABELS: [&str; 6] = ["dX/dT", "dY/dT", "dZ/dT", "dW/dT", "dQ/dT", "dP/dT"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegenerationId {
    D6ToB5,
    D6ToD52,
}

impl DegenerationId {
    pub const ALL: [DegenerationId; 2] = [DegenerationId::D6ToB5, DegenerationId::D6ToD52];

    pub fn as_str(self) -> &'static str {
        match self {
            DegenerationId::D6ToB5 => "D6_to_B5",
            DegenerationId::D6ToD52 => "D6_to_D52",
        }
    }
}

impl fmt::Display for DegenerationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DegenerationId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        DegenerationId::ALL
            .into_iter()
            .find(|d| d.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| usage("degeneration", s))
    }
}

/// A change of parameters and variables depending on ε, from D6 to `target`.
#[derive(Debug, Clone)]
pub struct Degeneration {
    pub id: DegenerationId,
    pub target: SystemId,
    /// α_i in terms of ε and the target's A_i.
    pub params: Vec<RatFn>,
    /// Old phase variables and t as multiples of the new ones.
    pub scales: Vec<RatFn>,
    pub t_scale: RatFn,
    /// The target's parameter relation written in A.
    pub target_constraint: Constraint,
}

fn a_vars(n: usize) -> Vec<Var> {
    (0..n).map(Var::big_a).collect()
}

fn alpha_vars(n: usize) -> Vec<Var> {
    (0..n).map(Var::alpha).collect()
}

/// The target system's constraint with α_i renamed to A_i.
fn constraint_in_a(id: SystemId) -> Constraint {
    let sys = build_system(id);
    let n = sys.params.len();
    let rel = rename(&RatFn::from_poly(sys.constraint.relation().clone()), &sys.params, &a_vars(n)).expect("renaming");
    let elim = Var::big_a(sys.params.iter().position(|&v| v == sys.constraint.eliminated()).expect("eliminated param"));
    Constraint::new(rel.num().clone(), elim).expect("linear in the eliminated parameter")
}

pub fn degeneration(id: DegenerationId) -> Degeneration {
    let r = |es: &[&str]| es.iter().map(|e| rf(e)).collect::<Vec<_>>();
    let (target, params, scales, t_scale) = match id {
        DegenerationId::D6ToB5 => (
            SystemId::B5,
            r(&["1/eps + 2*A0", "-1/eps", "A1", "A2", "A3", "A4", "A5"]),
            r(&["eps", "1/eps", "eps", "1/eps", "1/eps", "eps"]),
            rf("eps"),
        ),
        DegenerationId::D6ToD52 => (
            SystemId::D52,
            r(&["-1/eps + A0", "1/eps", "A1/2", "A2/2", "A3/2", "1/eps", "-1/eps + A4"]),
            r(&["eps/4", "2/eps", "eps/4", "2/eps", "4/eps", "eps/8"]),
            rf("eps^2/16"),
        ),
    };
    Degeneration { id, target, params, scales, t_scale, target_constraint: constraint_in_a(target) }
}

impl Degeneration {
    fn substitution(&self) -> Subst {
        let mut b = bind(alpha_vars(7).into_iter().zip(self.params.iter().cloned()));
        for (i, (v, c)) in Var::PHASE.iter().zip(&self.scales).enumerate() {
            b.insert(*v, c * &RatFn::var(Var::BIG_PHASE[i]));
        }
        b.insert(Var::T, &self.t_scale * &RatFn::var(Var::BIG_T));
        b
    }

    /// The D6 vector field in the new variables, each component as a Laurent
    /// polynomial in ε.
    pub fn transformed_field(&self) -> Result<Vec<BTreeMap<i32, RatFn>>, CoreError> {
        let d6 = build_system(SystemId::D6).vector_field();
        let b = self.substitution();
        d6.components
            .iter()
            .zip(&self.scales)
            .map(|(f, c)| {
                // dNew/dT = (dold/dt)/c · dt/dT
                let comp = (f.substitute(&b)?.div_ref(c)?) * self.t_scale.clone();
                Ok(comp.laurent_in(Var::EPS)?)
            })
            .collect()
    }

    /// The target vector field in the new variables, α renamed to A.
    pub fn target_field(&self) -> Result<VectorField, CoreError> {
        let sys = build_system(self.target);
        let n = sys.params.len();
        let mut from = sys.params.clone();
        from.extend(Var::PHASE);
        from.push(Var::T);
        let mut to = a_vars(n);
        to.extend(Var::BIG_PHASE);
        to.push(Var::BIG_T);
        let components = sys.vector_field().components.iter().map(|f| rename(f, &from, &to)).collect::<Result<_, _>>()?;
        Ok(VectorField { components })
    }

    /// The D6 relation under the parameter substitution, minus the target's.
    pub fn constraint_residual(&self) -> Result<RatFn, CoreError> {
        let d6 = build_system(SystemId::D6);
        let rel = RatFn::from_poly(d6.constraint.relation().clone());
        let image = rel.substitute(&bind(alpha_vars(7).into_iter().zip(self.params.iter().cloned())))?;
        Ok(&image - &RatFn::from_poly(self.target_constraint.relation().clone()))
    }
}

pub fn degenerate(id: DegenerationId) -> Result<Vec<Check>, CoreError> {
    let d = degeneration(id);
    let series = d.transformed_field()?;
    let target = d.target_field()?;
    let ideal = &d.target_constraint;
    let mut out = Vec::new();
    for ((terms, want), label) in series.iter().zip(&target.components).zip(NEW_LABELS) {
        let mut bad = Vec::new();
        for (&k, c) in terms.range(..0) {
            let c = ideal.reduce(c);
            if !c.is_zero() {
                bad.push(format!("eps^{k}: {c}"));
            }
        }
        let lead = terms.get(&0).cloned().unwrap_or_else(RatFn::zero);
        if !ideal.equals_mod(&lead, want) {
            bad.push(format!("limit {} != {}", ideal.reduce(&lead), ideal.reduce(want)));
        }
        let name = format!("{id} {label}");
        out.push(if bad.is_empty() {
            Check::pass(name, "no negative powers, limit matches")
        } else {
            Check::new(name, Status::Fail, bad.join("; "))
        });
    }
    let r = d.constraint_residual()?;
    out.push(Check::residuals(format!("{id} constraint"), &["relation"], &[r]));
    Ok(out)
}

/// ε⁰ parts of the transformed field, reduced on the target constraint.
pub fn limit_field(id: DegenerationId) -> Result<Vec<RatFn>, CoreError> {
    let d = degeneration(id);
    Ok(d.transformed_field()?
        .iter()
        .map(|terms| d.target_constraint.reduce(&terms.get(&0).cloned().unwrap_or_else(RatFn::zero)))
        .collect())
}

/// B5 coordinates in terms of D5⁽¹⁾ ones, and the B5 parameters in terms of
/// the D5⁽¹⁾ parameters A.
pub fn b5_to_d51_map() -> (Vec<RatFn>, Vec<RatFn>) {
    let phase = ["((x-z)*y-a1)*y", "-1/y", "z", "w+y", "q", "p"].iter().map(|e| rf(e)).collect();
    let params = ["(A0-A1)/2", "A1", "A2", "A3", "A4", "A5"].iter().map(|e| rf(e)).collect();
    (phase, params)
}

/// `J·F_B5 − F_D51(φ)` per component, both sides with α replaced by A,
/// reduced on the D5⁽¹⁾ constraint.
pub fn b5_to_d51_residuals() -> Result<Vec<RatFn>, CoreError> {
    let b5 = build_system(SystemId::B5);
    let (phi, psub) = b5_to_d51_map();
    let psub = bind(b5.params.iter().copied().zip(psub));
    let f = b5.vector_field().components;
    let d51 = build_system(SystemId::D51);
    let ideal = constraint_in_a(SystemId::D51);
    let to_phi = bind(Var::PHASE.iter().copied().zip(phi.iter().cloned()));
    phi.iter()
        .zip(rename_params_to_a(&d51)?.components)
        .map(|(g, target)| {
            let mut lhs = RatFn::zero();
            for (v, fv) in Var::PHASE.iter().zip(&f) {
                let dg = g.derivative(*v);
                if !dg.is_zero() {
                    lhs = &lhs + &(&dg * fv);
                }
            }
            let lhs = lhs.substitute(&psub)?;
            let rhs = target.substitute(&to_phi)?.substitute(&psub)?;
            Ok(ideal.reduce(&(&lhs - &rhs)))
        })
        .collect()
}

fn rename_params_to_a(sys: &crate::system::HamiltonianSystem) -> Result<VectorField, CoreError> {
    let a = a_vars(sys.params.len());
    let components = sys.vector_field().components.iter().map(|f| rename(f, &sys.params, &a)).collect::<Result<_, _>>()?;
    Ok(VectorField { components })
}

pub fn equivalence_b5_to_d51() -> Result<Vec<Check>, CoreError> {
    let r = b5_to_d51_residuals()?;
    let (phi, psub) = b5_to_d51_map();
    let b5 = build_system(SystemId::B5);
    let mut out = vec![Check::residuals("B5_to_D51 vector field", &crate::system::COMPONENT_LABELS, &r)];
    let defects = symplectic_defects(&phi, &b5.pairs);
    out.push(Check::new(
        "B5_to_D51 symplectic",
        Status::from_bool(defects.is_empty()),
        if defects.is_empty() { "canonical brackets".to_string() } else { defects.join("; ") },
    ));
    // the parameter map carries the B5 relation onto the D5⁽¹⁾ one
    let rel = RatFn::from_poly(b5.constraint.relation().clone());
    let image = rel.substitute(&bind(b5.params.iter().copied().zip(psub)))?;
    let ideal = constraint_in_a(SystemId::D51);
    out.push(Check::residuals("B5_to_D51 constraint", &["relation"], &[ideal.reduce(&image)]));
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrId {
    Tr1,
    Tr2,
    Tr5,
}

impl TrId {
    pub const ALL: [TrId; 3] = [TrId::Tr1, TrId::Tr2, TrId::Tr5];

    pub fn as_str(self) -> &'static str {
        match self {
            TrId::Tr1 => "tr1",
            TrId::Tr2 => "tr2",
            TrId::Tr5 => "tr5",
        }
    }

    /// Source and target Hamiltonians.
    pub fn hamiltonians(self) -> (Subsystem, Subsystem) {
        match self {
            TrId::Tr1 => (Subsystem::H1, Subsystem::K1),
            TrId::Tr2 => (Subsystem::H2, Subsystem::K2),
            TrId::Tr5 => (Subsystem::H5, Subsystem::K5),
        }
    }

    pub fn map(self) -> BirationalMap {
        let (src, _) = self.hamiltonians();
        let h = subsystem(src);
        let images: [&str; 2] = match self {
            TrId::Tr1 => ["q/t", "t*p"],
            TrId::Tr2 => ["-p/t", "t*q"],
            TrId::Tr5 => ["t*q", "p/t"],
        };
        BirationalMap::new(
            self.as_str(),
            vec![h.pair.0, h.pair.1],
            images.iter().map(|e| rf(e)).collect(),
            RatFn::var(Var::T),
            h.params.clone(),
            h.params.iter().map(|&v| RatFn::var(v)).collect(),
        )
    }
}

impl FromStr for TrId {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, CoreError> {
        TrId::ALL.into_iter().find(|d| d.as_str().eq_ignore_ascii_case(s)).ok_or_else(|| usage("transformation", s))
    }
}

/// `push_forward(F_src) − F_target(m)`: zero iff the map carries the source
/// flow onto the target flow with the same parameters.
pub fn flow_residuals(m: &BirationalMap, src: &VectorField, target: &VectorField) -> Result<Vec<RatFn>, CoreError> {
    let pushed = m.push_forward(&src.components)?;
    let at_image = bind(m.phase().iter().copied().zip(m.images().iter().cloned()));
    pushed
        .iter()
        .zip(&target.components)
        .map(|(l, r)| Ok(l - &r.substitute(&at_image)?))
        .collect()
}

/// `H∘m⁻¹ − K` with time held fixed: the printed identity read as a plain
/// change of variables.
pub fn bare_substitution_residual(tr: TrId) -> Result<RatFn, CoreError> {
    let (src, dst) = tr.hamiltonians();
    let m = tr.map();
    let phase = m.phase().to_vec();
    let inv = invert(m.images(), &phase)?;
    let h = subsystem(src).expression.substitute(&bind(phase.iter().copied().zip(inv)))?;
    let h = rename(&h, &Var::BIG_PHASE[..2], &phase)?;
    Ok(&h - &subsystem(dst).expression)
}

pub fn symplectic_tr(tr: TrId) -> Result<Vec<Check>, CoreError> {
    let (src, dst) = tr.hamiltonians();
    let m = tr.map();
    let name = tr.as_str();
    let r = flow_residuals(&m, &subsystem(src).vector_field(), &subsystem(dst).vector_field())?;
    let mut out = vec![Check::residuals(format!("{name} {}->{} flow", src.as_str(), dst.as_str()), &["dq/dt", "dp/dt"], &r)];
    let bare = bare_substitution_residual(tr)?;
    out.push(Check::recorded(format!("{name} bare substitution"), format!("H o {name}^-1 - K = {bare}")));
    let defects = symplectic_defects(m.images(), &[(m.phase()[0], m.phase()[1])]);
    out.push(Check::new(
        format!("{name} symplectic"),
        Status::from_bool(defects.is_empty()),
        if defects.is_empty() { "dq^dp preserved".to_string() } else { defects.join("; ") },
    ));
    Ok(out)
}

/// The map `(u, v) ↦ (1/u, −u(vu+γ₀))` with γ₀, γ₂ unchanged.
pub fn uv_map() -> BirationalMap {
    let h = subsystem(Subsystem::HIII);
    BirationalMap::new(
        "uv",
        vec![Var::U, Var::V],
        vec![rf("1/u"), rf("-u*(v*u + g0)")],
        RatFn::var(Var::T),
        h.params.clone(),
        h.params.iter().map(|&v| RatFn::var(v)).collect(),
    )
}

pub fn verify_uv_correspondence() -> Result<Vec<Check>, CoreError> {
    let m = uv_map();
    let src = subsystem(Subsystem::HIII).vector_field();
    let dst = subsystem(Subsystem::HtildeIII).vector_field();
    let r = flow_residuals(&m, &src, &dst)?;
    let mut out = vec![Check::residuals("uv HIII->HtildeIII flow", &["du/dt", "dv/dt"], &r)];
    let defects = symplectic_defects(m.images(), &[(Var::U, Var::V)]);
    out.push(Check::new(
        "uv symplectic",
        Status::from_bool(defects.is_empty()),
        if defects.is_empty() { "du^dv preserved".to_string() } else { defects.join("; ") },
    ));
    let mut cur = m.clone();
    let mut order = None;
    for n in 1..=12u32 {
        if cur.is_identity(None) {
            order = Some(n);
            break;
        }
        cur = cur.compose(&m, None)?;
    }
    out.push(Check::recorded("uv order", order.map_or("> 12".to_string(), |n| n.to_string())));
    Ok(out)
}

pub fn verify_a1_symmetry() -> Result<Vec<Check>, CoreError> {
    let id = SystemId::A1D7;
    let mut out = Vec::new();
    for name in ["s0", "s1", "sigma"] {
        out.push(weyl::verify_symmetry(id, name)?);
    }
    for rel in weyl::relation_suite(id) {
        out.push(weyl::check_relation(id, &rel));
    }
    let sigma = weyl::generator(id, "sigma")?;
    let defects = symplectic_defects(sigma.images(), &build_system(id).pairs);
    out.push(Check::new(
        "a1d7 sigma symplectic",
        Status::from_bool(defects.is_empty()),
        if defects.is_empty() { "dq^dp preserved".to_string() } else { defects.join("; ") },
    ));
    Ok(out)
}
