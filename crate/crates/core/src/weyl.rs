//! Generator rosters, words in the generators, Cartan data read off the
//! parameter actions, and the relation, symmetry and translation suites.

use cp3_algebra::{rf, Constraint, RatFn, Subst};

use crate::error::{usage, CoreError};
use crate::map::BirationalMap;
use crate::report::{Check, Status};
use crate::system::{build_system, HamiltonianSystem, SystemId, COMPONENT_LABELS};

struct Spec {
    name: &'static str,
    images: &'static [&'static str],
    t: &'static str,
    params: &'static [&'static str],
}

macro_rules! gens {
    ($($name:literal: [$($img:literal),*], $t:literal, [$($par:literal),*];)*) => {
        &[$(Spec { name: $name, images: &[$($img),*], t: $t, params: &[$($par),*] }),*]
    };
}

const D6: &[Spec] = gens! {
    "s0": ["x + a0/(y-1)", "y", "z", "w", "q", "p"], "t", ["-a0", "a1", "a2+a0", "a3", "a4", "a5", "a6"];
    "s1": ["x + a1/y", "y", "z", "w", "q", "p"], "t", ["a0", "-a1", "a2+a1", "a3", "a4", "a5", "a6"];
    "s2": ["x", "y - a2/(x-z)", "z", "w + a2/(x-z)", "q", "p"], "t", ["a0+a2", "a1+a2", "-a2", "a3+a2", "a4", "a5", "a6"];
    "s3": ["x", "y", "z + a3/w", "w", "q", "p"], "t", ["a0", "a1", "a2+a3", "-a3", "a4+a3", "a5", "a6"];
    "s4": ["x", "y", "z", "w - a4*q/(z*q-1)", "q", "p - a4*z/(z*q-1)"], "t", ["a0", "a1", "a2", "a3+a4", "-a4", "a5+a4", "a6+a4"];
    "s5": ["x", "y", "z", "w", "q + a5/p", "p"], "t", ["a0", "a1", "a2", "a3", "a4+a5", "-a5", "a6"];
    "s6": ["x", "y", "z", "w", "q + a6/(p-t)", "p"], "t", ["a0", "a1", "a2", "a3", "a4+a6", "a5", "-a6"];
    "pi1": ["-x", "1-y", "-z", "-w", "-q", "t-p"], "t", ["a1", "a0", "a2", "a3", "a4", "a6", "a5"];
    "pi2": ["t*q", "p/t", "t/z", "-(z*w+a3)*z/t", "x/t", "t*y"], "t", ["a6", "a5", "a4", "a3", "a2", "a1", "a0"];
    "pi3": ["x", "y", "z", "w", "q", "p-t"], "-t", ["a0", "a1", "a2", "a3", "a4", "a6", "a5"];
    "pi4": ["-x", "1-y", "-z", "-w", "-q", "-p"], "-t", ["a1", "a0", "a2", "a3", "a4", "a5", "a6"];
};

const B5: &[Spec] = gens! {
    "s0": ["-x - 2*a0/y - 1/y^2", "-y", "-z", "-w", "-q", "-p"], "-t", ["-a0", "a1+2*a0", "a2", "a3", "a4", "a5"];
    "s1": ["x", "y - a1/(x-z)", "z", "w + a1/(x-z)", "q", "p"], "t", ["a0+a1", "-a1", "a2+a1", "a3", "a4", "a5"];
    "s2": ["x", "y", "z + a2/w", "w", "q", "p"], "t", ["a0", "a1+a2", "-a2", "a3+a2", "a4", "a5"];
    "s3": ["x", "y", "z", "w - a3*q/(z*q-1)", "q", "p - a3*z/(z*q-1)"], "t", ["a0", "a1", "a2+a3", "-a3", "a4+a3", "a5+a3"];
    "s4": ["x", "y", "z", "w", "q + a4/p", "p"], "t", ["a0", "a1", "a2", "a3+a4", "-a4", "a5"];
    "s5": ["x", "y", "z", "w", "q + a5/(p-t)", "p"], "t", ["a0", "a1", "a2", "a3+a5", "a4", "-a5"];
    "pi": ["x", "y", "z", "w", "q", "p-t"], "-t", ["a0", "a1", "a2", "a3", "a5", "a4"];
};

const D52: &[Spec] = gens! {
    "s0": ["-x - 2*a0/y - 1/y^2", "-y", "-z", "-w", "-q", "-p"], "-t", ["-a0", "a1+2*a0", "a2", "a3", "a4"];
    "s1": ["x", "y - a1/(x-z)", "z", "w + a1/(x-z)", "q", "p"], "t", ["a0+a1", "-a1", "a2+a1", "a3", "a4"];
    "s2": ["x", "y", "z + a2/w", "w", "q", "p"], "t", ["a0", "a1+a2", "-a2", "a3+a2", "a4"];
    "s3": ["x", "y", "z", "w - a3*q/(z*q-1)", "q", "p - a3*z/(z*q-1)"], "t", ["a0", "a1", "a2+a3", "-a3", "a4+a3"];
    "s4": ["x", "y", "z", "w", "q + 2*a4/p - t/p^2", "p"], "-t", ["a0", "a1", "a2", "a3+2*a4", "-a4"];
    "pi": ["-t*q", "-p/t", "-t/z", "(z*w+a2)*z/t", "-x/t", "-t*y"], "t", ["a4", "a3", "a2", "a1", "a0"];
};

const D51: &[Spec] = gens! {
    "s0": ["x", "y - a0/x", "z", "w", "q", "p"], "t", ["-a0", "a1", "a2+a0", "a3", "a4", "a5"];
    "s1": ["x", "y - a1/(x+1)", "z", "w", "q", "p"], "t", ["a0", "-a1", "a2+a1", "a3", "a4", "a5"];
    "s2": ["x + a2*w/(y*w+1)", "y", "z + a2*y/(y*w+1)", "w", "q", "p"], "t", ["a0+a2", "a1+a2", "-a2", "a3+a2", "a4", "a5"];
    "s3": ["x", "y", "z", "w - a3*q/(z*q-1)", "q", "p - a3*z/(z*q-1)"], "t", ["a0", "a1", "a2+a3", "-a3", "a4+a3", "a5+a3"];
    "s4": ["x", "y", "z", "w", "q + a4/p", "p"], "t", ["a0", "a1", "a2", "a3+a4", "-a4", "a5"];
    "s5": ["x", "y", "z", "w", "q + a5/(p-t)", "p"], "t", ["a0", "a1", "a2", "a3+a5", "a4", "-a5"];
    "pi1": ["-x-1", "-y", "-z", "-w", "-q", "-p"], "-t", ["a1", "a0", "a2", "a3", "a4", "a5"];
    "pi2": ["x", "y", "z", "w", "q", "p-t"], "-t", ["a0", "a1", "a2", "a3", "a5", "a4"];
    "pi3": ["(p-t)/t", "-t*q", "-t*w", "z/t", "y/t", "-t*(x+1)"], "-t", ["a5", "a4", "a3", "a2", "a1", "a0"];
};

const A1D7: &[Spec] = gens! {
    "s0": ["q", "p + b0/q - t/q^2"], "-t", ["-b0", "b1+2*b0"];
    "s1": ["-q + b1/p + 1/p^2", "-p"], "-t", ["b0+2*b1", "-b1"];
    "sigma": ["t*p", "-q/t"], "-t", ["b1", "b0"];
};

fn specs(id: SystemId) -> &'static [Spec] {
    match id {
        SystemId::D6 => D6,
        SystemId::B5 => B5,
        SystemId::D52 => D52,
        SystemId::D51 => D51,
        SystemId::A1D7 => A1D7,
    }
}

fn build(sys: &HamiltonianSystem, s: &Spec) -> BirationalMap {
    BirationalMap::new(
        s.name,
        sys.phase_vars(),
        s.images.iter().map(|e| rf(e)).collect(),
        rf(s.t),
        sys.params.clone(),
        s.params.iter().map(|e| rf(e)).collect(),
    )
}

/// The printed generators in roster order: reflections first, then the
/// diagram automorphisms.
pub fn roster(id: SystemId) -> Vec<BirationalMap> {
    let sys = build_system(id);
    specs(id).iter().map(|s| build(&sys, s)).collect()
}

pub fn roster_names(id: SystemId) -> Vec<&'static str> {
    specs(id).iter().map(|s| s.name).collect()
}

/// Names of the reflections s₀, s₁, … in node order.
pub fn reflection_names(id: SystemId) -> Vec<&'static str> {
    roster_names(id).into_iter().filter(|n| is_reflection(n)).collect()
}

fn is_reflection(name: &str) -> bool {
    name.len() > 1 && name.starts_with('s') && name[1..].bytes().all(|b| b.is_ascii_digit())
}

pub fn generator(id: SystemId, name: &str) -> Result<BirationalMap, CoreError> {
    let sys = build_system(id);
    if id == SystemId::A1D7 && name == "pi" {
        // π = σ∘s₁
        let s = |n: &str| generator(id, n);
        return Ok(s("sigma")?.compose(&s("s1")?, Some(&sys.constraint))?.with_name("pi"));
    }
    specs(id)
        .iter()
        .find(|s| s.name == name)
        .map(|s| build(&sys, s))
        .ok_or_else(|| usage(&format!("generator of {id}"), name))
}

/// A space-separated word, read left to right as a product of automorphisms.
pub fn word(id: SystemId, letters: &str) -> Result<BirationalMap, CoreError> {
    let sys = build_system(id);
    let mut out = BirationalMap::identity(&sys.phase_vars(), &sys.params);
    for l in letters.split_whitespace() {
        out = out.compose(&generator(id, l)?, Some(&sys.constraint))?;
    }
    Ok(out.with_name(letters.trim()))
}

/// Braid order m_ij from c_ij·c_ji; None for an infinite order.
pub fn braid_order(product: i64) -> Option<u32> {
    match product {
        0 => Some(2),
        1 => Some(3),
        2 => Some(4),
        3 => Some(6),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CartanData {
    pub nodes: Vec<&'static str>,
    pub matrix: Vec<Vec<i64>>,
    pub braid_orders: Vec<Vec<Option<u32>>>,
}

impl CartanData {
    /// Pairs i < j joined by a bond, with the bond's braid order.
    pub fn bonds(&self) -> Vec<(usize, usize, Option<u32>)> {
        let n = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.braid_orders[i][j] != Some(2) {
                    out.push((i, j, self.braid_orders[i][j]));
                }
            }
        }
        out
    }
}

/// `c_ij` is minus the coefficient of α_i in s_i(α_j) − α_j, read off the
/// printed parameter map (before any constraint reduction).
pub fn cartan_data(id: SystemId) -> CartanData {
    let sys = build_system(id);
    let nodes = reflection_names(id);
    let gens: Vec<BirationalMap> = nodes.iter().map(|n| generator(id, n).expect("roster name")).collect();
    let n = nodes.len();
    let mut matrix = vec![vec![0i64; n]; n];
    for (i, g) in gens.iter().enumerate() {
        for (j, &aj) in sys.params.iter().enumerate().take(n) {
            let shift = g.image_of(aj).expect("parameter image") - &RatFn::var(aj);
            let c = shift.derivative(sys.params[i]);
            let c = c.as_constant().and_then(|c| c.is_real().then(|| c.re.clone()));
            let c = c.filter(|c| c.is_integer()).expect("integral Cartan entry");
            matrix[i][j] = -c.numer().try_into().unwrap_or(0i64);
        }
    }
    let braid_orders = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Some(1) } else { braid_order(matrix[i][j] * matrix[j][i]) }).collect())
        .collect();
    CartanData { nodes, matrix, braid_orders }
}

const ORDER_SEARCH: u32 = 12;

/// Smallest n ≤ 12 with gⁿ = id, if any.
pub fn order(g: &BirationalMap, ideal: &Constraint) -> Result<Option<u32>, CoreError> {
    let mut cur = g.clone();
    for n in 1..=ORDER_SEARCH {
        if cur.is_identity(Some(ideal)) {
            return Ok(Some(n));
        }
        cur = cur.compose(g, Some(ideal))?;
    }
    Ok(None)
}

fn relation_check(name: String, m: Result<BirationalMap, CoreError>, ideal: &Constraint) -> Check {
    match m {
        Ok(m) if m.is_identity(Some(ideal)) => Check::pass(name, "identity"),
        Ok(m) => Check::new(name, Status::Fail, format!("{m:?}")),
        Err(e) => Check::new(name, Status::Fail, e.to_string()),
    }
}

/// One entry of the relation suite, cheap to enumerate and independent of
/// the others, so callers may evaluate them in parallel.
#[derive(Debug, Clone, PartialEq)]
pub enum Relation {
    Involution(usize),
    Braid(usize, usize, u32),
    /// Order of a diagram automorphism, searched up to 12.
    Order(&'static str),
    /// π sᵢ π⁻¹ matched against the roster.
    Conjugation(&'static str),
}

pub fn relation_suite(id: SystemId) -> Vec<Relation> {
    let cd = cartan_data(id);
    let n = cd.nodes.len();
    let mut out: Vec<Relation> = (0..n).map(Relation::Involution).collect();
    for i in 0..n {
        for j in i + 1..n {
            if let Some(m) = cd.braid_orders[i][j] {
                out.push(Relation::Braid(i, j, m));
            }
        }
    }
    for name in roster_names(id).into_iter().filter(|n| !is_reflection(n)) {
        out.push(Relation::Order(name));
        out.push(Relation::Conjugation(name));
    }
    out
}

pub fn check_relation(id: SystemId, rel: &Relation) -> Check {
    let sys = build_system(id);
    let ideal = &sys.constraint;
    let nodes = reflection_names(id);
    let g = |n: &str| generator(id, n).expect("roster name");
    match *rel {
        Relation::Involution(i) => {
            let s = g(nodes[i]);
            relation_check(format!("{id} {}^2 = id", nodes[i]), s.compose(&s, Some(ideal)), ideal)
        }
        Relation::Braid(i, j, m) => {
            let name = format!("{id} ({} {})^{m} = id", nodes[i], nodes[j]);
            let m = g(nodes[i]).compose(&g(nodes[j]), Some(ideal)).and_then(|p| p.pow(m, Some(ideal)));
            relation_check(name, m, ideal)
        }
        Relation::Order(name) => match order(&g(name), ideal) {
            Ok(Some(k)) => Check::recorded(format!("{id} order of {name}"), k.to_string()),
            Ok(None) => Check::recorded(format!("{id} order of {name}"), format!("> {ORDER_SEARCH}")),
            Err(e) => Check::new(format!("{id} order of {name}"), Status::Fail, e.to_string()),
        },
        Relation::Conjugation(name) => {
            let label = format!("{id} {name} s_i {name}^-1");
            let p = g(name);
            let inverse = match order(&p, ideal) {
                Ok(Some(k)) => p.pow(k - 1, Some(ideal)),
                Ok(None) => return Check::recorded(label, "no finite order found"),
                Err(e) => return Check::new(label, Status::Fail, e.to_string()),
            };
            let inverse = match inverse {
                Ok(m) => m,
                Err(e) => return Check::new(label, Status::Fail, e.to_string()),
            };
            let mut perm = Vec::new();
            for &n in &nodes {
                let conj = p.compose(&g(n), Some(ideal)).and_then(|c| c.compose(&inverse, Some(ideal)));
                let hit = conj
                    .ok()
                    .and_then(|c| nodes.iter().find(|&&m| c.same_as(&g(m), Some(ideal))).copied());
                perm.push(format!("{n}->{}", hit.unwrap_or("?")));
            }
            Check::recorded(label, perm.join(" "))
        }
    }
}

pub fn verify_relations(id: SystemId) -> Vec<Check> {
    relation_suite(id).iter().map(|r| check_relation(id, r)).collect()
}

/// Residuals of `J·F + ∂ₜg = (dt'/dt)·F(g)` per component, reduced on the
/// constraint; all zero iff `g` maps solutions to solutions.
pub fn symmetry_residuals(sys: &HamiltonianSystem, g: &BirationalMap) -> Result<Vec<RatFn>, CoreError> {
    let field = sys.vector_field().components;
    let lhs = g.push_forward(&field)?;
    lhs.iter()
        .zip(&field)
        .map(|(l, f)| Ok(sys.constraint.reduce(&(l - &g.apply(f)?))))
        .collect()
}

pub fn verify_symmetry(id: SystemId, map_name: &str) -> Result<Check, CoreError> {
    let sys = build_system(id);
    let g = generator(id, map_name)?;
    let labels: Vec<&str> = COMPONENT_LABELS.iter().copied().take(sys.phase_vars().len()).collect();
    let labels = if id == SystemId::A1D7 { vec!["dq/dt", "dp/dt"] } else { labels };
    Ok(match symmetry_residuals(&sys, &g) {
        Ok(r) => Check::residuals(format!("{id} {map_name} symmetry"), &labels, &r),
        Err(e) => Check::new(format!("{id} {map_name} symmetry"), Status::Fail, e.to_string()),
    })
}

/// Roster names plus, for A1D7, the composite π.
pub fn symmetry_roster(id: SystemId) -> Vec<&'static str> {
    let mut names = roster_names(id);
    if id == SystemId::A1D7 {
        names.push("pi");
    }
    names
}

#[derive(Debug, Clone)]
pub struct Translation {
    pub name: &'static str,
    pub word: String,
    pub printed_shift: Vec<i64>,
}

pub fn translations(id: SystemId) -> Vec<Translation> {
    let t = |name, word: String, shift: &[i64]| Translation { name, word, printed_shift: shift.to_vec() };
    match id {
        SystemId::D6 => {
            let t1 = "pi1 s5 s4 s3 s2 s1 s0 s1 s2 s3 s4 s5".to_string();
            let t2 = format!("s4 s6 {t1} s6 s4");
            let t3 = format!("s6 {t1} s6");
            vec![
                t("T1", t1.clone(), &[0, 0, 0, 0, 0, -1, 1]),
                t("T2", t2.clone(), &[0, 0, 0, 1, -1, 0, 0]),
                t("T3", t3.clone(), &[0, 0, 0, 0, 1, -1, -1]),
                t("T4", format!("pi2 {t1} pi2"), &[1, -1, 0, 0, 0, 0, 0]),
                t("T5", format!("pi2 {t2} pi2"), &[0, 0, -1, 1, 0, 0, 0]),
                t("T6", format!("pi2 {t3} pi2"), &[-1, -1, 1, 0, 0, 0, 0]),
            ]
        }
        SystemId::B5 => {
            let t1 = "pi s4 s3 s2 s1 s0 s1 s2 s3 s4".to_string();
            let t3 = format!("s3 s5 {t1} s5 s3");
            let t4 = format!("s2 {t3} s2");
            vec![
                t("T1", t1.clone(), &[0, 0, 0, 0, -1, 1]),
                t("T2", "pi s5 s4 s3 s2 s1 s0 s1 s2 s3".to_string(), &[0, 0, 0, -1, 1, 1]),
                t("T3", t3.clone(), &[0, 0, 1, -1, 0, 0]),
                t("T4", t4.clone(), &[0, 1, -1, 0, 0, 0]),
                t("T5", format!("s1 {t4} s1"), &[1, -1, 0, 0, 0, 0]),
            ]
        }
        SystemId::D52 => {
            let t1 = "s4 s3 s2 s1 s0 s1 s2 s3".to_string();
            let t2 = format!("s3 {t1} s3");
            let t3 = format!("s2 {t2} s2");
            vec![
                t("T1", t1.clone(), &[0, 0, 0, -2, 2]),
                t("T2", t2.clone(), &[0, 0, -2, 2, 0]),
                t("T3", t3.clone(), &[0, -2, 2, 0, 0]),
                t("T4", format!("s1 {t3} s1"), &[-2, 2, 0, 0, 0]),
            ]
        }
        SystemId::D51 | SystemId::A1D7 => Vec::new(),
    }
}

pub fn translation(id: SystemId, name: &str) -> Result<BirationalMap, CoreError> {
    let t = translations(id).into_iter().find(|t| t.name == name).ok_or_else(|| usage(&format!("translation of {id}"), name))?;
    Ok(word(id, &t.word)?.with_name(name))
}

/// The word's parameter action as an affine map; the phase images are
/// not needed to read off the shift.
pub fn word_param_action(id: SystemId, letters: &str) -> Result<Vec<RatFn>, CoreError> {
    let sys = build_system(id);
    let mut cur: Vec<RatFn> = sys.params.iter().map(|&v| RatFn::var(v)).collect();
    for l in letters.split_whitespace() {
        let g = generator(id, l)?;
        // (cur·g)(α) = cur(g(α))
        let mut b = Subst::new();
        for (v, img) in sys.params.iter().zip(&cur) {
            b.insert(*v, img.clone());
        }
        cur = g.param_images().iter().map(|e| sys.constraint.reduce(&e.substitute(&b).expect("affine"))).collect();
    }
    Ok(cur)
}

pub fn param_shift_of(id: SystemId, letters: &str) -> Result<Vec<RatFn>, CoreError> {
    let sys = build_system(id);
    let act = word_param_action(id, letters)?;
    Ok(sys.params.iter().zip(act).map(|(&v, e)| sys.constraint.reduce(&(&e - &RatFn::var(v)))).collect())
}

pub fn verify_translation(id: SystemId, t: &Translation) -> Check {
    let sys = build_system(id);
    let name = format!("{id} {} shift", t.name);
    let shift = match param_shift_of(id, &t.word) {
        Ok(s) => s,
        Err(e) => return Check::new(name, Status::Fail, e.to_string()),
    };
    let ok = shift
        .iter()
        .zip(&t.printed_shift)
        .all(|(s, &k)| sys.constraint.equals_mod(s, &RatFn::from_i64(k)));
    let shown: Vec<String> = shift.iter().map(|s| s.to_string()).collect();
    Check::new(name, Status::from_bool(ok), format!("({})", shown.join(", ")))
}

pub fn verify_translations(id: SystemId) -> Vec<Check> {
    translations(id).iter().map(|t| verify_translation(id, t)).collect()
}
