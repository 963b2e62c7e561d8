//! Verification work split into independent tasks. Tasks run in parallel;
//! records come back in task order.

use std::time::Instant;

use cp3_core::charts::{chart, chart_ids, check_polynomiality, negative_controls, round_trip_defects};
use cp3_core::confluence::{self, DegenerationId, TrId};
use cp3_core::solutions::{verify_first_integral, verify_seed, IntegralId, SeedId};
use cp3_core::system::{decomposition_check, scalar_piii_checks, vector_field_checks};
use cp3_core::weyl::{check_relation, relation_suite, translations, verify_symmetry, verify_translation, symmetry_roster};
use cp3_core::{Check, CoreError, Status, SystemId};
use rayon::prelude::*;

use crate::numeric_battery;
use crate::report::Record;

#[derive(Debug, Clone, PartialEq)]
pub enum TaskError {
    Usage(String),
    Internal(String),
}

impl From<CoreError> for TaskError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Usage(m) => TaskError::Usage(m),
            other => TaskError::Internal(other.to_string()),
        }
    }
}

type Job = Box<dyn Fn() -> Result<Vec<Check>, TaskError> + Send + Sync>;

pub struct Task {
    pub label: String,
    job: Job,
}

impl Task {
    pub fn new(label: impl Into<String>, job: impl Fn() -> Result<Vec<Check>, TaskError> + Send + Sync + 'static) -> Task {
        Task { label: label.into(), job: Box::new(job) }
    }

    fn one(label: impl Into<String>, job: impl Fn() -> Result<Check, CoreError> + Send + Sync + 'static) -> Task {
        Task::new(label, move || Ok(vec![job()?]))
    }

    fn many(label: impl Into<String>, job: impl Fn() -> Result<Vec<Check>, CoreError> + Send + Sync + 'static) -> Task {
        Task::new(label, move || Ok(job()?))
    }
}

pub fn run_tasks(tasks: &[Task]) -> Result<Vec<Record>, TaskError> {
    let done: Vec<Result<Vec<Record>, TaskError>> = tasks
        .par_iter()
        .map(|t| {
            let start = Instant::now();
            let checks = (t.job)()?;
            let elapsed = start.elapsed();
            Ok(checks.into_iter().map(|c| Record::from_check(c, elapsed)).collect())
        })
        .collect();
    let mut out = Vec::new();
    for r in done {
        out.extend(r?);
    }
    Ok(out)
}

pub fn relations(id: SystemId) -> Vec<Task> {
    relation_suite(id)
        .into_iter()
        .map(|rel| Task::new(format!("{id} relation"), move || Ok(vec![check_relation(id, &rel)])))
        .collect()
}

pub fn symmetry(id: SystemId, map: Option<&str>) -> Vec<Task> {
    let names: Vec<String> = match map {
        Some(m) => vec![m.to_string()],
        None => symmetry_roster(id).into_iter().map(String::from).collect(),
    };
    names.into_iter().map(|n| Task::one(format!("{id} {n} symmetry"), move || verify_symmetry(id, &n))).collect()
}

pub fn translation_shifts(id: SystemId) -> Vec<Task> {
    translations(id)
        .into_iter()
        .map(|t| Task::new(format!("{id} {}", t.name), move || Ok(vec![verify_translation(id, &t)])))
        .collect()
}

pub fn charts(id: SystemId) -> Vec<Task> {
    chart_ids(id).into_iter().map(|c| Task::one(format!("{id} {c}"), move || check_polynomiality(id, c))).collect()
}

/// Each control is expected to be non-polynomial; the record passes when
/// it is.
pub fn chart_controls(id: SystemId) -> Vec<Task> {
    vec![Task::new(format!("{id} chart controls"), move || {
        Ok(negative_controls(id)
            .into_iter()
            .map(|c| {
                let st = if c.status == Status::Fail { Status::Pass } else { Status::Fail };
                Check::new(format!("{} is not polynomial", c.name), st, c.witness)
            })
            .collect())
    })]
}

pub fn chart_round_trips(id: SystemId) -> Vec<Task> {
    chart_ids(id)
        .into_iter()
        .map(|c| {
            Task::one(format!("{id} {c} round trip"), move || {
                let d = round_trip_defects(&chart(id, c)?)?;
                Ok(Check::new(
                    format!("{id} {c} inverts"),
                    Status::from_bool(d.is_empty()),
                    if d.is_empty() { "both compositions are the identity".to_string() } else { d.join("; ") },
                ))
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Which {
    #[value(name = "d6-b5")]
    D6B5,
    #[value(name = "d6-d52")]
    D6D52,
    #[value(name = "b5-d51")]
    B5D51,
    Tr,
    Uv,
}

impl Which {
    pub const ALL: [Which; 5] = [Which::D6B5, Which::D6D52, Which::B5D51, Which::Tr, Which::Uv];
}

pub fn confluence(which: Which) -> Vec<Task> {
    match which {
        Which::D6B5 => vec![Task::many("D6_to_B5", || confluence::degenerate(DegenerationId::D6ToB5))],
        Which::D6D52 => vec![Task::many("D6_to_D52", || confluence::degenerate(DegenerationId::D6ToD52))],
        Which::B5D51 => vec![Task::many("B5_to_D51", confluence::equivalence_b5_to_d51)],
        Which::Tr => TrId::ALL.into_iter().map(|t| Task::many(t.as_str(), move || confluence::symplectic_tr(t))).collect(),
        Which::Uv => vec![Task::many("uv", confluence::verify_uv_correspondence)],
    }
}

pub fn a1_generators() -> Vec<Task> {
    vec![Task::many("a1d7 generators", confluence::verify_a1_symmetry)]
}

pub fn solutions(id: Option<SeedId>) -> Vec<Task> {
    let ids: Vec<SeedId> = id.map_or_else(|| SeedId::ALL.to_vec(), |s| vec![s]);
    ids.into_iter().map(|s| Task::many(s.as_str(), move || verify_seed(s))).collect()
}

pub fn integrals() -> Vec<Task> {
    IntegralId::ALL
        .into_iter()
        .map(|i| Task::new(i.as_str(), move || Ok(verify_first_integral(i))))
        .collect()
}

pub fn fields(id: Option<SystemId>) -> Vec<Task> {
    let ids: Vec<SystemId> = id.map_or_else(|| SystemId::ALL.to_vec(), |s| vec![s]);
    let mut out = Vec::new();
    for id in ids {
        out.push(Task::new(format!("{id} vector field"), move || Ok(vector_field_checks(id))));
        out.push(Task::new(format!("{id} decomposition"), move || Ok(decomposition_check(id).into_iter().collect())));
    }
    if id.is_none() {
        out.push(Task::new("scalar reduction", || Ok(scalar_piii_checks())));
    }
    out
}

pub fn numeric() -> Vec<Task> {
    numeric_battery::tasks()
}

/// Every exact and numeric check.
pub fn all() -> Vec<Task> {
    let mut out = fields(None);
    for id in SystemId::ALL {
        out.extend(relations(id));
        out.extend(symmetry(id, None));
        out.extend(translation_shifts(id));
        out.extend(charts(id));
        out.extend(chart_controls(id));
        out.extend(chart_round_trips(id));
    }
    for w in Which::ALL {
        out.extend(confluence(w));
    }
    // the A1 relations and symmetries are already in the per-system loop
    out.push(Task::many("a1d7 sigma symplectic", || {
        Ok(confluence::verify_a1_symmetry()?.into_iter().filter(|c| c.name.ends_with("symplectic")).collect())
    }));
    out.extend(solutions(None));
    out.extend(integrals());
    out.extend(numeric());
    out
}
