//! Fixed numeric experiments: the closed-form endpoint, commuting checks
//! at one generic rational point, and first-integral drift.

use cp3_core::solutions::IntegralId;
use cp3_core::weyl::roster_names;
use cp3_core::{Check, Status, SystemId};
use cp3_numeric::{integral_drift_check, integrate, symmetry_commute_check, Config64, Flow, C64, NumericError};

use crate::suite::{Task, TaskError};

fn r(v: &[f64]) -> Vec<C64> {
    v.iter().map(|&x| C64::new(x, 0.0)).collect()
}

fn numeric_fail(name: &str, e: NumericError) -> Result<Vec<Check>, TaskError> {
    Ok(vec![Check::new(name, Status::Fail, e.to_string())])
}

/// Parameters and initial point used for the D6 commuting checks; all
/// entries are small-denominator rationals away from every divisor.
pub fn d6_point() -> (Vec<C64>, Vec<C64>) {
    let params = r(&[3.0 / 10.0, 1.0 / 5.0, 3.0 / 20.0, -1.0 / 10.0, 1.0 / 20.0, 1.0 / 10.0, 1.0 / 5.0]);
    let initial = vec![
        C64::new(0.3, 0.1),
        C64::new(0.4, -0.2),
        C64::new(-0.2, 0.3),
        C64::new(0.5, 0.1),
        C64::new(0.7, -0.1),
        C64::new(0.6, 0.2),
    ];
    (params, initial)
}

pub fn d52_point() -> (Vec<C64>, Vec<C64>) {
    let (_, initial) = d6_point();
    (r(&[0.2, 0.15, 0.3, 0.1, 0.25]), initial)
}

pub const COMMUTE_SPAN: (f64, f64) = (1.0, 1.3);

/// x(4) on the α₃ = 1/4 member of the √t family, expected 2.
pub fn closed_form_endpoint() -> Result<Check, NumericError> {
    let a3 = 0.25;
    let h = (1.0 - 2.0 * a3) / 2.0;
    let flow = Flow::system(SystemId::D6, &r(&[h, 0.0, 0.0, a3, 0.0, 0.0, h]))?;
    let tr = integrate(&flow, &r(&[1.0, 0.0, 1.0, -a3 / 2.0, 1.0, 0.0]), 1.0, 4.0, &Config64::default(), None)?;
    let x = tr.last()[0];
    let err = (x - C64::new(2.0, 0.0)).norm();
    Ok(Check::new(
        "D6_alg1 x(4) = 2",
        Status::from_bool(err < 1e-8),
        format!("x(4) = {x}, error {err:e}, {} steps", tr.accepted),
    ))
}

pub fn fixed_solution_stays() -> Result<Check, NumericError> {
    let (a2, a3, a4, a6) = (0.1, 0.2, -0.15, 0.05);
    let a0 = 0.5 - a2 - a3 - a4 - a6;
    let flow = Flow::system(SystemId::D6, &r(&[a0, a0, a2, a3, a4, a6, a6]))?;
    let tr = integrate(&flow, &r(&[0.0, 0.5, 0.0, 0.0, 0.0, 0.5]), 1.0, 10.0, &Config64::default(), None)?;
    let dev = tr
        .times
        .iter()
        .zip(&tr.states)
        .flat_map(|(t, y)| y.iter().zip(r(&[0.0, 0.5, 0.0, 0.0, 0.0, t / 2.0])).map(|(a, b)| (a - b).norm()).collect::<Vec<_>>())
        .fold(0.0, f64::max);
    Ok(Check::new("D6_fixed stays fixed on [1, 10]", Status::from_bool(dev < 1e-10), format!("max deviation {dev:e}")))
}

pub fn commute(id: SystemId, map: &str) -> Result<Check, NumericError> {
    let (p, y) = if id == SystemId::D52 { d52_point() } else { d6_point() };
    let (t0, t1) = COMMUTE_SPAN;
    Ok(symmetry_commute_check(id, map, &p, &y, t0, t1, &Config64::default())?.check)
}

/// (integral, parameter, span end) for the drift runs, all from t = 1.
pub const DRIFT_CASES: [(IntegralId, (f64, f64), f64); 3] =
    [(IntegralId::I3, (-0.4, 0.2), 10.0), (IntegralId::I4, (0.25, 0.0), 10.0), (IntegralId::I5, (0.1, 0.1), 10.0)];

pub fn drift(i: IntegralId, al: (f64, f64), t1: f64) -> Result<Check, NumericError> {
    let y0 = [C64::new(0.4, 0.1), C64::new(0.3, -0.2)];
    Ok(integral_drift_check(i, &[C64::new(al.0, al.1)], &y0, 1.0, t1, &Config64::default())?.check)
}

fn task(label: String, f: impl Fn() -> Result<Check, NumericError> + Send + Sync + 'static) -> Task {
    let name = label.clone();
    Task::new(label, move || match f() {
        Ok(c) => Ok(vec![c]),
        Err(e) => numeric_fail(&name, e),
    })
}

pub fn tasks() -> Vec<Task> {
    let mut out = vec![task("D6_alg1 x(4) = 2".into(), closed_form_endpoint), task("D6_fixed stays fixed".into(), fixed_solution_stays)];
    for name in roster_names(SystemId::D6) {
        out.push(task(format!("d6 {name} commutes with the flow"), move || commute(SystemId::D6, name)));
    }
    out.push(task("d52 s4 commutes with the flow".into(), || commute(SystemId::D52, "s4")));
    for (i, al, t1) in DRIFT_CASES {
        out.push(task(format!("{} drift", i.as_str()), move || drift(i, al, t1)));
    }
    out
}
