use cp3_algebra::{RatFn, Var};
use cp3_core::solutions::{first_integral, IntegralId};
use cp3_core::system::subsystem;
use cp3_core::weyl::{generator, word};
use cp3_core::{build_system, BirationalMap, Check, Status, SystemId};
use num_complex::Complex;

use crate::compile::Compiled;
use crate::error::NumericError;
use crate::flow::{eval_constant, Flow};
use crate::integrate::{integrate, NumericConfig};
use crate::{Real, COMMUTE_THRESHOLD, DRIFT_THRESHOLD};

#[derive(Debug, Clone)]
pub struct CommuteReport<F> {
    pub discrepancy: F,
    /// g applied to the endpoint of the original trajectory.
    pub path_a: Vec<Complex<F>>,
    /// Endpoint of the transformed trajectory.
    pub path_b: Vec<Complex<F>>,
    pub check: Check,
}

fn lookup_map(id: SystemId, name: &str) -> Result<BirationalMap, NumericError> {
    let sys = build_system(id);
    Ok(match name {
        "id" => BirationalMap::identity(&sys.phase_vars(), &sys.params),
        n if n.contains(' ') => word(id, n)?,
        n => generator(id, n)?,
    })
}

fn real_time<F: Real>(z: Complex<F>, what: &str) -> Result<F, NumericError> {
    let tiny = F::from(1e-12).unwrap() * (F::one() + z.re.abs());
    if z.im.abs() > tiny {
        return Err(NumericError::Config(format!("{what} maps real time to {z}")));
    }
    Ok(z.re)
}

/// Integrates then maps, and maps then integrates, comparing endpoints.
/// `map_name` is a generator, a space-separated word, or `id`.
pub fn symmetry_commute_check<F: Real>(
    id: SystemId,
    map_name: &str,
    params: &[Complex<F>],
    initial: &[Complex<F>],
    t0: F,
    t1: F,
    cfg: &NumericConfig<F>,
) -> Result<CommuteReport<F>, NumericError> {
    let sys = build_system(id);
    let g = lookup_map(id, map_name)?;
    let bound: Vec<(Var, Complex<F>)> = sys.params.iter().copied().zip(params.iter().copied()).collect();
    let mut slots = sys.phase_vars();
    slots.push(Var::T);
    let labels: Vec<String> = slots.iter().map(|v| format!("{map_name}({})", v.name())).collect();
    let mut exprs = g.images().to_vec();
    exprs.push(g.t_image().clone());
    let gc = Compiled::new(&exprs, &labels, &slots, &bound)?;
    let apply = |y: &[Complex<F>], t: F| -> Result<Vec<Complex<F>>, NumericError> {
        let mut p = y.to_vec();
        p.push(Complex::new(t, F::zero()));
        gc.eval(&p, cfg.pole_guard)
    };

    let flow = Flow::system(id, params)?;
    let a = integrate(&flow, initial, t0, t1, cfg, None)?;
    let mut path_a = apply(a.last(), t1)?;
    let t1_image = real_time(path_a.pop().unwrap(), map_name)?;

    let mut start = apply(initial, t0)?;
    let t0_image = real_time(start.pop().unwrap(), map_name)?;
    let new_params: Vec<Complex<F>> =
        g.param_images().iter().map(|e| eval_constant(e, &bound)).collect::<Result<_, _>>()?;
    let flow_b = Flow::system(id, &new_params)?;
    let b = integrate(&flow_b, &start, t0_image, t1_image, cfg, None)?;
    let path_b = b.last().to_vec();

    let discrepancy = path_a
        .iter()
        .zip(&path_b)
        .map(|(u, v)| (u - v).norm())
        .fold(F::zero(), F::max);
    let ok = discrepancy.to_f64().is_some_and(|d| d < COMMUTE_THRESHOLD);
    let check = Check::new(
        format!("{id} {map_name} commutes with the flow"),
        Status::from_bool(ok),
        format!("max discrepancy {discrepancy:e} on t in [{t0}, {t1}]"),
    );
    Ok(CommuteReport { discrepancy, path_a, path_b, check })
}

#[derive(Debug, Clone)]
pub struct DriftReport<F> {
    pub drift: F,
    pub values: Vec<Complex<F>>,
    pub check: Check,
}

/// Relative drift of a first integral along the subsystem flow, with
/// `initial` = (q, p) and `params` in the order the subsystem lists them.
pub fn integral_drift_check<F: Real>(
    integral: IntegralId,
    params: &[Complex<F>],
    initial: &[Complex<F>],
    t0: F,
    t1: F,
    cfg: &NumericConfig<F>,
) -> Result<DriftReport<F>, NumericError> {
    let fi = first_integral(integral);
    let h = subsystem(fi.hamiltonian);
    let flow = Flow::subsystem(fi.hamiltonian, params)?;
    let bound: Vec<(Var, Complex<F>)> = h.params.iter().copied().zip(params.iter().copied()).collect();
    let slots = [h.pair.0, h.pair.1, Var::T];
    let monitor = Compiled::new(std::slice::from_ref(&fi.expression), &[integral.as_str().to_string()], &slots, &bound)?;
    let traj = integrate(&flow, initial, t0, t1, cfg, Some(&monitor))?;
    let i0 = traj.monitored[0];
    let scale = i0.norm().max(F::min_positive_value());
    let drift = traj.monitored.iter().map(|v| (v - i0).norm() / scale).fold(F::zero(), F::max);
    let ok = drift.to_f64().is_some_and(|d| d < DRIFT_THRESHOLD);
    let check = Check::new(
        format!("{} drift along {}", integral.as_str(), fi.hamiltonian.as_str()),
        Status::from_bool(ok),
        format!("relative drift {drift:e} over {} steps on [{t0}, {t1}]", traj.accepted),
    );
    Ok(DriftReport { drift, values: traj.monitored, check })
}

/// Evaluates one exact expression at a numeric point.
pub fn eval_expression<F: Real>(f: &RatFn, slots: &[Var], point: &[Complex<F>], bound: &[(Var, Complex<F>)], pole_guard: F) -> Result<Complex<F>, NumericError> {
    let c = Compiled::new(std::slice::from_ref(f), &[f.to_string()], slots, bound)?;
    Ok(c.eval(point, pole_guard)?[0])
}
