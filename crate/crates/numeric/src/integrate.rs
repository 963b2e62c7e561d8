//! Dormand–Prince 5(4) with FSAL and a mixed absolute/relative error norm.

use num_complex::Complex;

use crate::compile::Compiled;
use crate::error::NumericError;
use crate::flow::Flow;
use crate::Real;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericConfig<F> {
    pub rel_tol: F,
    pub abs_tol: F,
    pub max_step: F,
    pub min_step: F,
    pub pole_guard: F,
}

impl<F: Real> Default for NumericConfig<F> {
    fn default() -> Self {
        let c = |x: f64| F::from(x).unwrap();
        NumericConfig { rel_tol: c(1e-10), abs_tol: c(1e-12), max_step: F::infinity(), min_step: c(1e-12), pole_guard: c(1e-9) }
    }
}

impl<F: Real> NumericConfig<F> {
    pub fn with_tol(tol: F) -> Self {
        NumericConfig { rel_tol: tol, abs_tol: tol / F::from(100.0).unwrap(), ..Default::default() }
    }

    pub fn validate(&self) -> Result<(), NumericError> {
        let ok = self.rel_tol > F::zero()
            && self.abs_tol > F::zero()
            && self.min_step > F::zero()
            && self.min_step <= self.max_step
            && self.pole_guard >= F::zero();
        if ok {
            Ok(())
        } else {
            Err(NumericError::Config(format!("{self:?}")))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory<F> {
    pub labels: Vec<&'static str>,
    pub times: Vec<F>,
    pub states: Vec<Vec<Complex<F>>>,
    pub accepted: usize,
    pub rejected: usize,
    /// Monitored expression at every recorded state, if one was given.
    pub monitored: Vec<Complex<F>>,
}

impl<F: Real> Trajectory<F> {
    pub fn last(&self) -> &[Complex<F>] {
        self.states.last().expect("a trajectory holds at least the initial state")
    }

    pub fn end_time(&self) -> F {
        *self.times.last().expect("a trajectory holds at least the initial time")
    }
}

const C: [f64; 7] = [0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0];
const A: [[f64; 6]; 7] = [
    [0.0; 6],
    [1.0 / 5.0, 0.0, 0.0, 0.0, 0.0, 0.0],
    [3.0 / 40.0, 9.0 / 40.0, 0.0, 0.0, 0.0, 0.0],
    [44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0, 0.0, 0.0, 0.0],
    [19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0, 0.0, 0.0],
    [9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0, -5103.0 / 18656.0, 0.0],
    [35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0, 11.0 / 84.0],
];
/// Fifth-order weights minus the embedded fourth-order ones.
const E: [f64; 7] = [
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
];

/// Fifth-order state and error estimate of one trial step.
type Trial<F> = (Vec<Complex<F>>, Vec<Complex<F>>);

struct Stepper<'a, F> {
    flow: &'a Flow<F>,
    guard: F,
    k: [Vec<Complex<F>>; 7],
    tmp: Vec<Complex<F>>,
}

impl<'a, F: Real> Stepper<'a, F> {
    fn new(flow: &'a Flow<F>, guard: F) -> Self {
        let z = vec![Complex::new(F::zero(), F::zero()); flow.dim()];
        Stepper { flow, guard, k: std::array::from_fn(|_| z.clone()), tmp: z }
    }

    /// One trial step from (t, y) with k[0] = f(t, y) already in place;
    /// returns the fifth-order state and the error estimate, leaving
    /// f(t+h, y_new) in k[6].
    #[allow(clippy::needless_range_loop)]
    fn step(&mut self, t: F, y: &[Complex<F>], h: F) -> Result<Trial<F>, NumericError> {
        let f = |x: f64| F::from(x).unwrap();
        for s in 1..7 {
            for i in 0..y.len() {
                let mut acc = Complex::new(F::zero(), F::zero());
                for j in 0..s {
                    if A[s][j] != 0.0 {
                        acc = acc + self.k[j][i] * f(A[s][j]);
                    }
                }
                self.tmp[i] = y[i] + acc * h;
            }
            let (_, tail) = self.k.split_at_mut(s);
            self.flow.eval_into(t + h * f(C[s]), &self.tmp, self.guard, &mut tail[0])?;
        }
        // the seventh stage is evaluated at the fifth-order solution
        let y_new = self.tmp.clone();
        let err = (0..y.len())
            .map(|i| {
                let mut acc = Complex::new(F::zero(), F::zero());
                for (j, e) in E.iter().enumerate() {
                    acc = acc + self.k[j][i] * f(*e);
                }
                acc * h
            })
            .collect();
        Ok((y_new, err))
    }
}

fn error_norm<F: Real>(y: &[Complex<F>], y_new: &[Complex<F>], err: &[Complex<F>], cfg: &NumericConfig<F>) -> F {
    let mut acc = F::zero();
    for i in 0..y.len() {
        for (a, b, e) in [(y[i].re, y_new[i].re, err[i].re), (y[i].im, y_new[i].im, err[i].im)] {
            let sc = cfg.abs_tol + cfg.rel_tol * a.abs().max(b.abs());
            acc = acc + (e / sc) * (e / sc);
        }
    }
    (acc / F::from(2 * y.len()).unwrap()).sqrt()
}

/// Integrates `flow` from `t0` to `t1` (either direction, same sign).
pub fn integrate<F: Real>(
    flow: &Flow<F>,
    initial: &[Complex<F>],
    t0: F,
    t1: F,
    cfg: &NumericConfig<F>,
    monitor: Option<&Compiled<F>>,
) -> Result<Trajectory<F>, NumericError> {
    cfg.validate()?;
    if initial.len() != flow.dim() {
        return Err(NumericError::Arity { expected: flow.dim(), got: initial.len() });
    }
    if t0 == F::zero() || t1 == F::zero() || t0.signum() != t1.signum() {
        return Err(NumericError::CrossesOrigin { t0: t0.to_f64().unwrap_or(f64::NAN), t1: t1.to_f64().unwrap_or(f64::NAN) });
    }
    let watch = |t: F, y: &[Complex<F>]| -> Result<Option<Complex<F>>, NumericError> {
        match monitor {
            None => Ok(None),
            Some(m) => {
                let mut p = y.to_vec();
                p.push(Complex::new(t, F::zero()));
                Ok(Some(m.eval(&p, cfg.pole_guard)?[0]))
            }
        }
    };
    let mut traj = Trajectory {
        labels: flow.labels.clone(),
        times: vec![t0],
        states: vec![initial.to_vec()],
        accepted: 0,
        rejected: 0,
        monitored: watch(t0, initial)?.into_iter().collect(),
    };
    if t0 == t1 {
        return Ok(traj);
    }
    let f = |x: f64| F::from(x).unwrap();
    let dir = (t1 - t0).signum();
    let span = (t1 - t0).abs();
    let mut st = Stepper::new(flow, cfg.pole_guard);
    let mut t = t0;
    let mut y = initial.to_vec();
    flow.eval_into(t, &y, cfg.pole_guard, &mut st.k[0])?;
    let mut h = (span * f(1e-3)).min(cfg.max_step).max(cfg.min_step);
    loop {
        let remaining = (t1 - t).abs();
        let last = h >= remaining;
        let hs = if last { remaining } else { h };
        let (y_new, err) = st.step(t, &y, dir * hs)?;
        let en = error_norm(&y, &y_new, &err, cfg);
        let factor = if en == F::zero() { f(5.0) } else { (f(0.9) * en.powf(f(-0.2))).min(f(5.0)).max(f(0.2)) };
        if en <= F::one() && y_new.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            t = if last { t1 } else { t + dir * hs };
            y = y_new;
            st.k.swap(0, 6);
            traj.accepted += 1;
            traj.times.push(t);
            if let Some(v) = watch(t, &y)? {
                traj.monitored.push(v);
            }
            traj.states.push(y.clone());
            if last {
                return Ok(traj);
            }
            h = (hs * factor).min(cfg.max_step);
        } else {
            traj.rejected += 1;
            h = hs * factor.min(f(1.0));
            if h < cfg.min_step {
                return Err(NumericError::StepUnderflow { t: t.to_f64().unwrap_or(f64::NAN), h: h.to_f64().unwrap_or(f64::NAN) });
            }
        }
    }
}

/// Classic fixed-step integration with the fifth-order weights, for
/// convergence studies.
pub fn integrate_fixed<F: Real>(flow: &Flow<F>, initial: &[Complex<F>], t0: F, t1: F, steps: usize, pole_guard: F) -> Result<Vec<Complex<F>>, NumericError> {
    let h = (t1 - t0) / F::from(steps).unwrap();
    let mut st = Stepper::new(flow, pole_guard);
    let mut y = initial.to_vec();
    let mut t = t0;
    flow.eval_into(t, &y, pole_guard, &mut st.k[0])?;
    for n in 0..steps {
        let (y_new, _) = st.step(t, &y, h)?;
        y = y_new;
        st.k.swap(0, 6);
        t = t0 + h * F::from(n + 1).unwrap();
    }
    Ok(y)
}
