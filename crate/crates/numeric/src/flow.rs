use cp3_algebra::{RatFn, Var};
use cp3_core::system::subsystem;
use cp3_core::{build_system, Subsystem, SystemId};
use num_complex::Complex;

use crate::compile::{Bindings, Compiled};
use crate::error::NumericError;
use crate::Real;

/// Relation violations up to this size count as satisfied, widened to a
/// few hundred ulps for scalars coarser than `f64`.
pub const CONSTRAINT_TOL: f64 = 1e-9;

fn constraint_tol<F: Real>() -> f64 {
    CONSTRAINT_TOL.max(256.0 * F::epsilon().to_f64().unwrap_or(0.0))
}

/// A vector field at fixed parameter values, ready to evaluate.
#[derive(Debug, Clone)]
pub struct Flow<F> {
    pub labels: Vec<&'static str>,
    field: Compiled<F>,
}

fn bind<F: Real>(vars: &[Var], values: &[Complex<F>]) -> Result<Vec<(Var, Complex<F>)>, NumericError> {
    if vars.len() != values.len() {
        return Err(NumericError::Arity { expected: vars.len(), got: values.len() });
    }
    Ok(vars.iter().copied().zip(values.iter().copied()).collect())
}

pub(crate) fn eval_constant<F: Real>(f: &RatFn, bound: &Bindings<F>) -> Result<Complex<F>, NumericError> {
    let c = Compiled::new(std::slice::from_ref(f), &[f.to_string()], &[], bound)?;
    Ok(c.eval(&[], F::zero())?[0])
}

impl<F: Real> Flow<F> {
    pub fn new(components: &[RatFn], phase: &[Var], bound: &Bindings<F>) -> Result<Self, NumericError> {
        let mut slots = phase.to_vec();
        slots.push(Var::T);
        let labels: Vec<&'static str> = phase.iter().map(|v| v.name()).collect();
        let names: Vec<String> = labels.iter().map(|l| format!("d{l}/dt")).collect();
        Ok(Flow { labels, field: Compiled::new(components, &names, &slots, bound)? })
    }

    /// One of the six-dimensional systems; `params` must satisfy its
    /// constraint.
    pub fn system(id: SystemId, params: &[Complex<F>]) -> Result<Self, NumericError> {
        let sys = build_system(id);
        let bound = bind(&sys.params, params)?;
        let rel = RatFn::from_poly(sys.constraint.relation().clone());
        let violation = eval_constant(&rel, &bound)?.norm().to_f64().unwrap_or(f64::INFINITY);
        if violation.is_nan() || violation > constraint_tol::<F>() {
            return Err(NumericError::Constraint(violation));
        }
        Flow::new(&sys.vector_field().components, &sys.phase_vars(), &bound)
    }

    pub fn subsystem(id: Subsystem, params: &[Complex<F>]) -> Result<Self, NumericError> {
        let h = subsystem(id);
        let bound = bind(&h.params, params)?;
        Flow::new(&h.vector_field().components, &[h.pair.0, h.pair.1], &bound)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn eval_into(&self, t: F, y: &[Complex<F>], pole_guard: F, out: &mut [Complex<F>]) -> Result<(), NumericError> {
        let mut point = Vec::with_capacity(y.len() + 1);
        point.extend_from_slice(y);
        point.push(Complex::new(t, F::zero()));
        self.field.eval_into(&point, pole_guard, out)
    }
}
