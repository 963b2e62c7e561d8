//! Exact rational functions lowered to a flat evaluation form over complex
//! floats. Parameters are folded into the coefficients at compile time;
//! the remaining variables become numbered slots.

use cp3_algebra::{GaussianRational, Poly, RatFn, Var};
use num_complex::Complex;

use crate::error::NumericError;
use crate::Real;

pub fn complex_of<F: Real>(c: &GaussianRational) -> Complex<F> {
    let (re, im) = c.to_f64_pair();
    Complex::new(F::from(re).unwrap(), F::from(im).unwrap())
}

/// Numeric values for symbols that are not slots.
pub type Bindings<F> = [(Var, Complex<F>)];

#[derive(Debug, Clone)]
struct Term<F> {
    coeff: Complex<F>,
    powers: Vec<(u16, u16)>,
}

#[derive(Debug, Clone)]
pub struct CompiledPoly<F> {
    terms: Vec<Term<F>>,
}

fn ipow<F: Real>(z: Complex<F>, e: u16) -> Complex<F> {
    let mut acc = Complex::new(F::one(), F::zero());
    for _ in 0..e {
        acc = acc * z;
    }
    acc
}

impl<F: Real> CompiledPoly<F> {
    fn compile(p: &Poly, slots: &[Var], bound: &Bindings<F>) -> Result<Self, NumericError> {
        let mut terms = Vec::with_capacity(p.len());
        for (mono, c) in p.terms() {
            let mut coeff = complex_of::<F>(c);
            let mut powers = Vec::new();
            for v in cp3_algebra::Var::all() {
                let e = mono.exp(v);
                if e == 0 {
                    continue;
                }
                if let Some(i) = slots.iter().position(|&s| s == v) {
                    powers.push((i as u16, e));
                } else if let Some((_, val)) = bound.iter().find(|(b, _)| *b == v) {
                    coeff = coeff * ipow(*val, e);
                } else {
                    return Err(NumericError::Unbound(v.name().to_string()));
                }
            }
            // folding parameters can make distinct monomials collide
            match terms.iter_mut().find(|t: &&mut Term<F>| t.powers == powers) {
                Some(t) => t.coeff = t.coeff + coeff,
                None => terms.push(Term { coeff, powers }),
            }
        }
        Ok(CompiledPoly { terms })
    }

    fn max_exps(&self, out: &mut [u16]) {
        for t in &self.terms {
            for &(s, e) in &t.powers {
                out[s as usize] = out[s as usize].max(e);
            }
        }
    }

    fn eval(&self, table: &PowerTable<F>) -> Complex<F> {
        let mut acc = Complex::new(F::zero(), F::zero());
        for t in &self.terms {
            let mut m = t.coeff;
            for &(s, e) in &t.powers {
                m = m * table.get(s, e);
            }
            acc = acc + m;
        }
        acc
    }
}

/// Powers of every slot up to the largest exponent any expression needs.
pub struct PowerTable<F> {
    offsets: Vec<usize>,
    values: Vec<Complex<F>>,
}

impl<F: Real> PowerTable<F> {
    fn new(max_exps: &[u16]) -> Self {
        let mut offsets = Vec::with_capacity(max_exps.len());
        let mut n = 0;
        for &e in max_exps {
            offsets.push(n);
            n += e as usize + 1;
        }
        PowerTable { offsets, values: vec![Complex::new(F::one(), F::zero()); n] }
    }

    fn fill(&mut self, point: &[Complex<F>]) {
        for (s, &z) in point.iter().enumerate() {
            let start = self.offsets[s];
            let end = self.offsets.get(s + 1).copied().unwrap_or(self.values.len());
            let mut acc = Complex::new(F::one(), F::zero());
            for k in start..end {
                self.values[k] = acc;
                acc = acc * z;
            }
        }
    }

    fn get(&self, slot: u16, e: u16) -> Complex<F> {
        self.values[self.offsets[slot as usize] + e as usize]
    }
}

#[derive(Debug, Clone)]
pub struct CompiledRatFn<F> {
    num: CompiledPoly<F>,
    /// None when the denominator is 1.
    den: Option<CompiledPoly<F>>,
    label: String,
}

impl<F: Real> CompiledRatFn<F> {
    pub fn compile(f: &RatFn, slots: &[Var], bound: &Bindings<F>, label: impl Into<String>) -> Result<Self, NumericError> {
        let den = if f.den().is_one() { None } else { Some(CompiledPoly::compile(f.den(), slots, bound)?) };
        Ok(CompiledRatFn { num: CompiledPoly::compile(f.num(), slots, bound)?, den, label: label.into() })
    }
}

/// A family of rational functions over shared slots, evaluated together
/// from one power table.
#[derive(Debug, Clone)]
pub struct Compiled<F> {
    slots: Vec<Var>,
    exprs: Vec<CompiledRatFn<F>>,
    max_exps: Vec<u16>,
}

impl<F: Real> Compiled<F> {
    pub fn new(exprs: &[RatFn], labels: &[String], slots: &[Var], bound: &Bindings<F>) -> Result<Self, NumericError> {
        let exprs: Vec<CompiledRatFn<F>> = exprs
            .iter()
            .zip(labels)
            .map(|(f, l)| CompiledRatFn::compile(f, slots, bound, l.clone()))
            .collect::<Result<_, _>>()?;
        let mut max_exps = vec![0u16; slots.len()];
        for e in &exprs {
            e.num.max_exps(&mut max_exps);
            if let Some(d) = &e.den {
                d.max_exps(&mut max_exps);
            }
        }
        Ok(Compiled { slots: slots.to_vec(), exprs, max_exps })
    }

    pub fn slots(&self) -> &[Var] {
        &self.slots
    }

    pub fn len(&self) -> usize {
        self.exprs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exprs.is_empty()
    }

    /// Evaluates every expression at `point` (one value per slot), failing
    /// if a denominator is smaller than `pole_guard` in modulus.
    pub fn eval_into(&self, point: &[Complex<F>], pole_guard: F, out: &mut [Complex<F>]) -> Result<(), NumericError> {
        assert_eq!(point.len(), self.slots.len());
        let mut table = PowerTable::new(&self.max_exps);
        table.fill(point);
        for (e, o) in self.exprs.iter().zip(out.iter_mut()) {
            let n = e.num.eval(&table);
            *o = match &e.den {
                None => n,
                Some(d) => {
                    let d = d.eval(&table);
                    if d.norm() < pole_guard {
                        return Err(NumericError::Pole {
                            t: point.last().map_or(0.0, |z| z.re.to_f64().unwrap_or(f64::NAN)),
                            what: format!("denominator of {}", e.label),
                            magnitude: d.norm().to_f64().unwrap_or(f64::NAN),
                        });
                    }
                    n / d
                }
            };
        }
        Ok(())
    }

    pub fn eval(&self, point: &[Complex<F>], pole_guard: F) -> Result<Vec<Complex<F>>, NumericError> {
        let mut out = vec![Complex::new(F::zero(), F::zero()); self.exprs.len()];
        self.eval_into(point, pole_guard, &mut out)?;
        Ok(out)
    }
}
