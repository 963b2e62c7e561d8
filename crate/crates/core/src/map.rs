//! Birational maps on phase × time × parameter space.
//!
//! A map is stored as the images of the coordinate functions. Composition
//! follows the automorphism convention: `(g·h)(f) = g(h(f))`, so the images
//! of `g·h` are `h`'s images with `g` substituted in. Words are read the
//! same way, `s1 s2` meaning `s1·s2`.

use std::fmt;

use cp3_algebra::{Constraint, Poly, RatFn, Subst, Var};

use crate::error::CoreError;

#[derive(Clone, PartialEq)]
pub struct BirationalMap {
    pub name: String,
    phase: Vec<Var>,
    images: Vec<RatFn>,
    t_image: RatFn,
    params: Vec<Var>,
    param_images: Vec<RatFn>,
}

impl BirationalMap {
    pub fn new(
        name: impl Into<String>,
        phase: Vec<Var>,
        images: Vec<RatFn>,
        t_image: RatFn,
        params: Vec<Var>,
        param_images: Vec<RatFn>,
    ) -> BirationalMap {
        assert_eq!(phase.len(), images.len(), "one image per phase variable");
        assert_eq!(params.len(), param_images.len(), "one image per parameter");
        BirationalMap { name: name.into(), phase, images, t_image, params, param_images }
    }

    pub fn identity(phase: &[Var], params: &[Var]) -> BirationalMap {
        BirationalMap::new(
            "id",
            phase.to_vec(),
            phase.iter().map(|&v| RatFn::var(v)).collect(),
            RatFn::var(Var::T),
            params.to_vec(),
            params.iter().map(|&v| RatFn::var(v)).collect(),
        )
    }

    pub fn phase(&self) -> &[Var] {
        &self.phase
    }

    pub fn images(&self) -> &[RatFn] {
        &self.images
    }

    pub fn t_image(&self) -> &RatFn {
        &self.t_image
    }

    pub fn params(&self) -> &[Var] {
        &self.params
    }

    pub fn param_images(&self) -> &[RatFn] {
        &self.param_images
    }

    pub fn image_of(&self, v: Var) -> Option<&RatFn> {
        if v == Var::T {
            return Some(&self.t_image);
        }
        let pos = |vs: &[Var]| vs.iter().position(|&u| u == v);
        pos(&self.phase)
            .map(|i| &self.images[i])
            .or_else(|| pos(&self.params).map(|i| &self.param_images[i]))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> BirationalMap {
        self.name = name.into();
        self
    }

    fn bindings(&self) -> Subst {
        let mut b = Subst::new();
        let all = self.phase.iter().zip(&self.images).chain(self.params.iter().zip(&self.param_images));
        for (&v, img) in all {
            if !is_var(img, v) {
                b.insert(v, img.clone());
            }
        }
        if !is_var(&self.t_image, Var::T) {
            b.insert(Var::T, self.t_image.clone());
        }
        b
    }

    /// `g(f)`: every coordinate in `f` replaced by its image, simultaneously.
    pub fn apply(&self, f: &RatFn) -> Result<RatFn, CoreError> {
        Ok(f.substitute(&self.bindings())?)
    }

    /// `self·other`, each image reduced on the constraint surface if one is
    /// given.
    pub fn compose(&self, other: &BirationalMap, ideal: Option<&Constraint>) -> Result<BirationalMap, CoreError> {
        assert_eq!(self.phase, other.phase, "maps over different phase spaces");
        assert_eq!(self.params, other.params, "maps over different parameters");
        let b = self.bindings();
        let reduce = |f: RatFn| -> Result<RatFn, CoreError> {
            match ideal {
                Some(c) => Ok(c.try_reduce(&f)?),
                None => Ok(f),
            }
        };
        let sub = |f: &RatFn| -> Result<RatFn, CoreError> { reduce(f.substitute(&b)?) };
        Ok(BirationalMap {
            name: join_names(&self.name, &other.name),
            phase: self.phase.clone(),
            images: other.images.iter().map(&sub).collect::<Result<_, _>>()?,
            t_image: sub(&other.t_image)?,
            params: self.params.clone(),
            param_images: other.param_images.iter().map(&sub).collect::<Result<_, _>>()?,
        })
    }

    pub fn pow(&self, n: u32, ideal: Option<&Constraint>) -> Result<BirationalMap, CoreError> {
        let mut out = BirationalMap::identity(&self.phase, &self.params);
        for _ in 0..n {
            out = out.compose(self, ideal)?;
        }
        Ok(out.with_name(format!("({})^{n}", self.name)))
    }

    /// Componentwise equality, modulo the constraint when given.
    pub fn same_as(&self, other: &BirationalMap, ideal: Option<&Constraint>) -> bool {
        let eq = |a: &RatFn, b: &RatFn| match ideal {
            Some(c) => c.equals_mod(a, b),
            None => a == b,
        };
        self.phase == other.phase
            && self.params == other.params
            && eq(&self.t_image, &other.t_image)
            && self.images.iter().zip(&other.images).all(|(a, b)| eq(a, b))
            && self.param_images.iter().zip(&other.param_images).all(|(a, b)| eq(a, b))
    }

    pub fn is_identity(&self, ideal: Option<&Constraint>) -> bool {
        self.same_as(&BirationalMap::identity(&self.phase, &self.params), ideal)
    }

    /// Parameter images minus the parameters, reduced on the constraint.
    pub fn param_shift(&self, ideal: Option<&Constraint>) -> Vec<RatFn> {
        self.params
            .iter()
            .zip(&self.param_images)
            .map(|(&v, img)| {
                let d = img - &RatFn::var(v);
                match ideal {
                    Some(c) => c.reduce(&d),
                    None => d,
                }
            })
            .collect()
    }

    /// Pushes a vector field forward: `(J·F + ∂ₜg) / (dt'/dt)` per component,
    /// `J` the Jacobian of the phase images in the phase variables. The result
    /// is still written in the source coordinates.
    pub fn push_forward(&self, field: &[RatFn]) -> Result<Vec<RatFn>, CoreError> {
        let dt = self.t_image.derivative(Var::T);
        self.images
            .iter()
            .map(|g| {
                let mut acc = g.derivative(Var::T);
                for (v, f) in self.phase.iter().zip(field) {
                    let dg = g.derivative(*v);
                    if !dg.is_zero() {
                        acc = &acc + &(&dg * f);
                    }
                }
                Ok(acc.div_ref(&dt)?)
            })
            .collect()
    }
}

fn is_var(f: &RatFn, v: Var) -> bool {
    f.den().is_one() && *f.num() == Poly::var(v)
}

fn join_names(a: &str, b: &str) -> String {
    match (a, b) {
        ("id", b) => b.to_string(),
        (a, "id") => a.to_string(),
        (a, b) => format!("{a} {b}"),
    }
}

/// Poisson bracket in the canonical pairs.
pub fn poisson(f: &RatFn, g: &RatFn, pairs: &[(Var, Var)]) -> RatFn {
    pairs.iter().fold(RatFn::zero(), |acc, &(u, v)| {
        let term = &(&f.derivative(u) * &g.derivative(v)) - &(&f.derivative(v) * &g.derivative(u));
        &acc + &term
    })
}

/// Brackets of the images that differ from the canonical ones; empty iff the
/// phase part of the map is symplectic at fixed time and parameters.
pub fn symplectic_defects(images: &[RatFn], pairs: &[(Var, Var)]) -> Vec<String> {
    let n = images.len();
    assert_eq!(n, 2 * pairs.len());
    let mut bad = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let want = if i % 2 == 0 && j == i + 1 { RatFn::one() } else { RatFn::zero() };
            let got = poisson(&images[i], &images[j], pairs);
            if got != want {
                bad.push(format!("{{{i},{j}}} = {got}"));
            }
        }
    }
    bad
}

impl fmt::Debug for BirationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: (", self.name)?;
        for (i, img) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, "; t -> {}; ", self.t_image)?;
        for (i, img) in self.param_images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{img}")?;
        }
        write!(f, ")")
    }
}
