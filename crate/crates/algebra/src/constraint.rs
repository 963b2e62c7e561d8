//! A principal linear parameter ideal, handled by eliminating one variable.

use std::fmt;

use crate::error::DomainError;
use crate::field::Field;
use crate::poly::MPoly;
use crate::ratfn::{Bindings, RationalFunction};
use crate::var::{Var, VarSet};

#[derive(Clone, PartialEq, Eq)]
pub struct ConstraintIdeal<C: Field> {
    relation: MPoly<C>,
    eliminated: Var,
    solved: RationalFunction<C>,
}

impl<C: Field> ConstraintIdeal<C> {
    /// `relation = 0` must be of degree 1 and involve `eliminated`.
    pub fn new(relation: MPoly<C>, eliminated: Var) -> Result<Self, DomainError> {
        let bad = || DomainError::BadConstraint { var: eliminated.name().to_string() };
        if relation.total_degree() != 1 {
            return Err(bad());
        }
        let coeffs = relation.coefficients_in(eliminated);
        if coeffs.len() != 2 {
            return Err(bad());
        }
        let k = coeffs[1].as_constant().ok_or_else(bad)?;
        // eliminated = -(rest) / k
        let solved = RationalFunction::from_poly(coeffs[0].scale(&k.inv().negate()));
        Ok(ConstraintIdeal { relation, eliminated, solved })
    }

    /// Convenience constructor for `Σ c_i v_i = rhs`.
    pub fn linear(terms: &[(i64, Var)], rhs: i64, eliminated: Var) -> Result<Self, DomainError> {
        let mut rel = MPoly::from_i64(-rhs);
        for &(c, v) in terms {
            rel = &rel + &MPoly::var(v).scale(&C::from_i64(c));
        }
        Self::new(rel, eliminated)
    }

    pub fn relation(&self) -> &MPoly<C> {
        &self.relation
    }

    pub fn eliminated(&self) -> Var {
        self.eliminated
    }

    /// The affine expression the eliminated parameter is replaced by.
    pub fn solved(&self) -> &RationalFunction<C> {
        &self.solved
    }

    pub fn params(&self) -> VarSet {
        self.relation.vars()
    }

    pub fn reduce(&self, f: &RationalFunction<C>) -> RationalFunction<C> {
        if !f.contains_var(self.eliminated) {
            return f.clone();
        }
        let mut b = Bindings::new();
        b.insert(self.eliminated, self.solved.clone());
        // an affine substitution of a parameter can create a zero denominator
        // only if the denominator was a multiple of the relation
        f.substitute(&b).expect("denominator vanishes on the constraint surface")
    }

    pub fn try_reduce(&self, f: &RationalFunction<C>) -> Result<RationalFunction<C>, DomainError> {
        let mut b = Bindings::new();
        b.insert(self.eliminated, self.solved.clone());
        f.substitute(&b)
    }

    pub fn equals_mod(&self, a: &RationalFunction<C>, b: &RationalFunction<C>) -> bool {
        a == b || self.reduce(&a.sub_ref(b)).is_zero()
    }

    /// True iff `other` generates the same ideal.
    pub fn same_ideal(&self, other: &ConstraintIdeal<C>) -> bool {
        let r = RationalFunction::from_poly(other.relation.clone());
        self.reduce(&r).is_zero()
    }
}

/// `a ≡ b` on the constraint surface of `ideal`.
pub fn equals_mod_constraint<C: Field>(
    a: &RationalFunction<C>,
    b: &RationalFunction<C>,
    ideal: &ConstraintIdeal<C>,
) -> bool {
    ideal.equals_mod(a, b)
}

impl<C: Field> fmt::Display for ConstraintIdeal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0 (eliminating {})", self.relation, self.eliminated)
    }
}

impl<C: Field> fmt::Debug for ConstraintIdeal<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
