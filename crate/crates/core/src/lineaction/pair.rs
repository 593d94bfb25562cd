use crate::exactfield::FieldElement;

use super::LineError;

/// Eigenvalues of a diagonalised differential at the marked point: `a1` on
/// the tangent direction of `C`, `a2` on that of `C11`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferentialPair<F> {
    a1: F,
    a2: F,
}

impl<F: FieldElement> DifferentialPair<F> {
    pub fn new(a1: F, a2: F) -> Result<Self, LineError> {
        if a1.is_zero() || a2.is_zero() {
            return Err(LineError::ZeroEigenvalue);
        }
        if !a1.same_field(&a2) {
            return Err(crate::exactfield::FieldError::FieldMismatch.into());
        }
        Ok(DifferentialPair { a1, a2 })
    }

    pub fn alpha1(&self) -> &F {
        &self.a1
    }

    pub fn alpha2(&self) -> &F {
        &self.a2
    }

    /// Differential of a composite: eigenvalues multiply.
    pub fn compose(&self, other: &Self) -> Self {
        DifferentialPair {
            a1: self.a1.try_mul(&other.a1).expect("same field"),
            a2: self.a2.try_mul(&other.a2).expect("same field"),
        }
    }

    /// Scalar by which the automorphism acts on the 2-form: `a1 * a2`.
    pub fn canonical_rep(&self) -> F {
        self.a1.try_mul(&self.a2).expect("same field")
    }

    /// Acts trivially on the tangent line of `C`.
    pub fn in_g_xcp(&self) -> bool {
        self.a1.is_one()
    }

    /// Acts trivially on the whole tangent plane.
    pub fn in_g_xp(&self) -> bool {
        self.a1.is_one() && self.a2.is_one()
    }

    /// The differential is a scalar, so the map lifts to the blow-up.
    pub fn lifts_to_y(&self) -> bool {
        self.a1 == self.a2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairQuery {
    CanonicalRep,
    InGXcp,
    InGXp,
    LiftsToY,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairAnswer<F> {
    Scalar(F),
    Bool(bool),
}

pub fn pair_calculus<F: FieldElement>(pair: &DifferentialPair<F>, query: PairQuery) -> PairAnswer<F> {
    match query {
        PairQuery::CanonicalRep => PairAnswer::Scalar(pair.canonical_rep()),
        PairQuery::InGXcp => PairAnswer::Bool(pair.in_g_xcp()),
        PairQuery::InGXp => PairAnswer::Bool(pair.in_g_xp()),
        PairQuery::LiftsToY => PairAnswer::Bool(pair.lifts_to_y()),
    }
}
