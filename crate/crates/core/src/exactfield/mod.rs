//! Exact arithmetic over odd prime fields, their finite extensions, and the
//! rational function field `F_p(t)`.
//!
//! Every element carries its own modulus (and, for extension elements, a
//! shared handle to the field descriptor), so mixing fields is detected at
//! the call site instead of producing silently wrong residues.

mod ext;
mod laurent;
mod parse;
mod poly;
mod prime;
mod ratfunc;

use std::fmt;

pub use ext::{ext_field_build, ExtElem, ExtField, EXT_FIELD_GUARD};
pub use laurent::{laurent_coeffs, LaurentVector};
pub use parse::{parse_laurent, parse_laurent_list, parse_ratfunc};
pub use poly::Poly;
pub use prime::{check_odd_prime, is_prime, Fp};
pub use ratfunc::{ratfunc_normalize, RatFunc};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("odd prime required, got {0}")]
    InvalidPrime(u64),
    #[error("field of size {p}^{n} exceeds the enumeration guard of {EXT_FIELD_GUARD}")]
    TooLarge { p: u64, n: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator is not a power of t")]
    NotLaurent,
    #[error("field is infinite")]
    NotFinite,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl FieldError {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        FieldError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// Common surface of the three element types, used by code that is generic
/// over the base field (the elliptic-curve group law, differential pairs).
///
/// Elements know their field, so constants are produced "like" an existing
/// element rather than from a separate descriptor.
pub trait FieldElement: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_int_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn characteristic(&self) -> u64;
    fn same_field(&self, other: &Self) -> bool;

    fn try_add(&self, other: &Self) -> Result<Self, FieldError>;
    fn try_sub(&self, other: &Self) -> Result<Self, FieldError>;
    fn try_mul(&self, other: &Self) -> Result<Self, FieldError>;
    fn negate(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;

    /// Number of elements, or `None` for an infinite field.
    fn field_size(&self) -> Option<u64>;
    /// All elements of the field in a fixed deterministic order.
    fn field_elements(&self) -> Result<Vec<Self>, FieldError>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_mul(&other.inv()?)
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base).expect("same field");
            }
            base = base.try_mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    /// Euler's criterion; only meaningful over a finite field.
    fn is_square(&self) -> Result<bool, FieldError> {
        let q = self.field_size().ok_or(FieldError::NotFinite)?;
        if self.is_zero() {
            return Ok(true);
        }
        Ok(self.pow((q - 1) / 2).is_one())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

/// Checked binary/unary field operation. For the unary `Inv` and `Neg` the
/// second operand only takes part in the same-field check.
pub fn field_ops<F: FieldElement>(x: &F, y: &F, op: FieldOp) -> Result<F, FieldError> {
    if !x.same_field(y) {
        return Err(FieldError::FieldMismatch);
    }
    match op {
        FieldOp::Add => x.try_add(y),
        FieldOp::Sub => x.try_sub(y),
        FieldOp::Mul => x.try_mul(y),
        FieldOp::Inv => x.inv(),
        FieldOp::Neg => Ok(x.negate()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_examples() {
        let two = Fp::new(2, 5);
        let four = Fp::new(4, 5);
        assert_eq!(field_ops(&two, &four, FieldOp::Add).unwrap(), Fp::new(1, 5));

        let three = Fp::new(3, 7);
        assert_eq!(field_ops(&three, &three, FieldOp::Inv).unwrap(), Fp::new(5, 7));

        let zero = Fp::new(0, 3);
        assert_eq!(field_ops(&zero, &zero, FieldOp::Neg).unwrap(), zero);
    }

    #[test]
    fn field_ops_errors() {
        let zero = Fp::new(0, 7);
        assert_eq!(field_ops(&zero, &zero, FieldOp::Inv), Err(FieldError::ZeroInverse));
        assert_eq!(
            field_ops(&Fp::new(1, 5), &Fp::new(1, 7), FieldOp::Add),
            Err(FieldError::FieldMismatch)
        );
        let f9 = ext_field_build(3, 2).unwrap();
        let f27 = ext_field_build(3, 3).unwrap();
        assert_eq!(
            field_ops(&f9.one(), &f27.one(), FieldOp::Mul),
            Err(FieldError::FieldMismatch)
        );
    }

    #[test]
    fn ratfunc_through_generic_ops() {
        let t = RatFunc::t(5);
        let one = t.one_like();
        let r = field_ops(&t, &one, FieldOp::Sub).unwrap();
        let inv = field_ops(&r, &r, FieldOp::Inv).unwrap();
        assert!(inv.try_mul(&r).unwrap().is_one());
        assert_eq!(t.field_size(), None);
        assert_eq!(t.field_elements(), Err(FieldError::NotFinite));
    }
}
