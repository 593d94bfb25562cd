//! Affine transformations `x -> a x + b` of the line over `F_p(t)`, the
//! words they are built from, and their fixed points.

mod mwaction;
mod pair;
mod word;

use std::fmt;

use crate::exactfield::{parse_ratfunc, FieldElement, FieldError, RatFunc};

pub use mwaction::{mw_action, FibrationRecord};
pub use pair::{pair_calculus, DifferentialPair, PairAnswer, PairQuery};
pub use word::{evaluate_word, standard_generators, GroupWord};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LineError {
    #[error("affine map with zero multiplier")]
    ZeroMultiplier,
    #[error("generator {0:?} is not bound")]
    UnknownGenerator(String),
    #[error("the identity map fixes every point")]
    IdentityMap,
    #[error("fibration certificates are missing or failed")]
    UnverifiedFibration,
    #[error("no recorded action for {0}")]
    UnknownAction(String),
    #[error("differential eigenvalue must be nonzero")]
    ZeroEigenvalue,
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// `x -> a x + b` with `a != 0`. Every such map fixes `inf`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineMap {
    a: RatFunc,
    b: RatFunc,
}

impl AffineMap {
    pub fn new(a: RatFunc, b: RatFunc) -> Result<Self, LineError> {
        if a.is_zero() {
            return Err(LineError::ZeroMultiplier);
        }
        if !a.same_field(&b) {
            return Err(FieldError::FieldMismatch.into());
        }
        Ok(AffineMap { a, b })
    }

    pub fn identity(p: u64) -> Self {
        AffineMap {
            a: RatFunc::one(p),
            b: RatFunc::zero(p),
        }
    }

    /// `x -> x + c`.
    pub fn translation(c: RatFunc) -> Self {
        AffineMap { a: c.one_like(), b: c }
    }

    /// `x -> a x`.
    pub fn scaling(a: RatFunc) -> Result<Self, LineError> {
        let zero = a.zero_like();
        AffineMap::new(a, zero)
    }

    pub fn a(&self) -> &RatFunc {
        &self.a
    }

    pub fn b(&self) -> &RatFunc {
        &self.b
    }

    pub fn modulus(&self) -> u64 {
        self.a.modulus()
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Lies in the translation subgroup.
    pub fn is_translation(&self) -> bool {
        self.a.is_one()
    }

    pub fn apply(&self, x: &RatFunc) -> RatFunc {
        &(&self.a * x) + &self.b
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &AffineMap) -> AffineMap {
        AffineMap {
            a: &self.a * &other.a,
            b: &(&self.a * &other.b) + &self.b,
        }
    }

    pub fn invert(&self) -> AffineMap {
        let ainv = self.a.inv().expect("multiplier is nonzero");
        let b = -(&ainv * &self.b);
        AffineMap { a: ainv, b }
    }

    pub fn power(&self, n: i64) -> AffineMap {
        let mut base = if n < 0 { self.invert() } else { self.clone() };
        let mut acc = AffineMap::identity(self.modulus());
        let mut e = n.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Parses `a=<ratfunc>; b=<ratfunc>`.
    pub fn parse(s: &str, p: u64) -> Result<Self, LineError> {
        let bad = || LineError::Parse(s.to_string());
        let (mut a, mut b) = (None, None);
        for part in s.split(';') {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            let slot = match key.trim() {
                "a" => &mut a,
                "b" => &mut b,
                _ => return Err(bad()),
            };
            if slot.replace(parse_ratfunc(value, p)?).is_some() {
                return Err(bad());
            }
        }
        AffineMap::new(a.ok_or_else(bad)?, b.ok_or_else(bad)?)
    }
}

impl fmt::Display for AffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}; b={}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineOp {
    Compose,
    Invert,
    Power(i64),
}

/// `Compose` gives `f ∘ g`; `Invert` and `Power` act on `f` alone.
pub fn affine_group_ops(f: &AffineMap, g: &AffineMap, op: &AffineOp) -> AffineMap {
    match op {
        AffineOp::Compose => f.compose(g),
        AffineOp::Invert => f.invert(),
        AffineOp::Power(n) => f.power(*n),
    }
}

/// `x -> t x`.
pub fn f1(p: u64) -> AffineMap {
    AffineMap::scaling(RatFunc::t(p)).expect("t is nonzero")
}

/// `x -> x + 1`.
pub fn f2(p: u64) -> AffineMap {
    AffineMap::translation(RatFunc::one(p))
}

/// `f1^n ∘ f2 ∘ f1^-n`, which is `x -> x + t^n`.
pub fn conjugate_generator(n: i64, p: u64) -> AffineMap {
    let w = GroupWord::new(vec![("f1".into(), n), ("f2".into(), 1), ("f1".into(), -n)]);
    evaluate_word(&w, &standard_generators(p)).expect("standard generators are bound")
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LinePoint {
    Infinity,
    Finite(RatFunc),
}

impl fmt::Display for LinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinePoint::Infinity => f.write_str("inf"),
            LinePoint::Finite(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FixedPoint {
    pub point: LinePoint,
    /// Derivative at the point; at `inf` computed in the chart `u = 1/x`.
    pub multiplier: RatFunc,
    pub parabolic: bool,
}

/// Fixed points of a non-identity map, finite point first.
pub fn fixed_points(f: &AffineMap) -> Result<Vec<FixedPoint>, LineError> {
    if f.is_identity() {
        return Err(LineError::IdentityMap);
    }
    let ainv = f.a.inv()?;
    if f.a.is_one() {
        return Ok(vec![FixedPoint {
            point: LinePoint::Infinity,
            multiplier: ainv,
            parabolic: true,
        }]);
    }
    let one = f.a.one_like();
    let x0 = f.b.try_div(&(&one - &f.a))?;
    Ok(vec![
        FixedPoint {
            point: LinePoint::Finite(x0),
            multiplier: f.a.clone(),
            parabolic: false,
        },
        FixedPoint {
            point: LinePoint::Infinity,
            multiplier: ainv,
            parabolic: false,
        },
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Fp;

    fn t(p: u64) -> RatFunc {
        RatFunc::t(p)
    }

    #[test]
    fn group_operations() {
        let p = 5;
        let (f1, f2) = (f1(p), f2(p));
        let c = affine_group_ops(&f1, &f2, &AffineOp::Compose);
        assert_eq!(c, AffineMap::new(t(p), t(p)).unwrap());
        let inv = affine_group_ops(&f1, &f2, &AffineOp::Invert);
        assert_eq!(inv, AffineMap::scaling(t(p).inv().unwrap()).unwrap());
        assert!(f2.power(p as i64).is_identity());
        assert!(!f2.power(p as i64 - 1).is_identity());
        assert_eq!(f1.power(-3), f1.invert().power(3));
        assert_eq!(AffineMap::new(RatFunc::zero(p), t(p)), Err(LineError::ZeroMultiplier));
    }

    #[test]
    fn conjugates() {
        for p in [3, 5, 7] {
            for n in [-3, 0, 2] {
                let want = AffineMap::translation(RatFunc::monomial(Fp::one(p), n));
                assert_eq!(conjugate_generator(n, p), want);
            }
        }
    }

    #[test]
    fn fixed_point_examples() {
        let p = 7;
        let fp = fixed_points(&f1(p)).unwrap();
        assert_eq!(fp[0].point, LinePoint::Finite(RatFunc::zero(p)));
        assert_eq!(fp[0].multiplier, t(p));
        assert_eq!(fp[1].point, LinePoint::Infinity);
        assert_eq!(fp[1].multiplier, t(p).inv().unwrap());

        let fp = fixed_points(&f2(p)).unwrap();
        assert_eq!(fp.len(), 1);
        assert!(fp[0].parabolic && fp[0].multiplier.is_one());

        let q = 5;
        let inv = AffineMap::new(RatFunc::from_int(-1, q), RatFunc::from_int(3, q)).unwrap();
        let fp = fixed_points(&inv).unwrap();
        assert_eq!(fp.len(), 2);
        assert!(fp.iter().all(|x| x.multiplier == RatFunc::from_int(-1, q)));
        assert_eq!(fp[0].point, LinePoint::Finite(RatFunc::from_int(4, q)));

        assert_eq!(fixed_points(&AffineMap::identity(p)), Err(LineError::IdentityMap));
    }

    #[test]
    fn parse_round_trip() {
        let p = 3;
        let m = AffineMap::parse("a=t; b=(1)/(1 + t)", p).unwrap();
        assert_eq!(AffineMap::parse(&m.to_string(), p).unwrap(), m);
        assert_eq!(AffineMap::parse(" b = 1 ; a = 1 ", p).unwrap(), f2(p));
        for bad in ["a=t", "a=t; b=1; a=2", "c=1; b=1", "a=0; b=1"] {
            assert!(AffineMap::parse(bad, p).is_err(), "{bad}");
        }
    }

    #[test]
    fn apply_evaluates() {
        let p = 3;
        assert_eq!(f1(p).compose(&f2(p)).apply(&RatFunc::one(p)), &t(p) + &t(p));
    }
}
