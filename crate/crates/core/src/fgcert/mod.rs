//! Finite-generation certificates: `F_p`-spans of Laurent polynomials,
//! escape witnesses, and Schreier generators of point stabilisers.

mod schreier;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactfield::{check_odd_prime, laurent_coeffs, FieldElement, FieldError, Fp, LaurentVector};
use crate::lineaction::AffineMap;

pub use schreier::{
    nielsen_schreier_expected, parse_generator_perms, schreier_generators, word_permutation,
    CosetTable,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FgError {
    #[error("empty generator set")]
    EmptyInput,
    #[error("permutations of different degrees")]
    DegreeMismatch,
    #[error("base point {0} outside the permuted set")]
    BaseOutOfRange(usize),
    #[error("depth must be at least 1")]
    InvalidDepth,
    #[error("internal consistency failure: {0}")]
    InternalError(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

type Row = BTreeMap<i64, u64>;

/// Reduced row-echelon basis of an `F_p`-span of Laurent polynomials.
/// Each row is monic at its pivot (its highest exponent) and vanishes at
/// every other row's pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanBasis {
    p: u64,
    rows: BTreeMap<i64, Row>,
    generators: Vec<LaurentVector>,
}

fn sparse(v: &LaurentVector) -> Row {
    v.terms().map(|(e, c)| (e, c.value())).collect()
}

impl SpanBasis {
    pub fn new(p: u64) -> Result<Self, FgError> {
        check_odd_prime(p)?;
        Ok(SpanBasis {
            p,
            rows: BTreeMap::new(),
            generators: Vec::new(),
        })
    }

    pub fn from_set(set: &[LaurentVector], p: u64) -> Result<Self, FgError> {
        let mut basis = SpanBasis::new(p)?;
        for v in set {
            basis.insert(v)?;
        }
        Ok(basis)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generators(&self) -> &[LaurentVector] {
        &self.generators
    }

    /// Pivot exponents, ascending.
    pub fn pivots(&self) -> Vec<i64> {
        self.rows.keys().copied().collect()
    }

    pub fn rows(&self) -> Vec<LaurentVector> {
        self.rows.values().map(|r| self.dense(r)).collect()
    }

    /// Exponent window covered by the generators.
    pub fn window(&self) -> Option<(i64, i64)> {
        let nonzero = self.generators.iter().filter(|g| !g.is_zero());
        let lo = nonzero.clone().map(|g| g.window().0).min()?;
        let hi = nonzero.map(|g| g.window().1).max()?;
        Some((lo, hi))
    }

    fn dense(&self, r: &Row) -> LaurentVector {
        match (r.keys().next(), r.keys().last()) {
            (Some(&lo), Some(&hi)) => {
                let mut coeffs = vec![0i64; (hi - lo + 1) as usize];
                for (&e, &c) in r {
                    coeffs[(e - lo) as usize] = c as i64;
                }
                LaurentVector::new(self.p, lo, &coeffs)
            }
            _ => LaurentVector::zero(self.p),
        }
    }

    fn axpy(&self, target: &mut Row, k: u64, row: &Row) {
        let p = self.p;
        for (&e, &c) in row {
            let slot = target.entry(e).or_insert(0);
            *slot = (*slot + p - k * c % p) % p;
            if *slot == 0 {
                target.remove(&e);
            }
        }
    }

    fn reduce(&self, v: &LaurentVector) -> Result<Row, FgError> {
        if v.modulus() != self.p {
            return Err(FieldError::FieldMismatch.into());
        }
        let mut r = sparse(v);
        for (pivot, row) in self.rows.iter().rev() {
            if let Some(&c) = r.get(pivot) {
                self.axpy(&mut r, c, row);
            }
        }
        Ok(r)
    }

    /// Adds a generator; returns whether the dimension grew.
    pub fn insert(&mut self, v: &LaurentVector) -> Result<bool, FgError> {
        let mut r = self.reduce(v)?;
        self.generators.push(v.clone());
        let Some((&pivot, &lead)) = r.iter().next_back() else {
            return Ok(false);
        };
        let scale = Fp::new(lead as i64, self.p).inv().expect("pivot is nonzero").value();
        for c in r.values_mut() {
            *c = *c * scale % self.p;
        }
        let others: Vec<i64> = self.rows.keys().copied().collect();
        for k in others {
            let c = self.rows[&k].get(&pivot).copied();
            if let Some(c) = c {
                let mut row = self.rows.remove(&k).expect("present");
                self.axpy(&mut row, c, &r);
                self.rows.insert(k, row);
            }
        }
        self.rows.insert(pivot, r);
        Ok(true)
    }

    pub fn contains(&self, v: &LaurentVector) -> Result<bool, FgError> {
        Ok(self.reduce(v)?.is_empty())
    }
}

fn check_set(set: &[LaurentVector], p: u64) -> Result<(), FgError> {
    check_odd_prime(p)?;
    if set.iter().any(|v| v.modulus() != p) {
        return Err(FieldError::FieldMismatch.into());
    }
    Ok(())
}

pub fn span_dimension(set: &[LaurentVector], p: u64) -> Result<usize, FgError> {
    check_set(set, p)?;
    Ok(SpanBasis::from_set(set, p)?.dimension())
}

pub fn span_membership(v: &LaurentVector, set: &[LaurentVector], p: u64) -> Result<bool, FgError> {
    check_set(set, p)?;
    SpanBasis::from_set(set, p)?.contains(v)
}

fn t_pow(n: i64, p: u64) -> LaurentVector {
    LaurentVector::monomial(Fp::one(p), n)
}

/// Least `N >= 0` with `t^N` outside the span of `set`; at most one past the
/// top of the window.
pub fn escape_witness(set: &[LaurentVector], p: u64) -> Result<u64, FgError> {
    check_set(set, p)?;
    let basis = SpanBasis::from_set(set, p)?;
    let bound = basis.window().map_or(0, |(_, hi)| hi.max(-1) + 1);
    for n in 0..=bound {
        if !basis.contains(&t_pow(n, p))? {
            return Ok(n as u64);
        }
    }
    Err(FgError::InternalError(format!("no escape up to t^{bound}")))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonFGCert {
    pub p: u64,
    pub depth: u64,
    /// `dim span{t^0, .., t^d}` for `d = 0..=depth`.
    pub dims: Vec<usize>,
}

impl NonFGCert {
    pub fn is_valid(&self) -> bool {
        self.dims.len() as u64 == self.depth + 1 && self.dims.iter().enumerate().all(|(d, &k)| k == d + 1)
    }
}

pub fn non_fg_certificate(depth: u64, p: u64) -> Result<NonFGCert, FgError> {
    if depth == 0 {
        return Err(FgError::InvalidDepth);
    }
    let mut basis = SpanBasis::new(p)?;
    let mut dims = Vec::with_capacity(depth as usize + 1);
    for d in 0..=depth {
        basis.insert(&t_pow(d as i64, p))?;
        dims.push(basis.dimension());
    }
    let cert = NonFGCert { p, depth, dims };
    if !cert.is_valid() {
        return Err(FgError::InternalError(format!("dimension sequence {:?}", cert.dims)));
    }
    Ok(cert)
}

/// Translation part `c` of `x -> x + c` as a Laurent vector; `None` if the
/// map is not a translation.
pub fn translation_part(f: &AffineMap) -> Result<Option<LaurentVector>, FgError> {
    if !f.is_translation() {
        return Ok(None);
    }
    Ok(Some(laurent_coeffs(f.b())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::parse_laurent_list;

    fn set(s: &str, p: u64) -> Vec<LaurentVector> {
        parse_laurent_list(s, p).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(span_dimension(&set("1, t, t^2", 3), 3).unwrap(), 3);
        assert_eq!(span_dimension(&set("t, 2*t", 5), 5).unwrap(), 1);
        assert_eq!(span_dimension(&set("1 + t, 1, t", 3), 3).unwrap(), 2);
        assert_eq!(span_dimension(&[], 3).unwrap(), 0);
        assert!(span_dimension(&set("t", 5), 3).is_err());
    }

    #[test]
    fn membership() {
        let s = set("1, t", 3);
        assert!(!span_membership(&set("t^2", 3)[0], &s, 3).unwrap());
        assert!(span_membership(&set("2 + t", 3)[0], &s, 3).unwrap());
        assert!(span_membership(&LaurentVector::zero(3), &[], 3).unwrap());
    }

    #[test]
    fn escapes() {
        assert_eq!(escape_witness(&[], 3).unwrap(), 0);
        assert_eq!(escape_witness(&set("1, t, t^3", 3), 3).unwrap(), 2);
        assert_eq!(escape_witness(&set("t^-1, 1, t", 3), 3).unwrap(), 2);
        assert_eq!(escape_witness(&set("t^-4", 5), 5).unwrap(), 0);
        assert_eq!(escape_witness(&set("1 + t, t", 5), 5).unwrap(), 2);
    }

    #[test]
    fn rref_shape() {
        let b = SpanBasis::from_set(&set("1 + t, 1 + 2*t^2, t^2", 5), 5).unwrap();
        assert_eq!(b.dimension(), 3);
        assert_eq!(b.pivots(), vec![0, 1, 2]);
        for (row, pivot) in b.rows().iter().zip(b.pivots()) {
            assert_eq!(row.coeff(pivot), Fp::one(5));
            for other in b.pivots() {
                if other != pivot {
                    assert_eq!(row.coeff(other), Fp::zero(5));
                }
            }
        }
    }

    #[test]
    fn certificates() {
        assert_eq!(non_fg_certificate(3, 3).unwrap().dims, vec![1, 2, 3, 4]);
        assert_eq!(non_fg_certificate(1, 11).unwrap().dims, vec![1, 2]);
        let big = non_fg_certificate(200, 7).unwrap();
        assert_eq!(big.dims.len(), 201);
        assert!(big.is_valid());
        assert_eq!(non_fg_certificate(0, 3), Err(FgError::InvalidDepth));
        assert!(non_fg_certificate(2, 4).is_err());
    }
}
