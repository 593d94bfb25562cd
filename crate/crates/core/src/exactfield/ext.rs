use std::fmt;
use std::sync::Arc;

use super::{check_odd_prime, FieldElement, FieldError, Fp, Poly};

/// Upper bound on `p^n` for extension fields; every element must be
/// enumerable.
pub const EXT_FIELD_GUARD: u64 = 1_000_000;

/// Descriptor of `F_{p^n} = F_p[a] / (m(a))` for a monic irreducible `m`.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct ExtField {
    p: u64,
    n: usize,
    modulus: Poly,
}

/// Builds `F_{p^n}` using the lexicographically least monic irreducible
/// polynomial of degree `n` (order on `(c_0, ..., c_{n-1})`).
pub fn ext_field_build(p: u64, n: usize) -> Result<Arc<ExtField>, FieldError> {
    check_odd_prime(p)?;
    if n == 0 {
        return Err(FieldError::TooLarge { p, n });
    }
    let size = u32::try_from(n)
        .ok()
        .and_then(|e| p.checked_pow(e))
        .filter(|&q| q <= EXT_FIELD_GUARD);
    if size.is_none() {
        return Err(FieldError::TooLarge { p, n });
    }
    let modulus = Poly::monic_of_degree(p, n)
        .find(|m| m.is_irreducible())
        .expect("irreducible polynomials exist in every degree");
    Ok(Arc::new(ExtField { p, n, modulus }))
}

impl ExtField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.n as u32)
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> ExtElem {
        self.from_poly(&Poly::zero(self.p))
    }

    pub fn one(self: &Arc<Self>) -> ExtElem {
        self.from_poly(&Poly::one(self.p))
    }

    /// The class of the indeterminate, a root of the modulus.
    pub fn generator(self: &Arc<Self>) -> ExtElem {
        self.from_poly(&Poly::x(self.p))
    }

    pub fn from_fp(self: &Arc<Self>, c: Fp) -> ExtElem {
        assert_eq!(c.modulus(), self.p, "mixed moduli");
        self.from_poly(&Poly::constant(c))
    }

    pub fn from_int(self: &Arc<Self>, c: i64) -> ExtElem {
        self.from_fp(Fp::new(c, self.p))
    }

    /// Reduces an arbitrary polynomial modulo the defining polynomial.
    pub fn from_poly(self: &Arc<Self>, f: &Poly) -> ExtElem {
        let r = f.div_rem(&self.modulus).expect("monic modulus").1;
        let mut coeffs = r.residues().to_vec();
        coeffs.resize(self.n, 0);
        ExtElem {
            field: Arc::clone(self),
            coeffs,
        }
    }

    /// Element with the given coordinates in the basis `1, a, ..., a^{n-1}`.
    pub fn from_coords(self: &Arc<Self>, coords: &[i64]) -> ExtElem {
        self.from_poly(&Poly::from_coeffs(self.p, coords))
    }

    /// Every element, in lexicographic order on the coordinate tuple
    /// `(c_0, ..., c_{n-1})`.
    pub fn elements(self: &Arc<Self>) -> Vec<ExtElem> {
        let p = self.p;
        (0..self.size())
            .map(|idx| {
                let mut coeffs = vec![0u64; self.n];
                let mut rest = idx;
                for i in (0..self.n).rev() {
                    coeffs[i] = rest % p;
                    rest /= p;
                }
                ExtElem {
                    field: Arc::clone(self),
                    coeffs,
                }
            })
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Arc<ExtField>,
    coeffs: Vec<u64>,
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for ExtElem {}

impl ExtElem {
    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn coords(&self) -> Vec<Fp> {
        self.coeffs
            .iter()
            .map(|&c| Fp::from_residue(c, self.field.p))
            .collect()
    }

    pub fn as_poly(&self) -> Poly {
        Poly::from_residues(self.field.p, self.coeffs.clone())
    }

    /// The prime-field value, if the element lies in `F_p`.
    pub fn in_prime_field(&self) -> Option<Fp> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(Fp::from_residue(self.coeffs[0], self.field.p))
        } else {
            None
        }
    }

    pub fn frobenius(&self) -> ExtElem {
        self.pow(self.field.p)
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.same_field(other) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.as_poly().to_string_in("a"))
    }
}

impl FieldElement for ExtElem {
    fn zero_like(&self) -> Self {
        self.field.zero()
    }

    fn one_like(&self) -> Self {
        self.field.one()
    }

    fn from_int_like(&self, n: i64) -> Self {
        self.field.from_int(n)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn characteristic(&self) -> u64 {
        self.field.p
    }

    fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let p = self.field.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(ExtElem {
            field: Arc::clone(&self.field),
            coeffs,
        })
    }

    fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_add(&other.negate())
    }

    fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.field.from_poly(&(&self.as_poly() * &other.as_poly())))
    }

    fn negate(&self) -> Self {
        let p = self.field.p;
        ExtElem {
            field: Arc::clone(&self.field),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        // extended Euclid: s * self + t * modulus = 1
        let p = self.field.p;
        let (mut r0, mut r1) = (self.field.modulus.clone(), self.as_poly());
        let (mut s0, mut s1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = &s0 - &(&q * &s1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant because the modulus is irreducible
        let c = r0.coeff(0).inv()?;
        Ok(self.field.from_poly(&s0.scale(c)))
    }

    fn field_size(&self) -> Option<u64> {
        Some(self.field.size())
    }

    fn field_elements(&self) -> Result<Vec<Self>, FieldError> {
        Ok(self.field.elements())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: a monic quadratic over `F_p` is irreducible iff it
    /// has no root in `F_p`.
    fn least_irreducible_quadratic(p: u64) -> (u64, u64) {
        for c0 in 0..p {
            for c1 in 0..p {
                let has_root = (0..p).any(|x| (x * x + c1 * x + c0) % p == 0);
                if !has_root {
                    return (c0, c1);
                }
            }
        }
        unreachable!()
    }

    #[test]
    fn f9_modulus_is_least_irreducible() {
        let f9 = ext_field_build(3, 2).unwrap();
        assert_eq!(f9.size(), 9);
        let (c0, c1) = least_irreducible_quadratic(3);
        assert_eq!((c0, c1), (1, 0));
        assert_eq!(
            *f9.modulus(),
            Poly::from_coeffs(3, &[c0 as i64, c1 as i64, 1])
        );
    }

    #[test]
    fn quadratic_moduli_match_oracle() {
        for p in [3u64, 5, 7, 11, 13] {
            let f = ext_field_build(p, 2).unwrap();
            let (c0, c1) = least_irreducible_quadratic(p);
            assert_eq!(*f.modulus(), Poly::from_coeffs(p, &[c0 as i64, c1 as i64, 1]));
        }
    }

    #[test]
    fn degree_one_is_prime_field() {
        let f5 = ext_field_build(5, 1).unwrap();
        assert_eq!(f5.size(), 5);
        assert_eq!(f5.modulus().degree(), Some(1));
        assert!(f5.elements().iter().all(|e| e.in_prime_field().is_some()));
    }

    #[test]
    fn build_errors() {
        assert_eq!(ext_field_build(2, 3), Err(FieldError::InvalidPrime(2)));
        assert_eq!(ext_field_build(15, 1), Err(FieldError::InvalidPrime(15)));
        assert_eq!(
            ext_field_build(3, 13),
            Err(FieldError::TooLarge { p: 3, n: 13 })
        );
        assert!(ext_field_build(3, 12).is_ok());
    }

    #[test]
    fn multiplicative_group_order() {
        for (p, n) in [(3u64, 2usize), (3, 3), (5, 2), (7, 2)] {
            let f = ext_field_build(p, n).unwrap();
            let q = f.size();
            for x in f.elements().into_iter().filter(|x| !x.is_zero()) {
                assert!(x.pow(q - 1).is_one());
                assert!(x.try_mul(&x.inv().unwrap()).unwrap().is_one());
            }
        }
    }

    #[test]
    fn generator_is_root_of_modulus() {
        let f = ext_field_build(7, 3).unwrap();
        let a = f.generator();
        assert!(f.modulus().eval_at(&a).unwrap().is_zero());
    }
}
