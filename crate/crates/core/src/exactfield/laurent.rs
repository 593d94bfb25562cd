use std::fmt;

use super::{FieldError, Fp, Poly, RatFunc};

/// Exponent-indexed coefficients of a Laurent polynomial `sum c_e t^e`
/// over the minimal window `[lo, hi]`. Zero is stored as window `(0, 0)`
/// with the single coefficient `0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentVector {
    p: u64,
    lo: i64,
    coeffs: Vec<u64>,
}

impl LaurentVector {
    /// Builds from residues starting at exponent `lo`, trimming to the
    /// minimal window.
    pub fn new(p: u64, lo: i64, coeffs: &[i64]) -> Self {
        let residues = coeffs
            .iter()
            .map(|&c| c.rem_euclid(p as i64) as u64)
            .collect();
        LaurentVector::from_residues(p, lo, residues)
    }

    pub(crate) fn from_residues(p: u64, lo: i64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        if lead == coeffs.len() {
            return LaurentVector::zero(p);
        }
        coeffs.drain(..lead);
        LaurentVector {
            p,
            lo: lo + lead as i64,
            coeffs,
        }
    }

    pub fn zero(p: u64) -> Self {
        LaurentVector {
            p,
            lo: 0,
            coeffs: vec![0],
        }
    }

    /// `c * t^e`.
    pub fn monomial(c: Fp, e: i64) -> Self {
        LaurentVector::from_residues(c.modulus(), e, vec![c.value()])
    }

    pub fn from_poly(f: &Poly) -> Self {
        LaurentVector::from_residues(f.modulus(), 0, f.residues().to_vec())
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0]
    }

    /// Inclusive exponent window `(lo, hi)`.
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.coeffs.len() as i64 - 1)
    }

    pub fn coeffs(&self) -> Vec<Fp> {
        self.coeffs
            .iter()
            .map(|&c| Fp::from_residue(c, self.p))
            .collect()
    }

    /// Coefficient of `t^e`; zero outside the window.
    pub fn coeff(&self, e: i64) -> Fp {
        let idx = e - self.lo;
        let v = if idx < 0 {
            0
        } else {
            self.coeffs.get(idx as usize).copied().unwrap_or(0)
        };
        Fp::from_residue(v, self.p)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, Fp)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (self.lo + i as i64, Fp::from_residue(c, self.p)))
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let p = self.p;
        let num = Poly::from_residues(p, self.coeffs.clone());
        let num = RatFunc::from_poly(num);
        let shift = RatFunc::monomial(Fp::one(p), self.lo);
        &num * &shift
    }
}

/// Reads off the Laurent coefficients of `r`, whose denominator must be a
/// power of `t`.
pub fn laurent_coeffs(r: &RatFunc) -> Result<LaurentVector, FieldError> {
    if !r.is_laurent() {
        return Err(FieldError::NotLaurent);
    }
    let shift = r.denominator().degree().unwrap_or(0) as i64;
    Ok(LaurentVector::from_residues(
        r.modulus(),
        -shift,
        r.numerator().residues().to_vec(),
    ))
}

impl fmt::Display for LaurentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = c.value();
            match (e, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}*t")?,
                (e, 1) => write!(f, "t^{e}")?,
                (e, c) => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}
