use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldElement, FieldError, Fp};

/// Dense univariate polynomial over `F_p`, lowest degree first. The
/// coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    p: u64,
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero(p: u64) -> Self {
        Poly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        Poly::constant(Fp::one(p))
    }

    pub fn constant(c: Fp) -> Self {
        Poly::from_residues(c.modulus(), vec![c.value()])
    }

    /// The indeterminate itself.
    pub fn x(p: u64) -> Self {
        Poly::monomial(Fp::one(p), 1)
    }

    pub fn monomial(c: Fp, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c.value();
        Poly::from_residues(c.modulus(), coeffs)
    }

    /// Builds from signed integer coefficients, lowest degree first.
    pub fn from_coeffs(p: u64, coeffs: &[i64]) -> Self {
        Poly::from_residues(
            p,
            coeffs
                .iter()
                .map(|&c| c.rem_euclid(p as i64) as u64)
                .collect(),
        )
    }

    pub fn from_fp(p: u64, coeffs: &[Fp]) -> Self {
        assert!(coeffs.iter().all(|c| c.modulus() == p), "mixed moduli");
        Poly::from_residues(p, coeffs.iter().map(|c| c.value()).collect())
    }

    pub(crate) fn from_residues(p: u64, mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { p, coeffs }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Fp {
        Fp::from_residue(self.coeffs.get(i).copied().unwrap_or(0), self.p)
    }

    pub(crate) fn residues(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coefficients(&self) -> Vec<Fp> {
        self.coeffs
            .iter()
            .map(|&c| Fp::from_residue(c, self.p))
            .collect()
    }

    pub fn leading(&self) -> Fp {
        Fp::from_residue(self.coeffs.last().copied().unwrap_or(0), self.p)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().inv().expect("nonzero leading coefficient");
        self.scale(inv)
    }

    pub fn scale(&self, c: Fp) -> Self {
        assert_eq!(c.modulus(), self.p, "mixed moduli");
        Poly::from_residues(
            self.p,
            self.coeffs
                .iter()
                .map(|&a| (a as u128 * c.value() as u128 % self.p as u128) as u64)
                .collect(),
        )
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { p: self.p, coeffs }
    }

    /// Number of trailing-zero coefficients, i.e. the largest `k` with
    /// `x^k | self`. Zero for the zero polynomial.
    pub fn x_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|&&c| c == 0).count()
    }

    fn check(&self, other: &Poly) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly), FieldError> {
        self.check(divisor);
        if divisor.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = self.p as u128;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = divisor.leading().inv()?.value() as u128;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(self.p), self.clone()));
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = (rem[i + dd] as u128 * lead_inv % p) as u64;
            quot[i] = c;
            if c == 0 {
                continue;
            }
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let sub = (c as u128 * d as u128 % p) as u64;
                rem[i + j] = (rem[i + j] + self.p - sub) % self.p;
            }
        }
        Ok((
            Poly::from_residues(self.p, quot),
            Poly::from_residues(self.p, rem),
        ))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.check(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn eval(&self, x: Fp) -> Fp {
        assert_eq!(x.modulus(), self.p, "mixed moduli");
        self.coeffs
            .iter()
            .rev()
            .fold(Fp::zero(self.p), |acc, &c| acc * x + Fp::from_residue(c, self.p))
    }

    /// Horner evaluation at an element of any field of the same
    /// characteristic (extension elements, rational functions).
    pub fn eval_at<F: FieldElement>(&self, x: &F) -> Result<F, FieldError> {
        if x.characteristic() != self.p {
            return Err(FieldError::FieldMismatch);
        }
        let mut acc = x.zero_like();
        for &c in self.coeffs.iter().rev() {
            acc = acc.try_mul(x)?.try_add(&x.from_int_like(c as i64))?;
        }
        Ok(acc)
    }

    /// Irreducibility by trial division against every monic polynomial of
    /// degree at most `deg / 2`. Desk-scale only.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        for d in 1..=n / 2 {
            for cand in Poly::monic_of_degree(self.p, d) {
                if self.div_rem(&cand).expect("monic divisor").1.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// All monic polynomials of degree `n`, ordered lexicographically on
    /// the coordinate tuple `(c_0, c_1, ..., c_{n-1})`.
    pub fn monic_of_degree(p: u64, n: usize) -> impl Iterator<Item = Poly> {
        let total = p.pow(n as u32);
        (0..total).map(move |idx| {
            let mut coeffs = vec![0u64; n + 1];
            let mut rest = idx;
            // c_0 is the most significant digit
            for i in (0..n).rev() {
                coeffs[i] = rest % p;
                rest /= p;
            }
            coeffs[n] = 1;
            Poly::from_residues(p, coeffs)
        })
    }

    /// Renders with the given variable name, highest degree first.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("t"))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        self.check(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0);
                let b = rhs.coeffs.get(i).copied().unwrap_or(0);
                (a + b) % self.p
            })
            .collect();
        Poly::from_residues(self.p, coeffs)
    }
}

impl<'a> Neg for &'a Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_residues(
            self.p,
            self.coeffs.iter().map(|&c| (self.p - c) % self.p).collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        self.check(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.p);
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                acc[i + j] = (acc[i + j] + a as u128 * b as u128) % p;
            }
        }
        Poly::from_residues(self.p, acc.into_iter().map(|c| c as u64).collect())
    }
}

macro_rules! poly_owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_owned_binop!(Add, add);
poly_owned_binop!(Sub, sub);
poly_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_trailing_zeros() {
        let p = Poly::from_coeffs(5, &[1, 2, 0, 5, 10]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::from_coeffs(5, &[0, 0]), Poly::zero(5));
        assert_eq!(Poly::zero(5).degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_coeffs(7, &[3, 1, 4, 1, 5]);
        let b = Poly::from_coeffs(7, &[2, 0, 3]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(
            a.div_rem(&Poly::zero(7)),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn gcd_is_monic() {
        // (t-1)(t+1) and 2(t-1) over F_5
        let a = Poly::from_coeffs(5, &[-1, 0, 1]);
        let b = Poly::from_coeffs(5, &[-2, 2]);
        assert_eq!(a.gcd(&b), Poly::from_coeffs(5, &[-1, 1]));
    }

    #[test]
    fn irreducibility_small() {
        assert!(Poly::from_coeffs(3, &[1, 0, 1]).is_irreducible()); // x^2+1 over F_3
        assert!(!Poly::from_coeffs(5, &[1, 0, 1]).is_irreducible()); // 2^2 = -1 mod 5
        assert!(Poly::from_coeffs(5, &[1, 1, 1]).is_irreducible());
        assert!(!Poly::from_coeffs(3, &[0, 0, 0, 1]).is_irreducible());
    }

    #[test]
    fn monic_enumeration_order() {
        let all: Vec<Poly> = Poly::monic_of_degree(3, 2).collect();
        assert_eq!(all.len(), 9);
        assert_eq!(all[0], Poly::from_coeffs(3, &[0, 0, 1]));
        assert_eq!(all[1], Poly::from_coeffs(3, &[0, 1, 1]));
        assert_eq!(all[3], Poly::from_coeffs(3, &[1, 0, 1]));
    }

    #[test]
    fn display_and_eval() {
        let p = Poly::from_coeffs(5, &[1, 4, 1]);
        assert_eq!(p.to_string(), "t^2 + 4*t + 1");
        assert_eq!(p.eval(Fp::new(2, 5)), Fp::new(13, 5));
        assert_eq!(p.eval_at(&Fp::new(2, 5)).unwrap(), Fp::new(13, 5));
    }
}
