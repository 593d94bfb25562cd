use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldElement, FieldError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Accepts exactly the odd primes.
pub fn check_odd_prime(p: u64) -> Result<u64, FieldError> {
    if p % 2 == 1 && is_prime(p) {
        Ok(p)
    } else {
        Err(FieldError::InvalidPrime(p))
    }
}

/// Element of `F_p = Z/(p)`, stored as a residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    p: u64,
}

impl Fp {
    /// Reduces `value` modulo `p`. The modulus is trusted; use
    /// [`Fp::try_new`] at API boundaries.
    pub fn new(value: i64, p: u64) -> Self {
        let value = value.rem_euclid(p as i64) as u64;
        Fp { value, p }
    }

    pub fn try_new(value: i64, p: u64) -> Result<Self, FieldError> {
        check_odd_prime(p)?;
        Ok(Fp::new(value, p))
    }

    pub(crate) fn from_residue(value: u64, p: u64) -> Self {
        debug_assert!(value < p);
        Fp { value, p }
    }

    pub fn zero(p: u64) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u64) -> Self {
        Fp { value: 1, p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn signed(&self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }

    fn check(&self, other: &Fp) -> Result<(), FieldError> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement for Fp {
    fn zero_like(&self) -> Self {
        Fp::zero(self.p)
    }

    fn one_like(&self) -> Self {
        Fp::one(self.p)
    }

    fn from_int_like(&self, n: i64) -> Self {
        Fp::new(n, self.p)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn same_field(&self, other: &Self) -> bool {
        self.p == other.p
    }

    fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Fp::from_residue((self.value + other.value) % self.p, self.p))
    }

    fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(Fp::from_residue(
            (self.value + self.p - other.value) % self.p,
            self.p,
        ))
    }

    fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        let prod = (self.value as u128 * other.value as u128) % self.p as u128;
        Ok(Fp::from_residue(prod as u64, self.p))
    }

    fn negate(&self) -> Self {
        Fp::from_residue((self.p - self.value) % self.p, self.p)
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse);
        }
        // extended Euclid on (value, p)
        let (mut r0, mut r1) = (self.p as i128, self.value as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Fp::from_residue(
            s0.rem_euclid(self.p as i128) as u64,
            self.p,
        ))
    }

    fn field_size(&self) -> Option<u64> {
        Some(self.p)
    }

    fn field_elements(&self) -> Result<Vec<Self>, FieldError> {
        Ok((0..self.p).map(|v| Fp::from_residue(v, self.p)).collect())
    }
}

macro_rules! fp_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr for Fp {
            type Output = Fp;
            fn $method(self, rhs: Fp) -> Fp {
                self.$inner(&rhs).expect("Fp operands with different moduli")
            }
        }
        impl<'a> $tr<&'a Fp> for &'a Fp {
            type Output = Fp;
            fn $method(self, rhs: &'a Fp) -> Fp {
                self.$inner(rhs).expect("Fp operands with different moduli")
            }
        }
    };
}

fp_binop!(Add, add, try_add);
fp_binop!(Sub, sub, try_sub);
fp_binop!(Mul, mul, try_mul);

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..50).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
        );
        assert_eq!(check_odd_prime(2), Err(FieldError::InvalidPrime(2)));
        assert_eq!(check_odd_prime(9), Err(FieldError::InvalidPrime(9)));
        assert_eq!(check_odd_prime(1), Err(FieldError::InvalidPrime(1)));
        assert_eq!(check_odd_prime(13), Ok(13));
    }

    #[test]
    fn arithmetic() {
        assert_eq!(Fp::new(2, 5) + Fp::new(4, 5), Fp::new(1, 5));
        assert_eq!(Fp::new(-1, 7).value(), 6);
        assert_eq!(Fp::new(3, 7).inv().unwrap(), Fp::new(5, 7));
        assert_eq!(-Fp::new(0, 3), Fp::new(0, 3));
        assert_eq!(Fp::new(6, 7).signed(), -1);
        for p in [3u64, 5, 7, 11] {
            for v in 1..p {
                let x = Fp::new(v as i64, p);
                assert!((x * x.inv().unwrap()).is_one());
            }
        }
    }

    #[test]
    fn euler_criterion() {
        // squares mod 7: 1, 2, 4
        let sq: Vec<u64> = (0..7)
            .filter(|&v| Fp::new(v, 7).is_square().unwrap())
            .map(|v| v as u64)
            .collect();
        assert_eq!(sq, vec![0, 1, 2, 4]);
    }

    #[test]
    fn try_new_rejects_even() {
        assert_eq!(Fp::try_new(1, 2), Err(FieldError::InvalidPrime(2)));
        assert_eq!(Fp::try_new(1, 4), Err(FieldError::InvalidPrime(4)));
    }
}
