use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{laurent_coeffs, FieldElement, FieldError, Fp, LaurentVector, Poly};

/// Element of `F_p(t)` in canonical form: monic denominator, coprime
/// numerator, and `0/1` for zero. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

pub fn ratfunc_normalize(num: Poly, den: Poly) -> Result<RatFunc, FieldError> {
    RatFunc::new(num, den)
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self, FieldError> {
        if num.modulus() != den.modulus() {
            return Err(FieldError::FieldMismatch);
        }
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let p = num.modulus();
        if num.is_zero() {
            return Ok(RatFunc::zero(p));
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g)?.0;
        let den = den.div_rem(&g)?.0;
        let lead = den.leading().inv()?;
        Ok(RatFunc {
            num: num.scale(lead),
            den: den.scale(lead),
        })
    }

    pub fn zero(p: u64) -> Self {
        RatFunc {
            num: Poly::zero(p),
            den: Poly::one(p),
        }
    }

    pub fn one(p: u64) -> Self {
        RatFunc::from_poly(Poly::one(p))
    }

    /// The transcendental generator `t`.
    pub fn t(p: u64) -> Self {
        RatFunc::from_poly(Poly::x(p))
    }

    pub fn constant(c: Fp) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn from_int(c: i64, p: u64) -> Self {
        RatFunc::constant(Fp::new(c, p))
    }

    pub fn from_poly(num: Poly) -> Self {
        let p = num.modulus();
        RatFunc {
            num,
            den: Poly::one(p),
        }
    }

    /// `c * t^e` for any integer exponent.
    pub fn monomial(c: Fp, e: i64) -> Self {
        let p = c.modulus();
        if c.value() == 0 {
            return RatFunc::zero(p);
        }
        if e >= 0 {
            RatFunc::from_poly(Poly::monomial(c, e as usize))
        } else {
            RatFunc {
                num: Poly::constant(c),
                den: Poly::monomial(Fp::one(p), e.unsigned_abs() as usize),
            }
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn modulus(&self) -> u64 {
        self.num.modulus()
    }

    /// Whether the denominator is a power of `t`.
    pub fn is_laurent(&self) -> bool {
        match self.den.degree() {
            Some(d) => self.den.x_valuation() == d,
            None => false,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    pub fn powi(&self, e: i64) -> Result<Self, FieldError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok(base.pow(e.unsigned_abs()))
    }

    pub fn eval(&self, x: Fp) -> Result<Fp, FieldError> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.num.eval(x) * d.inv()?)
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.modulus() == other.modulus() {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match laurent_coeffs(self) {
            Ok(lv) => write!(f, "{lv}"),
            Err(_) => write!(
                f,
                "({})/({})",
                LaurentVector::from_poly(&self.num),
                LaurentVector::from_poly(&self.den)
            ),
        }
    }
}

impl FieldElement for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::zero(self.modulus())
    }

    fn one_like(&self) -> Self {
        RatFunc::one(self.modulus())
    }

    fn from_int_like(&self, n: i64) -> Self {
        RatFunc::from_int(n, self.modulus())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn characteristic(&self) -> u64 {
        self.modulus()
    }

    fn same_field(&self, other: &Self) -> bool {
        self.modulus() == other.modulus()
    }

    fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        if self.den == other.den {
            return RatFunc::new(&self.num + &other.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.try_add(&other.negate())
    }

    fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        RatFunc::new(&self.num * &other.num, &self.den * &other.den)
    }

    fn negate(&self) -> Self {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    fn field_size(&self) -> Option<u64> {
        None
    }

    fn field_elements(&self) -> Result<Vec<Self>, FieldError> {
        Err(FieldError::NotFinite)
    }
}

macro_rules! ratfunc_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl<'a> $tr<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                self.$inner(rhs).expect("rational functions over different fields")
            }
        }
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
    };
}

ratfunc_binop!(Add, add, try_add);
ratfunc_binop!(Sub, sub, try_sub);
ratfunc_binop!(Mul, mul, try_mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.negate()
    }
}

impl<'a> Neg for &'a RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self.negate()
    }
}
