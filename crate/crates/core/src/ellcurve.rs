//! Legendre-form elliptic curves `y^2 = x(x-1)(x-λ)`.
//!
//! The group law uses the long Weierstrass shape
//! `y^2 = x^3 + a2 x^2 + a4 x` with `a2 = -(1+λ)`, `a4 = λ`.
//! Supersingularity is decided by the Hasse coefficient: the coefficient of
//! `x^{p-1}` in `(x(x-1)(x-λ))^{(p-1)/2}`, a polynomial in `λ`.

use std::fmt;

use serde::Serialize;

use crate::exactfield::{
    check_odd_prime, ext_field_build, parse_ratfunc, ExtElem, FieldElement,
    FieldError, Fp, Poly, RatFunc,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("odd prime required, got {0}")]
    InvalidPrime(u64),
    #[error("λ(λ-1) = 0: the Legendre model is singular")]
    Singular,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("base field is infinite")]
    NotFinite,
    #[error("internal error: {0}")]
    InternalError(String),
    #[error("cannot parse {0:?}")]
    Parse(String),
    #[error(transparent)]
    Field(FieldError),
}

impl From<FieldError> for CurveError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::InvalidPrime(p) => CurveError::InvalidPrime(p),
            FieldError::NotFinite => CurveError::NotFinite,
            other => CurveError::Field(other),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurvePoint<F> {
    Infinity,
    Affine { x: F, y: F },
}

impl<F> CurvePoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }
}

impl<F: fmt::Display> fmt::Display for CurvePoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => f.write_str("O"),
            CurvePoint::Affine { x, y } => write!(f, "({x},{y})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LegendreCurve<F> {
    lambda: F,
}

impl<F: FieldElement> LegendreCurve<F> {
    pub fn new(lambda: F) -> Result<Self, CurveError> {
        check_odd_prime(lambda.characteristic())?;
        let lm1 = lambda.try_sub(&lambda.one_like())?;
        if lambda.is_zero() || lm1.is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(LegendreCurve { lambda })
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    /// `x(x-1)(x-λ)`.
    pub fn rhs(&self, x: &F) -> Result<F, CurveError> {
        let xm1 = x.try_sub(&x.one_like())?;
        let xml = x.try_sub(&self.lambda)?;
        Ok(x.try_mul(&xm1)?.try_mul(&xml)?)
    }

    pub fn contains(&self, pt: &CurvePoint<F>) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => match (y.try_mul(y), self.rhs(x)) {
                (Ok(lhs), Ok(rhs)) => lhs == rhs,
                _ => false,
            },
        }
    }

    pub fn point(&self, x: F, y: F) -> Result<CurvePoint<F>, CurveError> {
        let pt = CurvePoint::Affine { x, y };
        if self.contains(&pt) {
            Ok(pt)
        } else {
            Err(CurveError::NotOnCurve)
        }
    }

    fn a2(&self) -> F {
        self.lambda.try_add(&self.lambda.one_like()).expect("same field").negate()
    }

    pub fn negate(&self, pt: &CurvePoint<F>) -> Result<CurvePoint<F>, CurveError> {
        if !self.contains(pt) {
            return Err(CurveError::NotOnCurve);
        }
        Ok(match pt {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine {
                x: x.clone(),
                y: y.negate(),
            },
        })
    }

    /// Chord-tangent addition with `O` as identity.
    pub fn add(&self, a: &CurvePoint<F>, b: &CurvePoint<F>) -> Result<CurvePoint<F>, CurveError> {
        if !self.contains(a) || !self.contains(b) {
            return Err(CurveError::NotOnCurve);
        }
        let (x1, y1, x2, y2) = match (a, b) {
            (CurvePoint::Infinity, _) => return Ok(b.clone()),
            (_, CurvePoint::Infinity) => return Ok(a.clone()),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let a2 = self.a2();
        let slope = if x1 == x2 {
            // P + (-P), including doubling a 2-torsion point
            if y1.try_add(y2)?.is_zero() {
                return Ok(CurvePoint::Infinity);
            }
            // tangent: (3x^2 + 2 a2 x + a4) / (2y)
            let three = x1.from_int_like(3);
            let two = x1.from_int_like(2);
            let num = three
                .try_mul(x1)?
                .try_mul(x1)?
                .try_add(&two.try_mul(&a2)?.try_mul(x1)?)?
                .try_add(&self.lambda)?;
            num.try_div(&two.try_mul(y1)?)?
        } else {
            y2.try_sub(y1)?.try_div(&x2.try_sub(x1)?)?
        };
        let x3 = slope
            .try_mul(&slope)?
            .try_sub(&a2)?
            .try_sub(x1)?
            .try_sub(x2)?;
        let y3 = y1.try_add(&slope.try_mul(&x3.try_sub(x1)?)?)?.negate();
        Ok(CurvePoint::Affine { x: x3, y: y3 })
    }

    pub fn double(&self, pt: &CurvePoint<F>) -> Result<CurvePoint<F>, CurveError> {
        self.add(pt, pt)
    }

    pub fn mul(&self, k: i64, pt: &CurvePoint<F>) -> Result<CurvePoint<F>, CurveError> {
        let mut base = if k < 0 { self.negate(pt)? } else { pt.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            base = self.double(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// `{O, (0,0), (1,0), (λ,0)}`.
    pub fn two_torsion(&self) -> [CurvePoint<F>; 4] {
        let zero = self.lambda.zero_like();
        [
            CurvePoint::Infinity,
            CurvePoint::Affine {
                x: zero.clone(),
                y: zero.clone(),
            },
            CurvePoint::Affine {
                x: self.lambda.one_like(),
                y: zero.clone(),
            },
            CurvePoint::Affine {
                x: self.lambda.clone(),
                y: zero,
            },
        ]
    }

    /// Every rational point, `O` first, then by `x` in field order and the
    /// two square roots in field order.
    pub fn points(&self) -> Result<Vec<CurvePoint<F>>, CurveError> {
        let elems = self.lambda.field_elements()?;
        let mut squares: Vec<(F, F)> = Vec::new();
        for y in &elems {
            squares.push((y.try_mul(y)?, y.clone()));
        }
        let mut pts = vec![CurvePoint::Infinity];
        for x in &elems {
            let f = self.rhs(x)?;
            for (sq, y) in &squares {
                if *sq == f {
                    pts.push(CurvePoint::Affine {
                        x: x.clone(),
                        y: y.clone(),
                    });
                }
            }
        }
        Ok(pts)
    }

    /// `#E(F_q)`, counted with Euler's criterion on each `x`.
    pub fn point_count(&self) -> Result<u64, CurveError> {
        let elems = self.lambda.field_elements()?;
        let mut count = 1u64;
        for x in &elems {
            let f = self.rhs(x)?;
            if f.is_zero() {
                count += 1;
            } else if f.is_square()? {
                count += 2;
            }
        }
        Ok(count)
    }
}

pub fn point_add<F: FieldElement>(
    c: &LegendreCurve<F>,
    a: &CurvePoint<F>,
    b: &CurvePoint<F>,
) -> Result<CurvePoint<F>, CurveError> {
    c.add(a, b)
}

pub fn two_torsion<F: FieldElement>(c: &LegendreCurve<F>) -> [CurvePoint<F>; 4] {
    c.two_torsion()
}

pub fn point_count<F: FieldElement>(c: &LegendreCurve<F>) -> Result<u64, CurveError> {
    c.point_count()
}

/// Whether `|q + 1 - n| <= 2 sqrt(q)`, checked in integers.
pub fn within_hasse_bound(q: u64, n: u64) -> bool {
    let trace = q as i128 + 1 - n as i128;
    trace * trace <= 4 * q as i128
}

/// Coefficient of `x^{p-1}` in `(x^3 - (1+λ)x^2 + λx)^{(p-1)/2}`, as a
/// polynomial in `λ` over `F_p`.
pub fn hasse_poly(p: u64) -> Result<Poly, CurveError> {
    check_odd_prime(p)?;
    let m = (p - 1) / 2;
    // f(x) with polynomial-in-λ coefficients, indexed by x-degree
    let f = vec![
        Poly::zero(p),
        Poly::x(p),
        -&(&Poly::one(p) + &Poly::x(p)),
        Poly::one(p),
    ];
    let mut acc = vec![Poly::one(p)];
    for _ in 0..m {
        let mut next = vec![Poly::zero(p); acc.len() + f.len() - 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in f.iter().enumerate() {
                next[i + j] = &next[i + j] + &(a * b);
            }
        }
        acc = next;
    }
    Ok(acc
        .get((p - 1) as usize)
        .cloned()
        .unwrap_or_else(|| Poly::zero(p)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrdinaryWitness {
    pub ordinary: bool,
    /// The Hasse polynomial evaluated at the transcendental `λ = t`.
    pub witness: RatFunc,
}

/// `y^2 = x(x-1)(x-t)` over `F_p(t)` is ordinary: the Hasse polynomial is
/// a nonzero polynomial, so its value at the transcendental `t` is nonzero.
pub fn is_ordinary_generic(p: u64) -> Result<OrdinaryWitness, CurveError> {
    let h = hasse_poly(p)?;
    let witness = h.eval_at(&RatFunc::t(p))?;
    Ok(OrdinaryWitness {
        ordinary: !witness.is_zero(),
        witness,
    })
}

/// First root `λ0 ∉ {0, 1}` of the Hasse polynomial, searching `F_p` in
/// residue order and then `F_{p^2} \ F_p` in coordinate order.
pub fn find_supersingular_lambda(p: u64) -> Result<ExtElem, CurveError> {
    let h = hasse_poly(p)?;
    let f2 = ext_field_build(p, 2)?;
    for v in 2..p {
        if h.eval(Fp::new(v as i64, p)).is_zero() {
            return Ok(f2.from_int(v as i64));
        }
    }
    for cand in f2.elements() {
        if cand.in_prime_field().is_some() {
            continue;
        }
        if h.eval_at(&cand)?.is_zero() {
            return Ok(cand);
        }
    }
    Err(CurveError::InternalError(format!(
        "no supersingular Legendre parameter found in F_{p}^2"
    )))
}

/// Evidence that `E: y^2 = x(x-1)(x-t)` and a supersingular `F` are not
/// isogenous: their p-ranks differ.
#[derive(Clone, Debug)]
pub struct NonIsogenyCert {
    pub p: u64,
    pub e_hasse_at_t: RatFunc,
    pub lambda0: ExtElem,
    pub hasse_at_lambda0: ExtElem,
    /// `#F(F_p)` when `λ0` lies in the prime field.
    pub f_count_prime_field: Option<u64>,
    /// `#F(F_{p^2})`.
    pub f_count_quadratic: u64,
}

impl NonIsogenyCert {
    pub fn e_is_ordinary(&self) -> bool {
        !self.e_hasse_at_t.is_zero()
    }

    pub fn f_is_supersingular(&self) -> bool {
        self.hasse_at_lambda0.is_zero() && self.f_trace_quadratic() % self.p as i64 == 0
    }

    /// Frobenius trace of `F` over `F_{p^2}`.
    pub fn f_trace_quadratic(&self) -> i64 {
        (self.p * self.p + 1) as i64 - self.f_count_quadratic as i64
    }

    pub fn is_valid(&self) -> bool {
        self.e_is_ordinary() && self.f_is_supersingular()
    }
}

#[derive(Serialize)]
struct CertSummary {
    p: u64,
    e_hasse_at_t: String,
    lambda0: String,
    modulus_f_p2: String,
    f_count_prime_field: Option<u64>,
    f_count_quadratic: u64,
    f_trace_quadratic: i64,
    valid: bool,
}

impl NonIsogenyCert {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(CertSummary {
            p: self.p,
            e_hasse_at_t: self.e_hasse_at_t.to_string(),
            lambda0: self.lambda0.to_string(),
            modulus_f_p2: self.lambda0.field().modulus().to_string_in("a"),
            f_count_prime_field: self.f_count_prime_field,
            f_count_quadratic: self.f_count_quadratic,
            f_trace_quadratic: self.f_trace_quadratic(),
            valid: self.is_valid(),
        })
        .expect("plain data")
    }
}

pub fn non_isogeny_certificate(p: u64) -> Result<NonIsogenyCert, CurveError> {
    let ord = is_ordinary_generic(p)?;
    let lambda0 = find_supersingular_lambda(p)?;
    let hasse_at_lambda0 = hasse_poly(p)?.eval_at(&lambda0)?;
    let f_count_prime_field = match lambda0.in_prime_field() {
        Some(l) => Some(LegendreCurve::new(l)?.point_count()?),
        None => None,
    };
    let f_count_quadratic = LegendreCurve::new(lambda0.clone())?.point_count()?;
    Ok(NonIsogenyCert {
        p,
        e_hasse_at_t: ord.witness,
        lambda0,
        hasse_at_lambda0,
        f_count_prime_field,
        f_count_quadratic,
    })
}

/// A curve parsed from `legendre p=<p> lambda=<value>`: a bare residue
/// gives a curve over `F_p`, anything mentioning `t` a curve over `F_p(t)`.
#[derive(Clone, Debug, PartialEq)]
pub enum CurveDescriptor {
    PrimeField(LegendreCurve<Fp>),
    FunctionField(LegendreCurve<RatFunc>),
}

impl CurveDescriptor {
    pub fn parse(s: &str) -> Result<Self, CurveError> {
        let bad = || CurveError::Parse(s.to_string());
        let rest = s.trim().strip_prefix("legendre").ok_or_else(bad)?;
        let rest = rest.trim_start();
        let rest = rest.strip_prefix("p=").ok_or_else(bad)?;
        let (p_str, rest) = rest.split_once(char::is_whitespace).ok_or_else(bad)?;
        let p: u64 = p_str.parse().map_err(|_| bad())?;
        check_odd_prime(p)?;
        let lambda = rest.trim().strip_prefix("lambda=").ok_or_else(bad)?;
        if lambda.contains('t') {
            Ok(CurveDescriptor::FunctionField(LegendreCurve::new(
                parse_ratfunc(lambda, p)?,
            )?))
        } else {
            let v: i64 = lambda.trim().parse().map_err(|_| bad())?;
            Ok(CurveDescriptor::PrimeField(LegendreCurve::new(Fp::new(v, p))?))
        }
    }
}

impl fmt::Display for CurveDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveDescriptor::PrimeField(c) => {
                write!(f, "legendre p={} lambda={}", c.lambda().modulus(), c.lambda())
            }
            CurveDescriptor::FunctionField(c) => {
                write!(f, "legendre p={} lambda={}", c.lambda().modulus(), c.lambda())
            }
        }
    }
}

/// Parses `O` or `(x,y)` over `F_p`.
pub fn parse_point_fp(s: &str, p: u64) -> Result<CurvePoint<Fp>, CurveError> {
    parse_point_with(s, |v| {
        v.trim()
            .parse::<i64>()
            .map(|n| Fp::new(n, p))
            .map_err(|_| CurveError::Parse(s.to_string()))
    })
}

/// Parses `O` or `(x,y)` over `F_p(t)`.
pub fn parse_point_ratfunc(s: &str, p: u64) -> Result<CurvePoint<RatFunc>, CurveError> {
    parse_point_with(s, |v| Ok(parse_ratfunc(v, p)?))
}

fn parse_point_with<F>(
    s: &str,
    elem: impl Fn(&str) -> Result<F, CurveError>,
) -> Result<CurvePoint<F>, CurveError> {
    let s = s.trim();
    if s == "O" {
        return Ok(CurvePoint::Infinity);
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| CurveError::Parse(s.to_string()))?;
    // split at the top-level comma
    let mut depth = 0i32;
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                return Ok(CurvePoint::Affine {
                    x: elem(&inner[..i])?,
                    y: elem(&inner[i + 1..])?,
                });
            }
            _ => {}
        }
    }
    Err(CurveError::Parse(s.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp_curve(lambda: i64, p: u64) -> LegendreCurve<Fp> {
        LegendreCurve::new(Fp::new(lambda, p)).unwrap()
    }

    /// Closed form of the Hasse polynomial, independent of the expansion:
    /// `(-1)^m * sum_i C(m,i)^2 λ^i` with `m = (p-1)/2`.
    fn hasse_closed_form(p: u64) -> Poly {
        let m = (p - 1) / 2;
        let mut coeffs = Vec::new();
        let mut binom: u128 = 1;
        for i in 0..=m {
            if i > 0 {
                binom = binom * (m - i + 1) as u128 / i as u128;
            }
            coeffs.push(((binom % p as u128) * (binom % p as u128) % p as u128) as i64);
        }
        let poly = Poly::from_coeffs(p, &coeffs);
        if m % 2 == 1 {
            -&poly
        } else {
            poly
        }
    }

    #[test]
    fn add_identity_and_two_torsion() {
        let c = fp_curve(2, 7);
        let pt = c.point(Fp::new(5, 7), Fp::new(2, 7)).unwrap();
        assert_eq!(c.add(&pt, &CurvePoint::Infinity).unwrap(), pt);
        let [_, t0, t1, tl] = c.two_torsion();
        assert_eq!(c.add(&t0, &t1).unwrap(), tl);
        for q in c.two_torsion() {
            assert!(c.add(&q, &q).unwrap().is_infinity());
        }
    }

    #[test]
    fn doubling_example() {
        // slope 3, x' = 9 + 3 - 10 = 2, y' = 0
        let c = fp_curve(2, 7);
        let pt = c.point(Fp::new(5, 7), Fp::new(2, 7)).unwrap();
        let expected = CurvePoint::Affine {
            x: Fp::new(2, 7),
            y: Fp::new(0, 7),
        };
        assert_eq!(c.double(&pt).unwrap(), expected);
    }

    #[test]
    fn doubling_matches_group_table() {
        // y^2 = x^3 - 3x^2 + 2x over F_7 has 8 points; brute force the
        // group table by repeated addition and compare 2P with P + P.
        let c = fp_curve(2, 7);
        let pts = c.points().unwrap();
        assert_eq!(pts.len(), 8);
        assert_eq!(c.point_count().unwrap(), 8);
        for a in &pts {
            let twice = c.double(a).unwrap();
            assert!(pts.contains(&twice));
            assert_eq!(c.mul(2, a).unwrap(), twice);
            assert!(c.mul(8, a).unwrap().is_infinity());
        }
    }

    #[test]
    fn not_on_curve() {
        let c = fp_curve(2, 7);
        let off = CurvePoint::Affine {
            x: Fp::new(5, 7),
            y: Fp::new(3, 7),
        };
        assert_eq!(c.add(&off, &CurvePoint::Infinity), Err(CurveError::NotOnCurve));
        assert_eq!(c.point(Fp::new(5, 7), Fp::new(3, 7)), Err(CurveError::NotOnCurve));
    }

    #[test]
    fn singular_and_even() {
        assert_eq!(LegendreCurve::new(Fp::new(1, 5)), Err(CurveError::Singular));
        assert_eq!(LegendreCurve::new(Fp::new(0, 5)), Err(CurveError::Singular));
    }

    #[test]
    fn two_torsion_over_function_field() {
        let t = RatFunc::t(3);
        let c = LegendreCurve::new(t.clone()).unwrap();
        let tt = c.two_torsion();
        assert_eq!(tt[3].x(), Some(&t));
        assert!(c.add(&tt[3], &tt[3]).unwrap().is_infinity());
        assert_eq!(c.point_count(), Err(CurveError::NotFinite));
    }

    #[test]
    fn hasse_examples() {
        assert_eq!(hasse_poly(3).unwrap(), Poly::from_coeffs(3, &[2, 2]));
        assert_eq!(hasse_poly(5).unwrap(), Poly::from_coeffs(5, &[1, 4, 1]));
        assert_eq!(hasse_poly(7).unwrap().degree(), Some(3));
        assert_eq!(hasse_poly(2), Err(CurveError::InvalidPrime(2)));
    }

    #[test]
    fn hasse_matches_closed_form() {
        for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
            assert_eq!(hasse_poly(p).unwrap(), hasse_closed_form(p), "p = {p}");
            assert_eq!(hasse_poly(p).unwrap().degree(), Some(((p - 1) / 2) as usize));
        }
    }

    #[test]
    fn ordinary_witnesses() {
        let w = is_ordinary_generic(3).unwrap();
        assert!(w.ordinary);
        assert_eq!(w.witness, crate::exactfield::parse_ratfunc("2 + 2*t", 3).unwrap());
        let w = is_ordinary_generic(5).unwrap();
        assert_eq!(w.witness, crate::exactfield::parse_ratfunc("t^2 + 4*t + 1", 5).unwrap());
        assert!(is_ordinary_generic(7).unwrap().ordinary);
    }

    #[test]
    fn supersingular_small_primes() {
        let l3 = find_supersingular_lambda(3).unwrap();
        assert_eq!(l3.in_prime_field(), Some(Fp::new(2, 3)));
        assert_eq!(fp_curve(2, 3).point_count().unwrap(), 4);

        let l5 = find_supersingular_lambda(5).unwrap();
        assert!(l5.in_prime_field().is_none());
        // oracle: no root of λ^2 + 4λ + 1 in F_5
        assert!((0..5).all(|v| (v * v + 4 * v + 1) % 5 != 0));
        assert!(hasse_poly(5).unwrap().eval_at(&l5).unwrap().is_zero());
    }

    #[test]
    fn point_count_examples() {
        assert_eq!(fp_curve(2, 3).point_count().unwrap(), 4);
        assert_eq!(fp_curve(2, 5).point_count().unwrap(), 8);
    }

    #[test]
    fn certificates() {
        let c3 = non_isogeny_certificate(3).unwrap();
        assert!(c3.is_valid());
        assert_eq!(c3.f_count_prime_field, Some(4));
        let c5 = non_isogeny_certificate(5).unwrap();
        assert!(c5.is_valid());
        assert!(c5.lambda0.in_prime_field().is_none());
        assert!(matches!(
            non_isogeny_certificate(2),
            Err(CurveError::InvalidPrime(2))
        ));
    }

    #[test]
    fn descriptor_text() {
        let d = CurveDescriptor::parse("legendre p=7 lambda=2").unwrap();
        assert_eq!(d, CurveDescriptor::PrimeField(fp_curve(2, 7)));
        assert_eq!(d.to_string(), "legendre p=7 lambda=2");
        let e = CurveDescriptor::parse("legendre p=3 lambda=t").unwrap();
        assert!(matches!(e, CurveDescriptor::FunctionField(_)));
        assert!(CurveDescriptor::parse("legendre p=2 lambda=3").is_err());
        assert!(CurveDescriptor::parse("weierstrass p=5 lambda=3").is_err());

        assert_eq!(parse_point_fp("O", 7).unwrap(), CurvePoint::Infinity);
        let pt = parse_point_fp("(5,2)", 7).unwrap();
        assert_eq!(pt.to_string(), "(5,2)");
        let q = parse_point_ratfunc("(t,0)", 3).unwrap();
        assert_eq!(q.x(), Some(&RatFunc::t(3)));
    }
}
