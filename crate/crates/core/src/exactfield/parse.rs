//! Text grammar for Laurent polynomials and rational functions.
//!
//! Terms look like `c*t^e`, `c*t`, `t^e`, `t` or `c`, where `c` is a
//! decimal residue and `e` any integer, joined by `+` (a `-` between terms
//! negates the following term). Whitespace is ignored. A rational function
//! is either a Laurent polynomial or `(num)/(den)`.

use std::collections::BTreeMap;

use super::{check_odd_prime, FieldElement, FieldError, LaurentVector, RatFunc};

fn strip_parens(s: &str) -> &str {
    let mut s = s;
    while s.starts_with('(') && s.ends_with(')') && balanced(&s[1..s.len() - 1]) {
        s = &s[1..s.len() - 1];
    }
    s
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

fn parse_term(input: &str, term: &str, p: u64) -> Result<(i64, u64), FieldError> {
    let bad = |why: &str| FieldError::parse(input, format!("{why} in term {term:?}"));
    let (coef_part, var_part) = match term.find('t') {
        Some(pos) => (&term[..pos], Some(&term[pos + 1..])),
        None => (term, None),
    };
    let coef_part = coef_part.strip_suffix('*').unwrap_or(coef_part);
    let coef = if coef_part.is_empty() {
        if var_part.is_none() {
            return Err(bad("empty term"));
        }
        1
    } else {
        if !coef_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("coefficient is not a decimal residue"));
        }
        let big: u128 = coef_part.parse().map_err(|_| bad("coefficient overflow"))?;
        (big % p as u128) as u64
    };
    let exp = match var_part {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let e = rest.strip_prefix('^').ok_or_else(|| bad("expected '^'"))?;
            e.parse::<i64>().map_err(|_| bad("bad exponent"))?
        }
    };
    Ok((exp, coef))
}

/// Parses a Laurent polynomial in `t` over `F_p`.
pub fn parse_laurent(input: &str, p: u64) -> Result<LaurentVector, FieldError> {
    check_odd_prime(p)?;
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let body = strip_parens(&compact);
    if body.is_empty() {
        return Err(FieldError::parse(input, "empty expression"));
    }
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in body.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(FieldError::parse(input, "dangling operator"));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(FieldError::parse(input, "trailing operator"));
    }
    terms.push((negative, current));

    let mut acc: BTreeMap<i64, u64> = BTreeMap::new();
    for (neg, term) in &terms {
        let (e, c) = parse_term(input, term, p)?;
        let c = if *neg { (p - c) % p } else { c };
        let slot = acc.entry(e).or_insert(0);
        *slot = (*slot + c) % p;
    }
    let lo = *acc.keys().next().expect("at least one term");
    let hi = *acc.keys().last().expect("at least one term");
    let mut coeffs = vec![0u64; (hi - lo + 1) as usize];
    for (e, c) in acc {
        coeffs[(e - lo) as usize] = c;
    }
    Ok(LaurentVector::from_residues(p, lo, coeffs))
}

/// Parses a rational function: a Laurent polynomial, or `(num)/(den)`.
pub fn parse_ratfunc(input: &str, p: u64) -> Result<RatFunc, FieldError> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    let body = strip_parens(&compact);
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in body.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if split.is_some() {
                    return Err(FieldError::parse(input, "more than one '/'"));
                }
                split = Some(i);
            }
            _ => {}
        }
    }
    match split {
        None => Ok(parse_laurent(body, p)?.to_ratfunc()),
        Some(i) => {
            let num = parse_laurent(&body[..i], p)?.to_ratfunc();
            let den = parse_laurent(&body[i + 1..], p)?.to_ratfunc();
            if den.is_zero() {
                return Err(FieldError::DivisionByZero);
            }
            num.try_div(&den)
        }
    }
}

/// Comma-separated list of Laurent polynomials.
pub fn parse_laurent_list(input: &str, p: u64) -> Result<Vec<LaurentVector>, FieldError> {
    if input.trim().is_empty() {
        return Ok(Vec::new());
    }
    input.split(',').map(|s| parse_laurent(s, p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Fp;

    #[test]
    fn spec_style_input() {
        let lv = parse_laurent("2*t^-3 + 1 + t^5", 7).unwrap();
        assert_eq!(lv.window(), (-3, 5));
        assert_eq!(lv.coeff(-3), Fp::new(2, 7));
        assert_eq!(lv.coeff(0), Fp::new(1, 7));
        assert_eq!(lv.coeff(5), Fp::new(1, 7));
        assert_eq!(lv.to_string(), "2*t^-3 + 1 + t^5");
    }

    #[test]
    fn whitespace_and_reduction() {
        let a = parse_laurent("  7 * t ^ 2 +3t", 5).unwrap();
        assert_eq!(a, LaurentVector::new(5, 1, &[3, 2]));
        let b = parse_laurent("t - 1", 3).unwrap();
        assert_eq!(b, LaurentVector::new(3, 0, &[2, 1]));
        assert!(parse_laurent("t + t + t", 3).unwrap().is_zero());
    }

    #[test]
    fn rational_functions() {
        let r = parse_ratfunc("(t^2 + 4)/(t + 1)", 5).unwrap();
        // t^2 - 1 = (t - 1)(t + 1) over F_5
        assert_eq!(r, parse_ratfunc("t + 4", 5).unwrap());
        assert_eq!(
            parse_ratfunc("(1)/(0)", 5),
            Err(FieldError::DivisionByZero)
        );
        let s = parse_ratfunc("(1)/(1 + t)", 3).unwrap();
        assert_eq!(parse_ratfunc(&s.to_string(), 3).unwrap(), s);
    }

    #[test]
    fn malformed() {
        for bad in ["", "t^", "2*x", "1 + + t", "t^1.5", "3 +", "(1)/(t)/(t)"] {
            assert!(parse_ratfunc(bad, 5).is_err(), "{bad:?} should fail");
        }
        assert_eq!(parse_laurent("t", 4), Err(FieldError::InvalidPrime(4)));
    }

    #[test]
    fn lists() {
        let v = parse_laurent_list("1, t, t^3", 3).unwrap();
        assert_eq!(v.len(), 3);
        assert!(parse_laurent_list("", 3).unwrap().is_empty());
    }
}
