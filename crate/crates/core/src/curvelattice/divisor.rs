use std::collections::BTreeMap;
use std::fmt;

use super::LatticeError;

/// Formal integer combination of curve labels. Zero coefficients are never
/// stored, so structural equality is equality of formal sums.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Divisor {
    terms: BTreeMap<String, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Divisor::default()
    }

    pub fn curve(label: &str) -> Self {
        Divisor::from_terms(&[(label, 1)])
    }

    pub fn from_terms(terms: &[(&str, i64)]) -> Self {
        let mut d = Divisor::zero();
        for &(label, c) in terms {
            d.add_term(label, c);
        }
        d
    }

    fn add_term(&mut self, label: &str, c: i64) {
        let slot = self.terms.entry(label.to_string()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(label);
        }
    }

    pub fn coeff(&self, label: &str) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in label order.
    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> + '_ {
        self.terms.iter().map(|(l, &c)| (l.as_str(), c))
    }

    pub fn support(&self) -> Vec<&str> {
        self.terms.keys().map(String::as_str).collect()
    }

    pub fn plus(&self, other: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (l, c) in other.terms() {
            out.add_term(l, c);
        }
        out
    }

    pub fn minus(&self, other: &Divisor) -> Divisor {
        self.plus(&other.scaled(-1))
    }

    pub fn scaled(&self, k: i64) -> Divisor {
        if k == 0 {
            return Divisor::zero();
        }
        Divisor {
            terms: self.terms.iter().map(|(l, &c)| (l.clone(), c * k)).collect(),
        }
    }

    /// Parses `2*C11 + E1 - F3`; `0` is the zero divisor.
    pub fn parse(s: &str) -> Result<Divisor, LatticeError> {
        let bad = || LatticeError::Parse(s.to_string());
        let words: Vec<&str> = s.split_whitespace().collect();
        let joins_words = words.windows(2).any(|w| {
            let (a, b) = (w[0].chars().last(), w[1].chars().next());
            a.is_some_and(|c| c.is_ascii_alphanumeric()) && b.is_some_and(|c| c.is_ascii_alphanumeric())
        });
        if joins_words {
            return Err(bad());
        }
        let compact: String = words.concat();
        if compact.is_empty() {
            return Err(bad());
        }
        if compact == "0" {
            return Ok(Divisor::zero());
        }
        let mut d = Divisor::zero();
        let mut rest = compact.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let sign = if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(bad());
                }
                rest = r;
                1
            } else if let Some(r) = rest.strip_prefix('-') {
                rest = r;
                -1
            } else if first {
                1
            } else {
                return Err(bad());
            };
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = &rest[..end];
            rest = &rest[end..];
            let (coef, label) = match term.split_once('*') {
                Some((c, l)) => (c.parse::<i64>().map_err(|_| bad())?, l),
                None => (1, term),
            };
            let valid = label
                .chars()
                .next()
                .is_some_and(|c| c.is_ascii_alphabetic())
                && label.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(bad());
            }
            d.add_term(label, sign * coef);
        }
        Ok(d)
    }

    /// Display with terms in the given label order.
    pub fn to_string_ordered(&self, order: &[String]) -> String {
        let mut keys: Vec<&String> = self.terms.keys().collect();
        keys.sort_by_key(|k| order.iter().position(|o| o == *k).unwrap_or(usize::MAX));
        format_terms(keys.into_iter().map(|k| (k.as_str(), self.terms[k])))
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a str, i64)>) -> String {
    let mut out = String::new();
    for (label, c) in terms {
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out.push_str(if c < 0 { " - " } else { " + " });
        }
        if c.abs() != 1 {
            out.push_str(&format!("{}*", c.abs()));
        }
        out.push_str(label);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let d = Divisor::parse("E1 + 2*C11 - F3").unwrap();
        assert_eq!(d.coeff("C11"), 2);
        assert_eq!(d.coeff("F3"), -1);
        assert_eq!(d.to_string(), "2*C11 + E1 - F3");
        assert_eq!(Divisor::parse(&d.to_string()).unwrap(), d);
        assert!(Divisor::parse("0").unwrap().is_zero());
        assert!(Divisor::parse("E1 - E1").unwrap().is_zero());
        assert_eq!(Divisor::zero().to_string(), "0");
    }

    #[test]
    fn malformed() {
        for bad in ["", "+E1", "E1 ++ F1", "2*", "x*E1", "E1 F1", "1E"] {
            assert!(Divisor::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn arithmetic() {
        let a = Divisor::from_terms(&[("A", 1), ("B", 2)]);
        let b = Divisor::from_terms(&[("B", -2), ("C", 1)]);
        assert_eq!(a.plus(&b), Divisor::from_terms(&[("A", 1), ("C", 1)]));
        assert_eq!(a.minus(&a), Divisor::zero());
        assert!(a.scaled(0).is_zero());
    }
}
