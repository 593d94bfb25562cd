use std::collections::BTreeMap;
use std::fmt;

use super::{f1, f2, AffineMap, LineError};

/// Freely reduced word in named generators: nonzero exponents, adjacent
/// letters on distinct generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupWord {
    letters: Vec<(String, i64)>,
}

impl GroupWord {
    /// Freely reduces the given syllables.
    pub fn new(syllables: Vec<(String, i64)>) -> Self {
        let mut letters: Vec<(String, i64)> = Vec::with_capacity(syllables.len());
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match letters.last_mut() {
                Some((last, le)) if *last == g => {
                    *le += e;
                    if *le == 0 {
                        letters.pop();
                    }
                }
                _ => letters.push((g, e)),
            }
        }
        GroupWord { letters }
    }

    pub fn empty() -> Self {
        GroupWord::default()
    }

    pub fn generator(id: &str) -> Self {
        GroupWord::new(vec![(id.to_string(), 1)])
    }

    pub fn letters(&self) -> &[(String, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Total number of generator occurrences, `sum |e|`.
    pub fn length(&self) -> u64 {
        self.letters.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord::new(self.letters.iter().chain(&other.letters).cloned().collect())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord::new(self.letters.iter().rev().map(|(g, e)| (g.clone(), -e)).collect())
    }

    /// Parses whitespace-separated tokens such as `f1^3 f2 f1^-3`; an empty
    /// string or `1` is the empty word.
    pub fn parse(s: &str) -> Result<Self, LineError> {
        let bad = || LineError::Parse(s.to_string());
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "1" {
            return Ok(GroupWord::empty());
        }
        let mut syllables = Vec::new();
        for tok in trimmed.split_whitespace() {
            let (id, exp) = match tok.split_once('^') {
                Some((id, e)) => (id, e.parse::<i64>().map_err(|_| bad())?),
                None => (tok, 1),
            };
            let valid = id.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(bad());
            }
            syllables.push((id.to_string(), exp));
        }
        Ok(GroupWord::new(syllables))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|(g, e)| if *e == 1 { g.clone() } else { format!("{g}^{e}") })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// `{f1: x -> t x, f2: x -> x + 1}`.
pub fn standard_generators(p: u64) -> BTreeMap<String, AffineMap> {
    BTreeMap::from([("f1".to_string(), f1(p)), ("f2".to_string(), f2(p))])
}

/// Composes the generator powers left to right, so `g h` evaluates to
/// `g ∘ h`. The characteristic of the empty word is taken from `dict`.
pub fn evaluate_word(w: &GroupWord, dict: &BTreeMap<String, AffineMap>) -> Result<AffineMap, LineError> {
    let mut acc: Option<AffineMap> = None;
    for (g, e) in w.letters() {
        let m = dict.get(g).ok_or_else(|| LineError::UnknownGenerator(g.clone()))?;
        let step = m.power(*e);
        acc = Some(match acc {
            None => step,
            Some(a) => a.compose(&step),
        });
    }
    match acc {
        Some(a) => Ok(a),
        None => dict
            .values()
            .next()
            .map(|m| AffineMap::identity(m.modulus()))
            .ok_or_else(|| LineError::UnknownGenerator(String::new())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::RatFunc;

    #[test]
    fn reduction() {
        let w = GroupWord::parse("f1^3 f1^-3 f2 f2").unwrap();
        assert_eq!(w.to_string(), "f2^2");
        assert!(GroupWord::parse("a b b^-1 a^-1").unwrap().is_empty());
        let w = GroupWord::parse("f1^3 f2 f1^-3").unwrap();
        assert_eq!(w.concat(&w.inverse()), GroupWord::empty());
        assert_eq!(w.length(), 7);
        for bad in ["f1^", "^2", "f1^x", "1a"] {
            assert!(GroupWord::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn evaluation() {
        let p = 3;
        let dict = standard_generators(p);
        let w = GroupWord::parse("f1 f2 f1^-1").unwrap();
        assert_eq!(evaluate_word(&w, &dict).unwrap(), AffineMap::translation(RatFunc::t(p)));
        assert!(evaluate_word(&GroupWord::empty(), &dict).unwrap().is_identity());
        assert!(evaluate_word(&GroupWord::parse("f2^3").unwrap(), &dict).unwrap().is_identity());
        assert_eq!(
            evaluate_word(&GroupWord::parse("f3").unwrap(), &dict),
            Err(LineError::UnknownGenerator("f3".into()))
        );
    }
}
