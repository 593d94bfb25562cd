use std::collections::BTreeMap;

use serde::Serialize;

use super::{AffineMap, LineError};
use crate::curvelattice::{check_section, classify_fiber, d1, d2, CurveConfig, Divisor, KodairaType};
use crate::exactfield::RatFunc;

/// A fiber together with the lattice certificates gathered for it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibrationRecord {
    pub p: u64,
    #[serde(serialize_with = "as_string")]
    pub fiber: Divisor,
    pub kodaira: Option<KodairaType>,
    pub zero_section: String,
    /// Section check result for every certified curve, the zero section
    /// included.
    pub sections: BTreeMap<String, bool>,
}

fn as_string<S: serde::Serializer>(d: &Divisor, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(d)
}

impl FibrationRecord {
    /// Runs fiber classification and section checks. Failures are recorded,
    /// not raised, so that later lookups can refuse them.
    pub fn certify(cfg: &CurveConfig, fiber: &Divisor, zero: &str, others: &[&str], p: u64) -> Self {
        let kodaira = classify_fiber(cfg, fiber).ok();
        let sections = std::iter::once(zero)
            .chain(others.iter().copied())
            .map(|s| (s.to_string(), check_section(cfg, fiber, s).unwrap_or(false)))
            .collect();
        FibrationRecord {
            p,
            fiber: cfg.resolve(fiber).unwrap_or_else(|_| fiber.clone()),
            kodaira,
            zero_section: zero.to_string(),
            sections,
        }
    }

    pub fn is_verified(&self) -> bool {
        self.kodaira.is_some() && self.sections.values().all(|&ok| ok)
    }
}

/// Action on `C` of translation by a section, for the two certified
/// fibrations: `(D1, C41)` is `x -> t x`, `(D2, C31)` is `x -> x + 1`, and
/// the zero section acts trivially.
pub fn mw_action(fib: &FibrationRecord, section: &str) -> Result<AffineMap, LineError> {
    if !fib.is_verified() || fib.sections.get(section) != Some(&true) {
        return Err(LineError::UnverifiedFibration);
    }
    let p = fib.p;
    if section == fib.zero_section {
        return Ok(AffineMap::identity(p));
    }
    let key = (fib.kodaira, fib.zero_section.as_str(), section);
    if fib.fiber == d1() && key == (Some(KodairaType::I(8)), "C31", "C41") {
        return AffineMap::scaling(RatFunc::t(p));
    }
    if fib.fiber == d2() && key == (Some(KodairaType::IVStar), "C21", "C31") {
        return Ok(AffineMap::translation(RatFunc::one(p)));
    }
    Err(LineError::UnknownAction(format!("{} with section {section}", fib.fiber)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelattice::kummer_config;
    use crate::lineaction::{f1, f2};

    #[test]
    fn table_entries() {
        let cfg = kummer_config();
        let p = 5;
        let r1 = FibrationRecord::certify(&cfg, &d1(), "C31", &["C41"], p);
        let r2 = FibrationRecord::certify(&cfg, &d2(), "C21", &["C31"], p);
        assert!(r1.is_verified() && r2.is_verified());
        assert_eq!(mw_action(&r1, "C41").unwrap(), f1(p));
        assert_eq!(mw_action(&r2, "C31").unwrap(), f2(p));
        assert!(mw_action(&r1, "C31").unwrap().is_identity());
        assert_eq!(mw_action(&r1, "E3"), Err(LineError::UnverifiedFibration));
    }

    #[test]
    fn refuses_broken_certificates() {
        let cfg = kummer_config().with_gram_entry("E1", "C11", 0).unwrap();
        let r1 = FibrationRecord::certify(&cfg, &d1(), "C31", &["C41"], 3);
        assert!(!r1.is_verified());
        assert_eq!(mw_action(&r1, "C41"), Err(LineError::UnverifiedFibration));
    }

    #[test]
    fn unknown_pairs() {
        let cfg = kummer_config();
        let r = FibrationRecord::certify(&cfg, &d1(), "C41", &["C31"], 3);
        assert!(r.is_verified());
        assert!(matches!(mw_action(&r, "C31"), Err(LineError::UnknownAction(_))));
    }
}
