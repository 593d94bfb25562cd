//! Configurations of smooth rational curves on a surface, tracked through
//! their integer intersection (Gram) matrix, named incidence points and the
//! canonical divisor.
//!
//! Everything here works with divisors as formal sums of curve labels; no
//! linear-equivalence quotient is ever taken.

mod blowup;
mod divisor;
mod fiber;
mod kummer;
mod rank;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::exactfield::{Fp, RatFunc};

pub use blowup::{blow_up, BlowupRecord, PointSpec};
pub use divisor::Divisor;
pub use fiber::{check_section, classify_fiber, KodairaType};
pub use kummer::{
    d1, d2, induced_class_action, kummer_config, theta_class_action, unique_fixed_component_through,
    KummerOrigin,
};
pub use rank::{gram_rank, rank_mod_prime};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("label {0:?} does not belong to this configuration")]
    ConfigMismatch(String),
    #[error("odd self-intersection {0} on a surface with trivial canonical class")]
    LatticeParityError(i64),
    #[error("operation requires the unblown K3 configuration")]
    UnsupportedSurface,
    #[error("invalid divisor: {0}")]
    InvalidDivisor(String),
    #[error("divisor is not a fiber")]
    NotAFiber,
    #[error("no point named {0:?}")]
    NoSuchPoint(String),
    #[error("{count} components of the fixed locus pass through {point:?}")]
    NotUnique { point: String, count: usize },
    #[error("configuration carries no Kummer structure")]
    NotKummer,
    #[error("malformed configuration: {0}")]
    Malformed(String),
    #[error("cannot parse divisor {0:?}")]
    Parse(String),
}

/// Affine coordinate of a point on `C = E1`, as a monomial `c * t^e` or the
/// point at infinity. Independent of the characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coord {
    Infinity,
    Monomial { coeff: i64, exp: i64 },
}

impl Coord {
    pub const ZERO: Coord = Coord::Monomial { coeff: 0, exp: 0 };
    pub const ONE: Coord = Coord::Monomial { coeff: 1, exp: 0 };
    pub const T: Coord = Coord::Monomial { coeff: 1, exp: 1 };

    /// Value in `F_p(t)`; `None` for infinity.
    pub fn to_ratfunc(&self, p: u64) -> Option<RatFunc> {
        match *self {
            Coord::Infinity => None,
            Coord::Monomial { coeff, exp } => Some(RatFunc::monomial(Fp::new(coeff, p), exp)),
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Coord::Infinity => f.write_str("inf"),
            Coord::Monomial { coeff: 0, .. } => f.write_str("0"),
            Coord::Monomial { coeff, exp: 0 } => write!(f, "{coeff}"),
            Coord::Monomial { coeff: 1, exp: 1 } => f.write_str("t"),
            Coord::Monomial { coeff, exp } => write!(f, "{coeff}*t^{exp}"),
        }
    }
}

/// A named point together with the curves passing through it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedPoint {
    pub id: String,
    pub curves: Vec<usize>,
    /// Coordinate on `C`, for points lying on it.
    pub coord_on_c: Option<Coord>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveConfig {
    labels: Vec<String>,
    label_aliases: BTreeMap<String, String>,
    gram: Vec<Vec<i64>>,
    points: Vec<NamedPoint>,
    point_aliases: BTreeMap<String, String>,
    canonical: Divisor,
    fixed_locus: BTreeSet<String>,
    blowups: Vec<BlowupRecord>,
    origins: Option<Vec<KummerOrigin>>,
}

impl CurveConfig {
    /// A bare configuration from labels and a symmetric Gram matrix, with
    /// trivial canonical class and no named points.
    pub fn from_gram(labels: Vec<String>, gram: Vec<Vec<i64>>) -> Result<Self, LatticeError> {
        let n = labels.len();
        if gram.len() != n || gram.iter().any(|row| row.len() != n) {
            return Err(LatticeError::Malformed("Gram matrix shape".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(LatticeError::Malformed(format!(
                        "asymmetric entry ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        let distinct: BTreeSet<&String> = labels.iter().collect();
        if distinct.len() != n {
            return Err(LatticeError::Malformed("duplicate labels".into()));
        }
        Ok(CurveConfig {
            labels,
            label_aliases: BTreeMap::new(),
            gram,
            points: Vec::new(),
            point_aliases: BTreeMap::new(),
            canonical: Divisor::zero(),
            fixed_locus: BTreeSet::new(),
            blowups: Vec::new(),
            origins: None,
        })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn points(&self) -> &[NamedPoint] {
        &self.points
    }

    pub fn fixed_locus(&self) -> &BTreeSet<String> {
        &self.fixed_locus
    }

    pub fn blowups(&self) -> &[BlowupRecord] {
        &self.blowups
    }

    pub fn origins(&self) -> Option<&[KummerOrigin]> {
        self.origins.as_deref()
    }

    /// Canonical divisor as tracked through blow-ups.
    pub fn canonical(&self) -> &Divisor {
        &self.canonical
    }

    /// The unblown surface with trivial canonical class.
    pub fn is_k3(&self) -> bool {
        self.blowups.is_empty() && self.canonical.is_zero()
    }

    /// Index of a label, resolving aliases such as `C` for `E1`.
    pub fn index_of(&self, label: &str) -> Result<usize, LatticeError> {
        let name = self
            .label_aliases
            .get(label)
            .map(String::as_str)
            .unwrap_or(label);
        self.labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| LatticeError::ConfigMismatch(label.to_string()))
    }

    pub fn entry(&self, a: &str, b: &str) -> Result<i64, LatticeError> {
        Ok(self.gram[self.index_of(a)?][self.index_of(b)?])
    }

    /// Rewrites a divisor onto canonical label names.
    pub fn resolve(&self, d: &Divisor) -> Result<Divisor, LatticeError> {
        let mut out = Divisor::zero();
        for (label, c) in d.terms() {
            let idx = self.index_of(label)?;
            out = out.plus(&Divisor::curve(&self.labels[idx]).scaled(c));
        }
        Ok(out)
    }

    /// Coefficient vector over the labels, in label order.
    pub fn coefficients(&self, d: &Divisor) -> Result<Vec<i64>, LatticeError> {
        let mut v = vec![0; self.len()];
        for (label, c) in d.terms() {
            v[self.index_of(label)?] += c;
        }
        Ok(v)
    }

    pub fn divisor_from_vec(&self, coeffs: &[i64]) -> Divisor {
        let mut d = Divisor::zero();
        for (label, &c) in self.labels.iter().zip(coeffs) {
            d = d.plus(&Divisor::curve(label).scaled(c));
        }
        d
    }

    /// Parses a divisor and checks every label against this configuration.
    pub fn parse_divisor(&self, s: &str) -> Result<Divisor, LatticeError> {
        self.resolve(&Divisor::parse(s)?)
    }

    pub fn format_divisor(&self, d: &Divisor) -> String {
        match self.coefficients(d) {
            Ok(v) => self.divisor_from_vec(&v).to_string_ordered(&self.labels),
            Err(_) => d.to_string(),
        }
    }

    /// Looks up a point by id or alias.
    pub fn point(&self, id: &str) -> Result<&NamedPoint, LatticeError> {
        let name = self.point_aliases.get(id).map(String::as_str).unwrap_or(id);
        self.points
            .iter()
            .find(|p| p.id == name)
            .ok_or_else(|| LatticeError::NoSuchPoint(id.to_string()))
    }

    /// Alias of a point id, if it has one (e.g. `P`).
    pub fn alias_of(&self, id: &str) -> Option<&str> {
        self.point_aliases
            .iter()
            .find(|(_, target)| target.as_str() == id)
            .map(|(alias, _)| alias.as_str())
    }

    /// The named point where two curves meet, if recorded.
    pub fn point_between(&self, a: &str, b: &str) -> Result<&NamedPoint, LatticeError> {
        let (ia, ib) = (self.index_of(a)?, self.index_of(b)?);
        self.points
            .iter()
            .find(|p| p.curves.contains(&ia) && p.curves.contains(&ib))
            .ok_or_else(|| LatticeError::NoSuchPoint(format!("{a}|{b}")))
    }

    /// Copy with one symmetric Gram entry overwritten.
    pub fn with_gram_entry(&self, a: &str, b: &str, value: i64) -> Result<Self, LatticeError> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        let mut out = self.clone();
        out.gram[i][j] = value;
        out.gram[j][i] = value;
        Ok(out)
    }

    /// Same configuration with labels reordered: new position `k` holds the
    /// old label `order[k]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self, LatticeError> {
        let n = self.len();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
            return Err(LatticeError::Malformed("not a permutation of the labels".into()));
        }
        let mut inverse = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            inverse[old] = new;
        }
        let mut out = self.clone();
        out.labels = order.iter().map(|&i| self.labels[i].clone()).collect();
        out.gram = order
            .iter()
            .map(|&i| order.iter().map(|&j| self.gram[i][j]).collect())
            .collect();
        for pt in &mut out.points {
            pt.curves = pt.curves.iter().map(|&c| inverse[c]).collect();
            pt.curves.sort_unstable();
        }
        if let Some(origins) = &self.origins {
            out.origins = Some(order.iter().map(|&i| origins[i]).collect());
        }
        Ok(out)
    }

    /// Intersection-matrix export: a header row of labels, then one row per
    /// label.
    pub fn gram_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("label");
        for l in &self.labels {
            out.push(',');
            out.push_str(l);
        }
        out.push('\n');
        for (l, row) in self.labels.iter().zip(&self.gram) {
            out.push_str(l);
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// `D . D'` through the Gram matrix.
pub fn intersect(cfg: &CurveConfig, a: &Divisor, b: &Divisor) -> Result<i64, LatticeError> {
    let va = cfg.coefficients(a)?;
    let vb = cfg.coefficients(b)?;
    let mut total = 0i64;
    for (i, &x) in va.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in vb.iter().enumerate() {
            total += x * y * cfg.gram[i][j];
        }
    }
    Ok(total)
}

/// Euler characteristic `chi(L) = 2 + L^2 / 2` on the K3 configuration.
pub fn rr_chi(cfg: &CurveConfig, d: &Divisor) -> Result<i64, LatticeError> {
    if !cfg.is_k3() {
        return Err(LatticeError::UnsupportedSurface);
    }
    let sq = intersect(cfg, d, d)?;
    if sq % 2 != 0 {
        return Err(LatticeError::LatticeParityError(sq));
    }
    Ok(2 + sq / 2)
}

pub fn canonical_class(cfg: &CurveConfig) -> Divisor {
    cfg.canonical.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_curve() -> CurveConfig {
        CurveConfig::from_gram(vec!["R".into()], vec![vec![-2]]).unwrap()
    }

    #[test]
    fn kummer_incidences() {
        let cfg = kummer_config();
        assert_eq!(cfg.len(), 24);
        assert_eq!(cfg.entry("C11", "F1").unwrap(), 1);
        assert_eq!(cfg.entry("C11", "E1").unwrap(), 1);
        assert_eq!(cfg.entry("C23", "E3").unwrap(), 1);
        assert_eq!(cfg.entry("C23", "F2").unwrap(), 1);
        assert_eq!(cfg.entry("C23", "E2").unwrap(), 0);
        assert_eq!(cfg.entry("E1", "E2").unwrap(), 0);
        assert_eq!(cfg.entry("E1", "F3").unwrap(), 0);
        assert_eq!(cfg.entry("C", "C").unwrap(), -2);
        assert_eq!(cfg.point("P").unwrap().coord_on_c, Some(Coord::Infinity));
        assert_eq!(cfg.point_between("C", "C21").unwrap().coord_on_c, Some(Coord::ZERO));
        assert_eq!(cfg.point_between("C", "C31").unwrap().coord_on_c, Some(Coord::ONE));
        assert_eq!(cfg.point_between("C", "C41").unwrap().coord_on_c, Some(Coord::T));
        assert!(canonical_class(&cfg).is_zero());
    }

    #[test]
    fn intersections_with_d1_d2() {
        let cfg = kummer_config();
        let (d1, d2) = (d1(), d2());
        let c = |l: &str| Divisor::curve(l);
        assert_eq!(intersect(&cfg, &d1, &c("C31")).unwrap(), 1);
        assert_eq!(intersect(&cfg, &d1, &c("C41")).unwrap(), 1);
        assert_eq!(intersect(&cfg, &d2, &c("C21")).unwrap(), 1);
        assert_eq!(intersect(&cfg, &d2, &c("C31")).unwrap(), 1);
        assert_eq!(intersect(&cfg, &d1, &d1).unwrap(), 0);
        assert_eq!(intersect(&cfg, &d2, &d2).unwrap(), 0);
        assert_eq!(
            intersect(&cfg, &d1, &c("Z9")),
            Err(LatticeError::ConfigMismatch("Z9".into()))
        );
    }

    #[test]
    fn riemann_roch() {
        let cfg = kummer_config();
        assert_eq!(rr_chi(&cfg, &Divisor::zero()).unwrap(), 2);
        assert_eq!(rr_chi(&cfg, &Divisor::curve("C")).unwrap(), 1);
        assert_eq!(rr_chi(&cfg, &d1()).unwrap(), 2);
        let y1 = blow_up(&cfg, &PointSpec::NamedPoint("P".into())).unwrap();
        assert_eq!(
            rr_chi(&y1, &Divisor::zero()),
            Err(LatticeError::UnsupportedSurface)
        );
        let odd = cfg.with_gram_entry("E1", "E1", -1).unwrap();
        assert_eq!(
            rr_chi(&odd, &Divisor::curve("E1")),
            Err(LatticeError::LatticeParityError(-1))
        );
    }

    #[test]
    fn ranks() {
        assert_eq!(gram_rank(&kummer_config()), 18);
        assert_eq!(gram_rank(&single_curve()), 1);
        let y1 = blow_up(&kummer_config(), &PointSpec::NamedPoint("P".into())).unwrap();
        assert_eq!(gram_rank(&y1), 19);
    }

    #[test]
    fn from_gram_validation() {
        assert!(CurveConfig::from_gram(
            vec!["a".into(), "b".into()],
            vec![vec![-2, 1], vec![0, -2]]
        )
        .is_err());
        assert!(CurveConfig::from_gram(vec!["a".into(), "a".into()], vec![vec![-2, 0], vec![0, -2]]).is_err());
    }

    #[test]
    fn csv_export() {
        let csv = kummer_config().gram_csv();
        let mut lines = csv.lines();
        let header = lines.next().unwrap();
        assert!(header.starts_with("label,E1,E2,E3,E4,F1"));
        assert_eq!(header.split(',').count(), 25);
        let first = lines.next().unwrap();
        assert!(first.starts_with("E1,-2,0,0,0,0,0,0,0,1,0,0,0,1"));
        assert_eq!(csv.lines().count(), 25);
    }

    #[test]
    fn reordering_preserves_pairings() {
        let cfg = kummer_config();
        let order: Vec<usize> = (0..24).rev().collect();
        let r = cfg.reordered(&order).unwrap();
        for a in cfg.labels() {
            for b in cfg.labels() {
                assert_eq!(cfg.entry(a, b).unwrap(), r.entry(a, b).unwrap());
            }
        }
        assert!(cfg.reordered(&[0, 0]).is_err());
    }
}
