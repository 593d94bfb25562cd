use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Coord, CurveConfig, Divisor, LatticeError, NamedPoint};
use crate::ellcurve::LegendreCurve;
use crate::exactfield::RatFunc;
use crate::perm::Permutation;

/// Where a curve of the Kummer configuration comes from, in terms of
/// 2-torsion indices `0..4` on the two factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KummerOrigin {
    /// `E_j`, indexed by a 2-torsion point of the first factor.
    E(usize),
    /// `F_i`, indexed by a 2-torsion point of the second factor.
    F(usize),
    /// `C_ij`, meeting `F_i` and `E_j`.
    C(usize, usize),
    /// Exceptional curve of a blow-up at a point fixed by the action.
    Exceptional,
}

/// Coordinate on `C = E1` of the point where `C_i1` meets it.
const C_COORDS: [Coord; 4] = [Coord::Infinity, Coord::ZERO, Coord::ONE, Coord::T];

/// The 24-curve configuration `E1..E4, F1..F4, C11..C44`: every curve has
/// self-intersection `-2` and `C_ij` meets exactly `F_i` and `E_j`, once.
pub fn kummer_config() -> CurveConfig {
    let mut labels = Vec::with_capacity(24);
    let mut origins = Vec::with_capacity(24);
    for j in 0..4 {
        labels.push(format!("E{}", j + 1));
        origins.push(KummerOrigin::E(j));
    }
    for i in 0..4 {
        labels.push(format!("F{}", i + 1));
        origins.push(KummerOrigin::F(i));
    }
    for i in 0..4 {
        for j in 0..4 {
            labels.push(format!("C{}{}", i + 1, j + 1));
            origins.push(KummerOrigin::C(i, j));
        }
    }
    let n = labels.len();
    let mut gram = vec![vec![0i64; n]; n];
    let mut points = Vec::new();
    for (k, row) in gram.iter_mut().enumerate() {
        row[k] = -2;
    }
    for i in 0..4 {
        for j in 0..4 {
            let c = 8 + 4 * i + j;
            let (e, f) = (j, 4 + i);
            for other in [e, f] {
                gram[c][other] = 1;
                gram[other][c] = 1;
            }
            points.push(NamedPoint {
                id: format!("{}|{}", labels[e], labels[c]),
                curves: vec![e, c],
                coord_on_c: (j == 0).then_some(C_COORDS[i]),
            });
            points.push(NamedPoint {
                id: format!("{}|{}", labels[f], labels[c]),
                curves: vec![f, c],
                coord_on_c: None,
            });
        }
    }
    let mut cfg = CurveConfig::from_gram(labels.clone(), gram).expect("symmetric by construction");
    cfg.points = points;
    cfg.label_aliases = BTreeMap::from([("C".to_string(), "E1".to_string())]);
    cfg.point_aliases = BTreeMap::from([("P".to_string(), "E1|C11".to_string())]);
    cfg.fixed_locus = labels[..8].iter().cloned().collect::<BTreeSet<_>>();
    cfg.origins = Some(origins);
    cfg
}

/// `E1 + C11 + F1 + C12 + E2 + C22 + F2 + C21`.
pub fn d1() -> Divisor {
    Divisor::from_terms(&[
        ("E1", 1),
        ("C11", 1),
        ("F1", 1),
        ("C12", 1),
        ("E2", 1),
        ("C22", 1),
        ("F2", 1),
        ("C21", 1),
    ])
}

/// `E1 + 2C11 + E2 + 2C12 + E3 + 2C13 + 3F1`.
pub fn d2() -> Divisor {
    Divisor::from_terms(&[
        ("E1", 1),
        ("C11", 2),
        ("E2", 1),
        ("C12", 2),
        ("E3", 1),
        ("C13", 2),
        ("F1", 3),
    ])
}

/// The permutation of labels induced by an automorphism of the product
/// acting on the 2-torsion of the two factors by `on_e` and `on_f`.
pub fn induced_class_action(
    cfg: &CurveConfig,
    on_e: &Permutation,
    on_f: &Permutation,
) -> Result<Permutation, LatticeError> {
    let origins = cfg.origins().ok_or(LatticeError::NotKummer)?;
    if on_e.degree() != 4 || on_f.degree() != 4 {
        return Err(LatticeError::Malformed("2-torsion permutations have degree 4".into()));
    }
    let images = origins
        .iter()
        .enumerate()
        .map(|(k, origin)| {
            let target = match *origin {
                KummerOrigin::E(j) => KummerOrigin::E(on_e.apply(j)),
                KummerOrigin::F(i) => KummerOrigin::F(on_f.apply(i)),
                KummerOrigin::C(i, j) => KummerOrigin::C(on_f.apply(i), on_e.apply(j)),
                KummerOrigin::Exceptional => return Ok(k),
            };
            origins
                .iter()
                .position(|o| *o == target)
                .ok_or_else(|| LatticeError::Malformed(format!("no curve with origin {target:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Permutation::from_images(images).map_err(|e| LatticeError::Malformed(e.to_string()))
}

/// How `-1` permutes `{O, (0,0), (1,0), (t,0)}` on `y^2 = x(x-1)(x-t)`
/// over `F_p(t)`.
pub fn two_torsion_negation(p: u64) -> Result<Permutation, LatticeError> {
    let curve = LegendreCurve::new(RatFunc::t(p)).map_err(|e| LatticeError::Malformed(e.to_string()))?;
    let pts = curve.two_torsion();
    let images = pts
        .iter()
        .map(|q| {
            let neg = curve.negate(q).map_err(|e| LatticeError::Malformed(e.to_string()))?;
            Ok(pts.iter().position(|r| *r == neg).expect("2-torsion is closed under negation"))
        })
        .collect::<Result<Vec<_>, LatticeError>>()?;
    Permutation::from_images(images).map_err(|e| LatticeError::Malformed(e.to_string()))
}

/// Action on labels of `(1_E, -1_F)`.
pub fn theta_class_action(cfg: &CurveConfig, p: u64) -> Result<Permutation, LatticeError> {
    induced_class_action(cfg, &Permutation::identity(4), &two_torsion_negation(p)?)
}

/// The single component of the fixed locus through a named point.
pub fn unique_fixed_component_through(cfg: &CurveConfig, point: &str) -> Result<String, LatticeError> {
    let pt = cfg.point(point)?;
    let through: Vec<&String> = pt
        .curves
        .iter()
        .map(|&c| &cfg.labels()[c])
        .filter(|l| cfg.fixed_locus().contains(*l))
        .collect();
    match through.as_slice() {
        [only] => Ok((*only).clone()),
        _ => Err(LatticeError::NotUnique {
            point: point.to_string(),
            count: through.len(),
        }),
    }
}
