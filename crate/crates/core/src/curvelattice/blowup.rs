use std::fmt;

use serde::Serialize;

use super::{CurveConfig, Divisor, KummerOrigin, LatticeError, NamedPoint};

/// Where to blow up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointSpec {
    /// A recorded point, by id or alias.
    NamedPoint(String),
    /// A fresh point on the given curve, away from all named points.
    GenericOnCurve(String),
    /// A fresh point on no curve of the configuration.
    GenericOnSurface,
}

impl fmt::Display for PointSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointSpec::NamedPoint(id) => write!(f, "point {id}"),
            PointSpec::GenericOnCurve(c) => write!(f, "generic point on {c}"),
            PointSpec::GenericOnSurface => f.write_str("generic point"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlowupRecord {
    pub center: String,
    pub exceptional: String,
    /// Labels of the curves through the center.
    pub through: Vec<String>,
}

impl BlowupRecord {
    /// Total transform of a divisor from the surface before this blow-up.
    pub fn pullback(&self, d: &Divisor) -> Divisor {
        let m: i64 = self.through.iter().map(|c| d.coeff(c)).sum();
        d.plus(&Divisor::curve(&self.exceptional).scaled(m))
    }
}

fn sanitize(id: &str) -> String {
    id.chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect()
}

fn fresh_name(cfg: &CurveConfig, stem: &str) -> String {
    let taken = |name: &str| {
        cfg.point(name).is_ok()
            || cfg.index_of(&format!("E_{name}")).is_ok()
            || cfg.blowups().iter().any(|b| b.center == name)
    };
    (1..)
        .map(|k| if k == 1 { stem.to_string() } else { format!("{stem}{k}") })
        .find(|n| !taken(n))
        .expect("unbounded search")
}

/// Blows up one point. Curve labels now denote strict transforms; the new
/// exceptional curve is `E_<name>`, the canonical class becomes
/// `pi^*K + E`, and the center stops being a named point.
pub fn blow_up(cfg: &CurveConfig, at: &PointSpec) -> Result<CurveConfig, LatticeError> {
    let (center, through, coord, removed) = match at {
        PointSpec::NamedPoint(id) => {
            let pt = cfg.point(id)?;
            let name = cfg.alias_of(&pt.id).map(str::to_string).unwrap_or_else(|| pt.id.clone());
            (name, pt.curves.clone(), pt.coord_on_c, Some(pt.id.clone()))
        }
        PointSpec::GenericOnCurve(label) => {
            let idx = cfg.index_of(label)?;
            (fresh_name(cfg, "Q"), vec![idx], None, None)
        }
        PointSpec::GenericOnSurface => (fresh_name(cfg, "R"), Vec::new(), None, None),
    };
    let exceptional = format!("E_{}", sanitize(&center));
    if cfg.index_of(&exceptional).is_ok() {
        return Err(LatticeError::Malformed(format!("{exceptional} already exists")));
    }

    let n = cfg.len();
    let mut out = cfg.clone();
    for row in &mut out.gram {
        row.push(0);
    }
    out.gram.push(vec![0; n + 1]);
    out.gram[n][n] = -1;
    for &a in &through {
        out.gram[a][n] = 1;
        out.gram[n][a] = 1;
        for &b in &through {
            out.gram[a][b] -= 1;
        }
    }
    out.labels.push(exceptional.clone());

    if let Some(id) = &removed {
        out.points.retain(|p| &p.id != id);
        out.point_aliases.retain(|_, target| target != id);
    }
    let c_index = cfg.index_of("C").ok();
    for &a in &through {
        out.points.push(NamedPoint {
            id: format!("{}|{}", exceptional, cfg.labels[a]),
            curves: vec![a, n],
            coord_on_c: if Some(a) == c_index { coord } else { None },
        });
    }
    if let Some(origins) = &mut out.origins {
        origins.push(KummerOrigin::Exceptional);
    }

    let record = BlowupRecord {
        center,
        exceptional: exceptional.clone(),
        through: through.iter().map(|&a| cfg.labels[a].clone()).collect(),
    };
    out.canonical = record.pullback(&cfg.canonical).plus(&Divisor::curve(&exceptional));
    out.blowups.push(record);
    Ok(out)
}
