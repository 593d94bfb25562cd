use std::fmt;

use serde::{Serialize, Serializer};

use super::{intersect, CurveConfig, Divisor, LatticeError};

/// Kodaira type of a reducible fiber made of `-2` curves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KodairaType {
    /// `I_n`, a cycle of `n >= 3` curves.
    I(usize),
    /// `I*_n`, affine `D_{n+4}`.
    IStar(usize),
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaType {
    /// Number of components.
    pub fn components(&self) -> usize {
        match *self {
            KodairaType::I(n) => n,
            KodairaType::IStar(n) => n + 5,
            KodairaType::IVStar => 7,
            KodairaType::IIIStar => 8,
            KodairaType::IIStar => 9,
        }
    }
}

impl fmt::Display for KodairaType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KodairaType::I(n) => write!(f, "I_{n}"),
            KodairaType::IStar(n) => write!(f, "I*_{n}"),
            KodairaType::IVStar => f.write_str("IV*"),
            KodairaType::IIIStar => f.write_str("III*"),
            KodairaType::IIStar => f.write_str("II*"),
        }
    }
}

impl Serialize for KodairaType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Recognises `D` as a fiber of an elliptic fibration: an effective,
/// primitive, connected combination of `-2` curves meeting transversally
/// with `D . C = 0` for every component `C`, arranged as an affine
/// Dynkin diagram with its standard multiplicities.
pub fn classify_fiber(cfg: &CurveConfig, d: &Divisor) -> Result<KodairaType, LatticeError> {
    let coeffs = cfg.coefficients(d)?;
    if let Some(k) = coeffs.iter().position(|&c| c < 0) {
        return Err(LatticeError::InvalidDivisor(format!(
            "negative coefficient on {}",
            cfg.labels()[k]
        )));
    }
    let support: Vec<usize> = (0..coeffs.len()).filter(|&k| coeffs[k] > 0).collect();
    if support.is_empty() {
        return Err(LatticeError::NotAFiber);
    }
    let g = cfg.gram();
    let resolved = cfg.divisor_from_vec(&coeffs);
    for &k in &support {
        if g[k][k] != -2 {
            return Err(LatticeError::NotAFiber);
        }
        if intersect(cfg, &resolved, &Divisor::curve(&cfg.labels()[k]))? != 0 {
            return Err(LatticeError::NotAFiber);
        }
    }
    if support.iter().map(|&k| coeffs[k]).fold(0, gcd) != 1 {
        return Err(LatticeError::NotAFiber);
    }

    let n = support.len();
    let mut adj = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            match g[support[a]][support[b]] {
                0 => {}
                1 => adj[a].push(b),
                _ => return Err(LatticeError::NotAFiber),
            }
        }
    }
    let mult: Vec<i64> = support.iter().map(|&k| coeffs[k]).collect();
    if !connected(&adj) {
        return Err(LatticeError::NotAFiber);
    }
    recognise(&adj, &mult).ok_or(LatticeError::NotAFiber)
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Walks an arm from `center` through `first` to a leaf.
fn arm(adj: &[Vec<usize>], center: usize, first: usize) -> Option<Vec<usize>> {
    let mut path = vec![first];
    let (mut prev, mut cur) = (center, first);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return Some(path),
            [w] => {
                path.push(*w);
                (prev, cur) = (cur, *w);
            }
            _ => return None,
        }
    }
}

fn recognise(adj: &[Vec<usize>], mult: &[i64]) -> Option<KodairaType> {
    let n = adj.len();
    let edges = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let deg = |v: usize| adj[v].len();

    if edges == n {
        let ok = n >= 3 && (0..n).all(|v| deg(v) == 2) && mult.iter().all(|&m| m == 1);
        return ok.then_some(KodairaType::I(n));
    }
    if edges + 1 != n {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| deg(v) >= 3).collect();
    match branch.as_slice() {
        [c] if deg(*c) == 4 => {
            let ok = n == 5
                && mult[*c] == 2
                && adj[*c].iter().all(|&w| deg(w) == 1 && mult[w] == 1);
            ok.then_some(KodairaType::IStar(0))
        }
        [c] if deg(*c) == 3 => {
            let mut arms: Vec<Vec<usize>> = adj[*c]
                .iter()
                .map(|&w| arm(adj, *c, w))
                .collect::<Option<_>>()?;
            arms.sort_by_key(Vec::len);
            let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
            let (ty, center, expected): (KodairaType, i64, Vec<Vec<i64>>) = match lens.as_slice() {
                [2, 2, 2] => (KodairaType::IVStar, 3, vec![vec![2, 1]; 3]),
                [1, 3, 3] => (
                    KodairaType::IIIStar,
                    4,
                    vec![vec![2], vec![3, 2, 1], vec![3, 2, 1]],
                ),
                [1, 2, 5] => (
                    KodairaType::IIStar,
                    6,
                    vec![vec![3], vec![4, 2], vec![5, 4, 3, 2, 1]],
                ),
                _ => return None,
            };
            let ok = mult[*c] == center
                && arms.iter().zip(&expected).all(|(a, e)| {
                    a.iter().map(|&v| mult[v]).collect::<Vec<_>>() == *e
                });
            ok.then_some(ty)
        }
        [a, b] if deg(*a) == 3 && deg(*b) == 3 => {
            let ok = (0..n).all(|v| mult[v] == if deg(v) == 1 { 1 } else { 2 })
                && [*a, *b]
                    .iter()
                    .all(|&c| adj[c].iter().filter(|&&w| deg(w) == 1).count() == 2);
            ok.then_some(KodairaType::IStar(n - 5))
        }
        _ => None,
    }
}

/// Checks that curve `s` is a section of the fibration with fiber `fiber`:
/// a `-2` curve outside the fiber support meeting it exactly once.
pub fn check_section(cfg: &CurveConfig, fiber: &Divisor, s: &str) -> Result<bool, LatticeError> {
    let idx = cfg.index_of(s)?;
    let label = &cfg.labels()[idx];
    let resolved = cfg.resolve(fiber)?;
    if resolved.coeff(label) != 0 {
        return Ok(false);
    }
    let curve = Divisor::curve(label);
    Ok(cfg.gram()[idx][idx] == -2 && intersect(cfg, &resolved, &curve)? == 1)
}

#[cfg(test)]
mod tests {
    use super::super::{d1, d2, kummer_config};
    use super::*;

    fn dynkin(edges: &[(usize, usize)], n: usize) -> CurveConfig {
        let mut g = vec![vec![0; n]; n];
        for (k, row) in g.iter_mut().enumerate() {
            row[k] = -2;
        }
        for &(a, b) in edges {
            g[a][b] = 1;
            g[b][a] = 1;
        }
        CurveConfig::from_gram((0..n).map(|k| format!("R{k}")).collect(), g).unwrap()
    }

    fn div(cfg: &CurveConfig, m: &[i64]) -> Divisor {
        cfg.divisor_from_vec(m)
    }

    #[test]
    fn kummer_fibers() {
        let cfg = kummer_config();
        assert_eq!(classify_fiber(&cfg, &d1()).unwrap(), KodairaType::I(8));
        assert_eq!(classify_fiber(&cfg, &d2()).unwrap(), KodairaType::IVStar);
        assert!(check_section(&cfg, &d1(), "C31").unwrap());
        assert!(check_section(&cfg, &d1(), "C41").unwrap());
        assert!(check_section(&cfg, &d2(), "C21").unwrap());
        assert!(check_section(&cfg, &d2(), "C31").unwrap());
        assert!(!check_section(&cfg, &d1(), "C11").unwrap());
        assert!(!check_section(&cfg, &d1(), "E3").unwrap());
    }

    #[test]
    fn rejects_non_fibers() {
        let cfg = kummer_config();
        let c = |l: &str| Divisor::curve(l);
        assert_eq!(classify_fiber(&cfg, &c("E1")), Err(LatticeError::NotAFiber));
        assert_eq!(classify_fiber(&cfg, &d1().scaled(2)), Err(LatticeError::NotAFiber));
        assert!(matches!(
            classify_fiber(&cfg, &c("E1").scaled(-1)),
            Err(LatticeError::InvalidDivisor(_))
        ));
        assert_eq!(classify_fiber(&cfg, &Divisor::zero()), Err(LatticeError::NotAFiber));
        let broken = cfg.with_gram_entry("E1", "C11", 0).unwrap();
        assert_eq!(classify_fiber(&broken, &d1()), Err(LatticeError::NotAFiber));
    }

    #[test]
    fn affine_diagrams() {
        // affine D4
        let cfg = dynkin(&[(0, 1), (0, 2), (0, 3), (0, 4)], 5);
        assert_eq!(classify_fiber(&cfg, &div(&cfg, &[2, 1, 1, 1, 1])).unwrap(), KodairaType::IStar(0));
        // affine D6
        let cfg = dynkin(&[(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6)], 7);
        assert_eq!(
            classify_fiber(&cfg, &div(&cfg, &[1, 1, 2, 2, 2, 1, 1])).unwrap(),
            KodairaType::IStar(2)
        );
        // affine E7
        let cfg = dynkin(&[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (3, 7)], 8);
        assert_eq!(
            classify_fiber(&cfg, &div(&cfg, &[1, 2, 3, 4, 3, 2, 1, 2])).unwrap(),
            KodairaType::IIIStar
        );
        // affine E8
        let cfg = dynkin(
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (5, 8)],
            9,
        );
        assert_eq!(
            classify_fiber(&cfg, &div(&cfg, &[1, 2, 3, 4, 5, 6, 4, 2, 3])).unwrap(),
            KodairaType::IIStar
        );
        // triangle
        let cfg = dynkin(&[(0, 1), (1, 2), (2, 0)], 3);
        assert_eq!(classify_fiber(&cfg, &div(&cfg, &[1, 1, 1])).unwrap(), KodairaType::I(3));
    }

    #[test]
    fn display_names() {
        assert_eq!(KodairaType::I(8).to_string(), "I_8");
        assert_eq!(KodairaType::IStar(0).to_string(), "I*_0");
        assert_eq!(KodairaType::IVStar.to_string(), "IV*");
        assert_eq!(serde_json::to_string(&KodairaType::IIStar).unwrap(), "\"II*\"");
    }
}
