use std::collections::VecDeque;

use super::FgError;
use crate::lineaction::GroupWord;
use crate::perm::Permutation;

/// Orbit graph of the base point: cosets of the stabiliser, with the right
/// action of each generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    pub generators: Vec<String>,
    /// Orbit points in breadth-first order; coset `k` is `orbit[k]`.
    pub orbit: Vec<usize>,
    /// `action[k][g]` is the coset reached from `k` by generator `g`.
    pub action: Vec<Vec<usize>>,
    /// Schreier transversal: the representative word of each coset.
    pub transversal: Vec<GroupWord>,
}

impl CosetTable {
    /// Breadth-first over positive generator edges, generators in the given
    /// order, so the transversal is prefix-closed and deterministic.
    pub fn build(gens: &[(String, Permutation)], base: usize) -> Result<Self, FgError> {
        let (first, rest) = gens.split_first().ok_or(FgError::EmptyInput)?;
        let degree = first.1.degree();
        if rest.iter().any(|(_, g)| g.degree() != degree) {
            return Err(FgError::DegreeMismatch);
        }
        if base >= degree {
            return Err(FgError::BaseOutOfRange(base));
        }
        let mut index = vec![None; degree];
        let mut orbit = vec![base];
        let mut transversal = vec![GroupWord::empty()];
        index[base] = Some(0);
        let mut queue = VecDeque::from([base]);
        while let Some(pt) = queue.pop_front() {
            let k = index[pt].expect("queued points are indexed");
            for (id, g) in gens {
                let img = g.apply(pt);
                if index[img].is_none() {
                    index[img] = Some(orbit.len());
                    orbit.push(img);
                    transversal.push(transversal[k].concat(&GroupWord::generator(id)));
                    queue.push_back(img);
                }
            }
        }
        let action = orbit
            .iter()
            .map(|&pt| {
                gens.iter()
                    .map(|(_, g)| index[g.apply(pt)].expect("orbit is closed"))
                    .collect()
            })
            .collect();
        Ok(CosetTable {
            generators: gens.iter().map(|(id, _)| id.clone()).collect(),
            orbit,
            action,
            transversal,
        })
    }

    pub fn index(&self) -> usize {
        self.orbit.len()
    }
}

/// Nontrivial Schreier generators `r g (rep of r g)^-1` of the stabiliser of
/// `base`, in coset-then-generator order.
pub fn schreier_generators(gens: &[(String, Permutation)], base: usize) -> Result<Vec<GroupWord>, FgError> {
    let table = CosetTable::build(gens, base)?;
    let mut out: Vec<GroupWord> = Vec::new();
    for (k, rep) in table.transversal.iter().enumerate() {
        for (gi, id) in table.generators.iter().enumerate() {
            let target = &table.transversal[table.action[k][gi]];
            let u = rep.concat(&GroupWord::generator(id)).concat(&target.inverse());
            if !u.is_empty() && !out.contains(&u) {
                out.push(u);
            }
        }
    }
    Ok(out)
}

/// Image of a word under the generator assignment, acting on the right:
/// the word `g h` maps `i` to `h(g(i))`.
pub fn word_permutation(w: &GroupWord, gens: &[(String, Permutation)]) -> Result<Permutation, FgError> {
    let degree = gens.first().ok_or(FgError::EmptyInput)?.1.degree();
    let mut acc = Permutation::identity(degree);
    for (id, e) in w.letters() {
        let g = gens
            .iter()
            .find(|(name, _)| name == id)
            .map(|(_, g)| g)
            .ok_or_else(|| FgError::Parse(format!("unbound generator {id}")))?;
        acc = acc.then(&g.pow(*e));
    }
    Ok(acc)
}

/// Rank of an index-`n` subgroup of a free group of rank `r`: `1 + n(r-1)`.
pub fn nielsen_schreier_expected(rank: u64, index: u64) -> u64 {
    1 + index * (rank.saturating_sub(1))
}

/// Parses `a=(0 1); b=(0 2)(1 3)`. All permutations are extended to a
/// common degree, at least `min_degree`.
pub fn parse_generator_perms(s: &str, min_degree: usize) -> Result<Vec<(String, Permutation)>, FgError> {
    let bad = || FgError::Parse(s.to_string());
    let mut parsed = Vec::new();
    let mut degree = min_degree.max(1);
    for part in s.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (id, cycles) = part.split_once('=').ok_or_else(bad)?;
        let id = id.trim();
        let valid = id.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
            && id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid || parsed.iter().any(|(n, _)| n == id) {
            return Err(bad());
        }
        let cycles = Permutation::parse_cycles(cycles).map_err(|_| bad())?;
        if let Some(&m) = cycles.iter().flatten().max() {
            degree = degree.max(m + 1);
        }
        parsed.push((id.to_string(), cycles));
    }
    if parsed.is_empty() {
        return Err(FgError::EmptyInput);
    }
    parsed
        .into_iter()
        .map(|(id, cycles)| {
            let g = Permutation::from_cycles(degree, &cycles).map_err(|_| bad())?;
            Ok((id, g))
        })
        .collect()
}
