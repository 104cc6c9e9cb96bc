use fixedbitset::FixedBitSet;
use itertools::Itertools;
use serde::Serialize;

use super::Graph;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_DOMINATION: usize = 3;

/// Outcome of the bounded domination search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Domination {
    /// Smallest dominating set size and the first such set in
    /// lexicographic order.
    Found { size: usize, set: Vec<usize> },
    /// No dominating set of size at most `max_k` exists.
    Exceeds { max_k: usize },
}

impl Domination {
    pub fn size(&self) -> Option<usize> {
        match self {
            Domination::Found { size, .. } => Some(*size),
            Domination::Exceeds { .. } => None,
        }
    }
}

fn closed_neighborhood(g: &Graph, v: usize) -> FixedBitSet {
    let mut s = g.neighbor_set(v).clone();
    s.insert(v);
    s
}

/// Every vertex outside `set` has a neighbor inside it.
pub fn dominates(g: &Graph, set: &[usize]) -> Result<bool> {
    for &v in set {
        g.check_vertex(v)?;
    }
    let n = g.vertex_count();
    let mut covered = FixedBitSet::with_capacity(n);
    for &v in set {
        covered.union_with(&closed_neighborhood(g, v));
    }
    Ok(covered.count_ones(..) == n)
}

/// Searches sizes `1..=max_k` in order and returns the first dominating
/// set found.
pub fn domination_number(g: &Graph, max_k: usize) -> Result<Domination> {
    if max_k == 0 {
        return Err(Error::InvalidConfig("max_k must be at least 1".into()));
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Domination::Found { size: 0, set: Vec::new() });
    }
    let closed: Vec<FixedBitSet> = (0..n).map(|v| closed_neighborhood(g, v)).collect();
    for k in 1..=max_k.min(n) {
        for combo in (0..n).combinations(k) {
            let mut covered = closed[combo[0]].clone();
            for &v in &combo[1..] {
                covered.union_with(&closed[v]);
            }
            if covered.count_ones(..) == n {
                return Ok(Domination::Found { size: k, set: combo });
            }
        }
    }
    Ok(Domination::Exceeds { max_k })
}
