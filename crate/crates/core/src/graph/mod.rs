//! Immutable simple undirected graphs and the invariants computed on them.
//!
//! Every nontrivial algorithm here has an exhaustive counterpart in
//! [`naive`] that shares no code with it.

mod chordal;
mod cycles;
mod domination;
mod flow;
mod local;
mod metric;
pub mod naive;

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use chordal::{is_chordal, is_perfect_elimination, lex_bfs, ChordalWitness, Chordality};
pub use cycles::{girth, shortest_cycle, smallest_cycle_through_pair};
pub use domination::{dominates, domination_number, Domination, DEFAULT_MAX_DOMINATION};
pub use local::{
    common_neighbor, is_complemented, is_hypertriangulated, is_triangulated, orthogonal,
};
pub use metric::{
    all_eccentricities, bfs_distances, diameter, distance, eccentricity, radius, shortest_path,
};

/// Simple undirected graph on vertices `0..n`, with a label per vertex.
///
/// Adjacency is kept twice: sorted neighbor lists for traversal and bitset
/// rows for O(1) pair queries and fast common-neighborhood tests.
#[derive(Debug, Clone)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Self::from_rows(labels, rows))
    }

    /// Builds a graph whose edges are the pairs `i < j` accepted by `pred`.
    pub fn from_predicate<F>(labels: Vec<String>, pred: F) -> Self
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if pred(i, j) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Self::from_rows(labels, rows)
    }

    /// Graph with vertices labelled `0..n`.
    pub fn unlabeled<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    fn from_rows(labels: Vec<String>, rows: Vec<FixedBitSet>) -> Self {
        let adj: Vec<Vec<usize>> = rows.iter().map(|r| r.ones().collect()).collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Self { labels, adj, rows, edge_count }
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Map from label to vertex id, for bulk lookups.
    pub fn label_index(&self) -> HashMap<&str, usize> {
        self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn neighbor_set(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v))
        }
    }

    /// Subgraph induced by `keep`, relabelled in the order given.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        Graph::from_predicate(labels, |i, j| self.has_edge(keep[i], keep[j]))
    }

    pub fn labels_of(&self, vs: &[usize]) -> Vec<String> {
        vs.iter().map(|&v| self.labels[v].clone()).collect()
    }
}

/// Breadth-first partition of the vertex set; components are listed by
/// smallest member and each is sorted.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Graph distance, possibly infinite. Orders finite values before infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Distance::Finite(_))
    }
}

impl From<Option<usize>> for Distance {
    fn from(d: Option<usize>) -> Self {
        d.map_or(Distance::Infinite, Distance::Finite)
    }
}

impl PartialEq<usize> for Distance {
    fn eq(&self, other: &usize) -> bool {
        *self == Distance::Finite(*other)
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite values serialize as numbers, infinity as the string `"inf"`.
impl Serialize for Distance {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Distance::Finite(d) => s.serialize_u64(*d as u64),
            Distance::Infinite => s.serialize_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathWitness(pub Vec<usize>);

impl PathWitness {
    /// Consecutive vertices adjacent, all vertices distinct.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.0;
        !vs.is_empty()
            && vs.iter().all(|&v| v < g.vertex_count())
            && vs.windows(2).all(|w| g.has_edge(w[0], w[1]))
            && vs.iter().collect::<BTreeSet<_>>().len() == vs.len()
    }

    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }
}

/// A cycle listed without repeating its first vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness(pub Vec<usize>);

impl CycleWitness {
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.0;
        let k = vs.len();
        k >= 3
            && vs.iter().all(|&v| v < g.vertex_count())
            && (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
            && vs.iter().collect::<BTreeSet<_>>().len() == k
    }

    /// Valid cycle with no edge between non-consecutive vertices.
    pub fn is_chordless(&self, g: &Graph) -> bool {
        let vs = &self.0;
        let k = vs.len();
        self.validate(g)
            && (0..k).all(|i| {
                (i + 2..k).all(|j| (i == 0 && j == k - 1) || !g.has_edge(vs[i], vs[j]))
            })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn rejects_loops_and_bad_ids() {
        assert!(matches!(Graph::unlabeled(3, [(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(Graph::unlabeled(3, [(0, 3)]), Err(Error::UnknownVertex(3))));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::unlabeled(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&complete(4)).len(), 1);
        assert_eq!(connected_components(&edgeless(5)).len(), 5);
        let g = Graph::unlabeled(5, [(0, 3), (1, 2)]).unwrap();
        assert_eq!(connected_components(&g), vec![vec![0, 3], vec![1, 2], vec![4]]);
    }

    #[test]
    fn distance_serializes_inf_as_string() {
        assert_eq!(serde_json::to_string(&Distance::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Distance::Finite(2)).unwrap(), "2");
        assert!(Distance::Finite(100) < Distance::Infinite);
    }

    #[test]
    fn witness_validation() {
        let c4 = cycle(4);
        assert!(CycleWitness(vec![0, 1, 2, 3]).is_chordless(&c4));
        assert!(!CycleWitness(vec![0, 1, 3, 2]).validate(&c4));
        assert!(!CycleWitness(vec![0, 1, 2, 3]).is_chordless(&complete(4)));
        assert!(PathWitness(vec![0, 1, 2]).validate(&path(3)));
        assert!(!PathWitness(vec![0, 1, 0]).validate(&path(3)));
    }
}
