//! Triangle membership, orthogonality and complementedness.

use super::Graph;
use crate::error::{Error, Result};

/// Smallest common neighbor of `u` and `v`, if any.
pub fn common_neighbor(g: &Graph, u: usize, v: usize) -> Option<usize> {
    g.neighbor_set(u).intersection(g.neighbor_set(v)).next()
}

/// Every vertex lies on a triangle. On failure reports the first vertex
/// that does not.
pub fn is_triangulated(g: &Graph) -> (bool, Option<usize>) {
    let failing = (0..g.vertex_count())
        .find(|&v| !g.neighbors(v).iter().any(|&w| common_neighbor(g, v, w).is_some()));
    (failing.is_none(), failing)
}

/// Every edge lies on a triangle. On failure reports the first such edge.
pub fn is_hypertriangulated(g: &Graph) -> (bool, Option<(usize, usize)>) {
    let failing = g.edges().find(|&(u, v)| common_neighbor(g, u, v).is_none());
    (failing.is_none(), failing)
}

/// `u ⊥ v`: adjacent with no common neighbor.
pub fn orthogonal(g: &Graph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(g.has_edge(u, v) && common_neighbor(g, u, v).is_none())
}

/// Every vertex has an orthogonal partner. On failure reports the first
/// vertex without one.
pub fn is_complemented(g: &Graph) -> (bool, Option<usize>) {
    let failing = (0..g.vertex_count()).find(|&u| {
        !g.neighbors(u).iter().any(|&v| common_neighbor(g, u, v).is_none())
    });
    (failing.is_none(), failing)
}
