//! Line graphs: one vertex per edge of the base graph, adjacent when the
//! edges share an endpoint.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::model::ZeroSetModel;

/// Unordered pair of base vertices, stored with the smaller id first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeVertex {
    a: usize,
    b: usize,
}

impl EdgeVertex {
    /// Canonical `{u, v}`. Panics on `u == v`; use [`EdgeVertex::try_new`]
    /// for untrusted input.
    pub fn new(u: usize, v: usize) -> Self {
        Self::try_new(u, v).expect("edge endpoints must differ")
    }

    pub fn try_new(u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(Self { a: u.min(v), b: u.max(v) })
    }

    pub fn endpoints(&self) -> [usize; 2] {
        [self.a, self.b]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }
}

impl fmt::Display for EdgeVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.a, self.b)
    }
}

/// Line-graph label `"[S:k|T:l]"` from the endpoint labels, in
/// canonical (base id) order.
pub fn edge_label(base: &Graph, e: EdgeVertex) -> String {
    format!("[{}|{}]", base.label(e.a), base.label(e.b))
}

/// The endpoint sets intersect. Comparing an edge with itself is an error.
pub fn shares_endpoint(e1: EdgeVertex, e2: EdgeVertex) -> Result<bool> {
    if e1 == e2 {
        return Err(Error::IdenticalEdges(e1.to_string()));
    }
    Ok(e1.contains(e2.a) || e1.contains(e2.b))
}

#[derive(Debug, Clone)]
pub struct LineGraph {
    edges: Vec<EdgeVertex>,
    graph: Graph,
}

pub fn build_line_graph(base: &Graph) -> LineGraph {
    let edges: Vec<EdgeVertex> = base.edges().map(|(u, v)| EdgeVertex::new(u, v)).collect();
    let labels = edges.iter().map(|&e| edge_label(base, e)).collect();
    // incidence lists; two distinct edges of a simple graph share at most one endpoint
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); base.vertex_count()];
    for (i, e) in edges.iter().enumerate() {
        incident[e.a].push(i);
        incident[e.b].push(i);
    }
    let pairs = incident.iter().flat_map(|es| {
        es.iter().enumerate().flat_map(move |(i, &x)| es[i + 1..].iter().map(move |&y| (x, y)))
    });
    let graph = Graph::from_edges(labels, pairs).expect("incidence pairs are in range and loop-free");
    LineGraph { edges, graph }
}

impl LineGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn edges(&self) -> &[EdgeVertex] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> EdgeVertex {
        self.edges[id]
    }

    pub fn id_of(&self, e: EdgeVertex) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }
}

/// `pattern[i][j]` is true iff `Z(f_i) ∩ Z(g_j) ≠ ∅` where `e1 = [f_1, f_2]`
/// and `e2 = [g_1, g_2]` (endpoints in canonical order).
pub type CrossPattern = [[bool; 2]; 2];

pub fn cross_zero_pattern(model: &ZeroSetModel, e1: EdgeVertex, e2: EdgeVertex) -> Result<CrossPattern> {
    for e in [e1, e2] {
        let [u, v] = e.endpoints();
        if v >= model.vertices().len() || !model.graph().has_edge(u, v) {
            return Err(Error::NotModelEdge(e.to_string()));
        }
    }
    let f = e1.endpoints().map(|v| model.zero_set(v));
    let g = e2.endpoints().map(|v| model.zero_set(v));
    Ok([[f[0].meets(g[0]), f[0].meets(g[1])], [f[1].meets(g[0]), f[1].meets(g[1])]])
}

pub fn pattern_count(p: &CrossPattern) -> usize {
    p.iter().flatten().filter(|&&x| x).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_gamma, ModelConfig};

    fn complete(n: usize) -> Graph {
        Graph::unlabeled(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn triangle_line_graph_is_triangle() {
        let l = build_line_graph(&complete(3));
        assert_eq!(l.graph().vertex_count(), 3);
        assert_eq!(l.graph().edge_count(), 3);
    }

    #[test]
    fn path_line_graph_is_an_edge() {
        let p = Graph::unlabeled(3, [(0, 1), (1, 2)]).unwrap();
        let l = build_line_graph(&p);
        assert_eq!((l.graph().vertex_count(), l.graph().edge_count()), (2, 1));
        assert_eq!(l.graph().labels(), ["[0|1]", "[1|2]"]);
    }

    #[test]
    fn gamma_three_points_line_graph() {
        let model = build_gamma(&ModelConfig::new(3, 1, false)).unwrap();
        let l = build_line_graph(model.graph());
        assert_eq!(l.graph().vertex_count(), 9);
        // degrees 2,2,2,4,4,4: sum of C(deg, 2) = 3*1 + 3*6
        assert_eq!(l.graph().edge_count(), 21);
    }

    #[test]
    fn endpoint_sharing() {
        let (a, b, c, d) = (0, 1, 2, 3);
        assert!(shares_endpoint(EdgeVertex::new(a, b), EdgeVertex::new(b, c)).unwrap());
        assert!(!shares_endpoint(EdgeVertex::new(a, b), EdgeVertex::new(c, d)).unwrap());
        assert!(matches!(
            shares_endpoint(EdgeVertex::new(a, b), EdgeVertex::new(b, a)),
            Err(Error::IdenticalEdges(_))
        ));
        assert!(EdgeVertex::try_new(2, 2).is_err());
    }

    fn e(model: &ZeroSetModel, x: &str, y: &str) -> EdgeVertex {
        EdgeVertex::new(model.id_of_label(x).unwrap(), model.id_of_label(y).unwrap())
    }

    #[test]
    fn cross_patterns() {
        let model = build_gamma(&ModelConfig::new(3, 2, false)).unwrap();
        let p = cross_zero_pattern(&model, e(&model, "0:1", "0:2"), e(&model, "1:1", "1:2")).unwrap();
        assert_eq!(p, [[false, false], [false, false]]);
        let p = cross_zero_pattern(&model, e(&model, "0:1", "0,1:1"), e(&model, "1:1", "1:2")).unwrap();
        assert_eq!(p, [[false, false], [true, true]]);
        let p = cross_zero_pattern(&model, e(&model, "0:1", "0,1:1"), e(&model, "0,1:1", "1:1")).unwrap();
        // canonical order is by bitmask, so 1:1 precedes 0,1:1 in the second edge
        assert_eq!(p, [[false, true], [true, true]]);
        assert_eq!(pattern_count(&p), 3);
    }

    #[test]
    fn cross_pattern_rejects_non_edges() {
        let model = build_gamma(&ModelConfig::new(3, 1, false)).unwrap();
        let bad = e(&model, "0:1", "1:1");
        let good = e(&model, "0:1", "0,1:1");
        assert!(matches!(cross_zero_pattern(&model, bad, good), Err(Error::NotModelEdge(_))));
    }
}
