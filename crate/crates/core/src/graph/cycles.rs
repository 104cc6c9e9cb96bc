use std::collections::VecDeque;

use rayon::prelude::*;

use super::flow::two_disjoint_paths;
use super::{CycleWitness, Distance, Graph};
use crate::error::{Error, Result};

/// Shortest cycle found by a BFS rooted at `root`: the best non-tree edge
/// `(x, y)` closes a walk of length `d(x) + d(y) + 1`. The minimum over all
/// roots is the girth, and at the minimum the walk is a simple cycle.
fn best_cycle_from(g: &Graph, root: usize) -> Option<(usize, usize, usize, Vec<usize>)> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut best: Option<(usize, usize, usize)> = None;
    while let Some(x) = queue.pop_front() {
        // every candidate closed at depth d has length at least 2d
        if 2 * dist[x] >= best.map_or(usize::MAX, |b| b.0) {
            break;
        }
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            } else if parent[x] != y {
                let len = dist[x] + dist[y] + 1;
                if best.map_or(true, |b| len < b.0) {
                    best = Some((len, x, y));
                }
            }
        }
    }
    best.map(|(len, x, y)| (len, x, y, parent))
}

fn climb(parent: &[usize], mut v: usize) -> Vec<usize> {
    let mut out = vec![v];
    while parent[v] != usize::MAX {
        v = parent[v];
        out.push(v);
    }
    out
}

/// A shortest cycle of `g`, or `None` for a forest.
pub fn shortest_cycle(g: &Graph) -> Option<CycleWitness> {
    let found = (0..g.vertex_count())
        .into_par_iter()
        .filter_map(|r| best_cycle_from(g, r).map(|b| (b.0, r, b)))
        .min_by_key(|&(len, r, _)| (len, r))?;
    let (_, _, (_, x, y, parent)) = found;
    // root..x followed by y..root
    let mut cycle = climb(&parent, x);
    cycle.reverse();
    let mut tail = climb(&parent, y);
    tail.pop();
    cycle.extend(tail);
    Some(CycleWitness(cycle))
}

/// Length of a shortest cycle; infinite for forests.
pub fn girth(g: &Graph) -> Distance {
    (0..g.vertex_count())
        .into_par_iter()
        .filter_map(|r| best_cycle_from(g, r).map(|b| b.0))
        .min()
        .into()
}

/// `c(u, v)`: the length of a smallest cycle through both `u` and `v`,
/// computed as the cheapest pair of internally disjoint `u`–`v` paths.
/// Infinite (and no witness) when no cycle passes through both.
pub fn smallest_cycle_through_pair(
    g: &Graph,
    u: usize,
    v: usize,
) -> Result<(Distance, Option<CycleWitness>)> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let Some([p, q]) = two_disjoint_paths(g, u, v) else {
        return Ok((Distance::Infinite, None));
    };
    let len = p.len() + q.len() - 2;
    // p runs u..v; walk q back from v to u, skipping both ends
    let mut cycle = p;
    cycle.extend(q[1..q.len() - 1].iter().rev());
    Ok((Distance::Finite(len), Some(CycleWitness(cycle))))
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::model::{build_gamma, ModelConfig};

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&complete(3)), Distance::Finite(3));
        assert_eq!(girth(&cycle(4)), Distance::Finite(4));
        assert_eq!(girth(&cycle(7)), Distance::Finite(7));
        assert_eq!(girth(&edgeless(2)), Distance::Infinite);
        assert_eq!(girth(&path(6)), Distance::Infinite);
    }

    #[test]
    fn gamma_girth_is_three_with_triangle_witness() {
        let model = build_gamma(&ModelConfig::new(3, 1, false)).unwrap();
        assert_eq!(girth(model.graph()), Distance::Finite(3));
        let w = shortest_cycle(model.graph()).unwrap();
        assert_eq!(w.len(), 3);
        assert!(w.validate(model.graph()));
        let labels = model.graph().labels_of(&w.0);
        assert_eq!(labels, vec!["0:1", "0,1:1", "0,2:1"]);
    }

    #[test]
    fn shortest_cycle_on_odd_and_even_cycles() {
        for k in 3..9 {
            let w = shortest_cycle(&cycle(k)).unwrap();
            assert_eq!(w.len(), k);
            assert!(w.validate(&cycle(k)));
        }
        assert!(shortest_cycle(&path(4)).is_none());
    }

    fn c(cfg: ModelConfig, a: &str, b: &str) -> (Distance, Option<CycleWitness>) {
        let model = build_gamma(&cfg).unwrap();
        let (u, v) = (model.id_of_label(a).unwrap(), model.id_of_label(b).unwrap());
        let (d, w) = smallest_cycle_through_pair(model.graph(), u, v).unwrap();
        if let Some(w) = &w {
            assert!(w.validate(model.graph()) && w.contains(u) && w.contains(v));
            assert_eq!(Distance::Finite(w.len()), d);
        }
        (d, w)
    }

    #[test]
    fn cycle_through_pair_examples() {
        let m2 = ModelConfig::new(3, 2, false);
        assert_eq!(c(m2, "0:1", "0:2").0, Distance::Finite(3));
        let (d, w) = c(m2, "0:1", "1:1");
        assert_eq!(d, Distance::Finite(4));
        // both middle vertices are copies of {0,1}
        let model = build_gamma(&m2).unwrap();
        let mut labels = model.graph().labels_of(&w.unwrap().0);
        labels.sort();
        assert_eq!(labels, vec!["0,1:1", "0,1:2", "0:1", "1:1"]);
        // one common-neighbor class and one copy: no 4-cycle
        assert_eq!(c(ModelConfig::new(3, 1, false), "0:1", "1:1").0, Distance::Finite(5));
    }

    #[test]
    fn pair_without_common_cycle() {
        let g = path(3);
        assert_eq!(smallest_cycle_through_pair(&g, 0, 2).unwrap(), (Distance::Infinite, None));
        assert!(matches!(smallest_cycle_through_pair(&g, 1, 1), Err(Error::SameVertex(1))));
        let (d, _) = smallest_cycle_through_pair(&cycle(4), 0, 2).unwrap();
        assert_eq!(d, Distance::Finite(4));
    }
}
