//! Chordality by lexicographic breadth-first search.
//!
//! The reverse of a Lex-BFS visit order is a perfect elimination ordering
//! exactly when the graph is chordal. When the test fails we certify the
//! answer with a chordless cycle: for a vertex `v` with two non-adjacent
//! neighbors `p` and `w`, a shortest `p`–`w` path avoiding the rest of
//! `N[v]` closes an induced cycle of length at least four.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use super::{CycleWitness, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChordalWitness {
    /// Elimination order: each vertex's later neighbors form a clique.
    PerfectElimination(Vec<usize>),
    ChordlessCycle(CycleWitness),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chordality {
    pub chordal: bool,
    pub witness: ChordalWitness,
}

/// Lex-BFS visit order by partition refinement. Starts from vertex 0 and
/// breaks ties by vertex id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut classes: VecDeque<Vec<usize>> = VecDeque::new();
    if n > 0 {
        classes.push_back((0..n).collect());
    }
    let mut order = Vec::with_capacity(n);
    while let Some(mut first) = classes.pop_front() {
        let v = first.remove(0);
        if !first.is_empty() {
            classes.push_front(first);
        }
        order.push(v);
        let row = g.neighbor_set(v);
        let mut refined = VecDeque::with_capacity(classes.len() + 1);
        for class in classes.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|&u| row.contains(u));
            if !hit.is_empty() {
                refined.push_back(hit);
            }
            if !miss.is_empty() {
                refined.push_back(miss);
            }
        }
        classes = refined;
    }
    order
}

/// First violation of the elimination property, as `(v, p, w)` with `p`, `w`
/// later neighbors of `v` that are not adjacent.
fn peo_violation(g: &Graph, elimination: &[usize]) -> Option<(usize, usize, usize)> {
    let n = g.vertex_count();
    let mut pos = vec![0; n];
    for (i, &v) in elimination.iter().enumerate() {
        pos[v] = i;
    }
    for &v in elimination {
        let later: Vec<usize> =
            g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&u| u != parent && !g.has_edge(parent, u)) {
            return Some((v, parent, w));
        }
    }
    None
}

/// Independent check that every vertex's later neighbors are pairwise
/// adjacent.
pub fn is_perfect_elimination(g: &Graph, elimination: &[usize]) -> bool {
    let n = g.vertex_count();
    if elimination.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in elimination.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    elimination.iter().all(|&v| {
        let later: Vec<usize> =
            g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        super::is_clique(g, &later)
    })
}

/// Shortest `p`–`w` path whose interior avoids `N[v]`; with `p`, `w`
/// non-adjacent neighbors of `v` this closes a chordless cycle through `v`.
fn chordless_cycle_at(g: &Graph, v: usize, p: usize, w: usize) -> Option<CycleWitness> {
    let n = g.vertex_count();
    let mut blocked: FixedBitSet = g.neighbor_set(v).clone();
    blocked.insert(v);
    blocked.set(p, false);
    blocked.set(w, false);
    let mut parent = vec![usize::MAX; n];
    let mut seen = blocked;
    seen.insert(p);
    let mut queue = VecDeque::from([p]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbors(x) {
            if !seen.contains(y) {
                seen.insert(y);
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[w] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![w];
    let mut cur = w;
    while cur != p {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    cycle.extend(path);
    Some(CycleWitness(cycle))
}

pub fn is_chordal(g: &Graph) -> Chordality {
    let mut elimination = lex_bfs(g);
    elimination.reverse();
    let Some((v, p, w)) = peo_violation(g, &elimination) else {
        return Chordality { chordal: true, witness: ChordalWitness::PerfectElimination(elimination) };
    };
    let cycle = chordless_cycle_at(g, v, p, w).or_else(|| {
        // Complete search: some vertex of any chordless cycle sees its two
        // cycle neighbors this way.
        (0..g.vertex_count()).find_map(|x| {
            let ns = g.neighbors(x);
            ns.iter().enumerate().find_map(|(i, &a)| {
                ns[i + 1..]
                    .iter()
                    .filter(|&&b| !g.has_edge(a, b))
                    .find_map(|&b| chordless_cycle_at(g, x, a, b))
            })
        })
    });
    let cycle = cycle.expect("a failed elimination test implies a chordless cycle");
    Chordality { chordal: false, witness: ChordalWitness::ChordlessCycle(cycle) }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::model::{build_gamma, ModelConfig};

    fn assert_certified(g: &Graph, expect: bool) -> Chordality {
        let c = is_chordal(g);
        assert_eq!(c.chordal, expect);
        match &c.witness {
            ChordalWitness::PerfectElimination(o) => assert!(is_perfect_elimination(g, o)),
            ChordalWitness::ChordlessCycle(cy) => {
                assert!(cy.len() >= 4);
                assert!(cy.is_chordless(g));
            }
        }
        c
    }

    #[test]
    fn basic_graphs() {
        assert_certified(&complete(5), true);
        assert_certified(&path(6), true);
        assert_certified(&cycle(4), false);
        assert_certified(&cycle(7), false);
        assert_certified(&edgeless(3), true);
        assert_certified(&edgeless(0), true);
    }

    #[test]
    fn lex_bfs_is_a_permutation() {
        let g = cycle(6);
        let mut o = lex_bfs(&g);
        assert_eq!(o[0], 0);
        o.sort_unstable();
        assert_eq!(o, (0..6).collect::<Vec<_>>());
    }

    #[test]
    fn gamma_three_points_is_chordal() {
        for m in 1..=4 {
            let model = build_gamma(&ModelConfig::new(3, m, false)).unwrap();
            assert_certified(model.graph(), true);
        }
    }

    #[test]
    fn gamma_four_points_is_not_chordal() {
        let model = build_gamma(&ModelConfig::new(4, 1, false)).unwrap();
        assert_certified(model.graph(), false);
        let ids: Vec<usize> = ["0,3:1", "0,1:1", "1,2:1", "2,3:1"]
            .iter()
            .map(|l| model.id_of_label(l).unwrap())
            .collect();
        assert!(CycleWitness(ids).is_chordless(model.graph()));
    }

    #[test]
    fn non_chordal_with_pendant_structure() {
        // 5-cycle with a chord-free tail; the first failure need not sit on the cycle
        let g = Graph::unlabeled(7, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5), (5, 6)]).unwrap();
        assert_certified(&g, false);
    }

    #[test]
    fn elimination_checker_rejects_bad_orders() {
        let g = path(3);
        assert!(is_perfect_elimination(&g, &[0, 2, 1]));
        assert!(!is_perfect_elimination(&g, &[1, 0, 2]));
        assert!(!is_perfect_elimination(&g, &[0, 0, 1]));
    }
}
