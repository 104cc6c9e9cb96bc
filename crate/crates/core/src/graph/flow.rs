//! Two internally vertex-disjoint paths of minimum total length.
//!
//! Each vertex `w` is split into `in(w) -> out(w)` with capacity 1, each
//! undirected edge becomes two unit-cost arcs `out(a) -> in(b)` and
//! `out(b) -> in(a)`, and two units are pushed from `out(s)` to `in(t)` by
//! successive shortest augmenting paths (Bellman-Ford on the residual graph).

use std::collections::VecDeque;

use super::Graph;

struct Arc {
    to: usize,
    cap: i32,
    cost: i64,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Self { arcs: Vec::new(), out: vec![Vec::new(); nodes] }
    }

    fn add(&mut self, from: usize, to: usize, cap: i32, cost: i64) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost });
    }

    /// Shortest residual path by queue-based Bellman-Ford; returns the arc
    /// sequence. Arcs are scanned in insertion order, so ties are resolved
    /// deterministically.
    fn shortest(&self, s: usize, t: usize) -> Option<Vec<usize>> {
        let n = self.out.len();
        let mut dist = vec![i64::MAX; n];
        let mut via = vec![usize::MAX; n];
        let mut queued = vec![false; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        queued[s] = true;
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            for &a in &self.out[u] {
                let arc = &self.arcs[a];
                if arc.cap > 0 && dist[u] + arc.cost < dist[arc.to] {
                    dist[arc.to] = dist[u] + arc.cost;
                    via[arc.to] = a;
                    if !queued[arc.to] {
                        queued[arc.to] = true;
                        queue.push_back(arc.to);
                    }
                }
            }
        }
        if dist[t] == i64::MAX {
            return None;
        }
        let mut path = Vec::new();
        let mut cur = t;
        while cur != s {
            let a = via[cur];
            path.push(a);
            cur = self.arcs[a ^ 1].to;
        }
        path.reverse();
        Some(path)
    }
}

#[inline]
fn node_in(v: usize) -> usize {
    2 * v
}

#[inline]
fn node_out(v: usize) -> usize {
    2 * v + 1
}

/// The two disjoint `s`–`t` paths (each listed from `s` to `t`), or `None`
/// when fewer than two exist.
pub(super) fn two_disjoint_paths(g: &Graph, s: usize, t: usize) -> Option<[Vec<usize>; 2]> {
    let n = g.vertex_count();
    let mut net = Network::new(2 * n);
    for w in 0..n {
        if w != s && w != t {
            net.add(node_in(w), node_out(w), 1, 0);
        }
    }
    for (a, b) in g.edges() {
        if b != s && a != t {
            net.add(node_out(a), node_in(b), 1, 1);
        }
        if a != s && b != t {
            net.add(node_out(b), node_in(a), 1, 1);
        }
    }
    let (src, sink) = (node_out(s), node_in(t));
    for _ in 0..2 {
        let path = net.shortest(src, sink)?;
        for a in path {
            net.arcs[a].cap -= 1;
            net.arcs[a ^ 1].cap += 1;
        }
    }
    // Decompose: follow saturated forward arcs from the source.
    let mut used: Vec<Vec<usize>> = vec![Vec::new(); 2 * n];
    for (i, arc) in net.arcs.iter().enumerate().step_by(2) {
        let residual_back = net.arcs[i + 1].cap;
        if residual_back > 0 {
            let from = net.arcs[i + 1].to;
            used[from].push(arc.to);
        }
    }
    let mut paths: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for p in &mut paths {
        let mut node = src;
        p.push(s);
        while node != sink {
            let next = used[node].pop()?;
            if next % 2 == 0 && next != sink {
                // in(w): step through the split arc to out(w)
                p.push(next / 2);
                used[next].pop()?;
                node = node_out(next / 2);
            } else {
                node = next;
            }
        }
        p.push(t);
    }
    Some(paths)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn cycle_splits_into_two_arcs() {
        let g = cycle(6);
        let [p, q] = two_disjoint_paths(&g, 0, 3).unwrap();
        let mut lens = [p.len() - 1, q.len() - 1];
        lens.sort_unstable();
        assert_eq!(lens, [3, 3]);
    }

    #[test]
    fn adjacent_pair_uses_edge_once() {
        // triangle 0-1-2: direct edge plus detour through 2
        let [p, q] = two_disjoint_paths(&complete(3), 0, 1).unwrap();
        let mut both = [p, q];
        both.sort_by_key(Vec::len);
        assert_eq!(both[0], vec![0, 1]);
        assert_eq!(both[1], vec![0, 2, 1]);
    }

    #[test]
    fn bridge_blocks_second_path() {
        assert!(two_disjoint_paths(&path(4), 0, 3).is_none());
        assert!(two_disjoint_paths(&path(2), 0, 1).is_none());
    }
}
