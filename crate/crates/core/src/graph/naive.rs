//! Exhaustive reference implementations used as test oracles.
//!
//! These enumerate vertex subsets directly and share nothing with the BFS,
//! flow and Lex-BFS routines they check. They are exponential and refuse
//! graphs above [`NAIVE_VERTEX_CAP`] vertices.

use super::{Distance, Graph};
use crate::error::{Error, Result};

pub const NAIVE_VERTEX_CAP: usize = 14;

/// Absolute limit for the explicit-cap variants (the subset table has
/// `2^n` entries).
const HARD_CAP: usize = 22;

fn bit_adjacency(g: &Graph, cap: usize) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if n > cap.min(HARD_CAP) {
        return Err(Error::NaiveCapExceeded { cap: cap.min(HARD_CAP), actual: n });
    }
    Ok((0..n)
        .map(|u| (0..n).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | (1 << v)))
        .collect())
}

/// `reach[mask]` holds every `w` such that some simple path starting at
/// `src` visits exactly the vertices of `mask` and ends at `w`.
fn simple_path_table(adj: &[u32], src: usize) -> Vec<u32> {
    let n = adj.len();
    let mut reach = vec![0u32; 1 << n];
    reach[1 << src] = 1 << src;
    for mask in 0..(1usize << n) {
        let mut ends = reach[mask];
        while ends != 0 {
            let w = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = adj[w] & !(mask as u32);
            while ext != 0 {
                let x = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                reach[mask | (1 << x)] |= 1 << x;
            }
        }
    }
    reach
}

/// Shortest simple cycle through `src` and each other vertex (`Infinite`
/// where none exists). Entry `src` holds the shortest cycle through `src`.
fn cycles_through(adj: &[u32], src: usize) -> Vec<Distance> {
    let n = adj.len();
    let reach = simple_path_table(adj, src);
    let mut best = vec![usize::MAX; n];
    for (mask, &ends) in reach.iter().enumerate() {
        let len = mask.count_ones() as usize;
        if len < 3 || ends & adj[src] == 0 {
            continue;
        }
        let mut members = mask;
        while members != 0 {
            let v = members.trailing_zeros() as usize;
            members &= members - 1;
            best[v] = best[v].min(len);
        }
    }
    best.into_iter().map(|b| if b == usize::MAX { Distance::Infinite } else { Distance::Finite(b) }).collect()
}

pub fn naive_girth(g: &Graph) -> Result<Distance> {
    let adj = bit_adjacency(g, NAIVE_VERTEX_CAP)?;
    Ok((0..adj.len()).map(|s| cycles_through(&adj, s)[s]).min().unwrap_or(Distance::Infinite))
}

pub fn naive_cycle_through_pair(g: &Graph, u: usize, v: usize) -> Result<Distance> {
    naive_cycle_through_pair_with_cap(g, u, v, NAIVE_VERTEX_CAP)
}

/// Same as [`naive_cycle_through_pair`] with an explicit vertex cap.
pub fn naive_cycle_through_pair_with_cap(g: &Graph, u: usize, v: usize, cap: usize) -> Result<Distance> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    let adj = bit_adjacency(g, cap)?;
    Ok(cycles_through(&adj, u)[v])
}

/// `c(u, v)` for every `v`, from one subset table. Entry `u` is the
/// shortest cycle through `u` alone.
pub fn naive_cycles_from(g: &Graph, u: usize, cap: usize) -> Result<Vec<Distance>> {
    g.check_vertex(u)?;
    let adj = bit_adjacency(g, cap)?;
    Ok(cycles_through(&adj, u))
}

/// True iff no vertex subset of size at least four induces a cycle.
pub fn naive_chordal(g: &Graph) -> Result<bool> {
    let adj = bit_adjacency(g, NAIVE_VERTEX_CAP)?;
    let n = adj.len();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() >= 4 && induces_cycle(&adj, mask) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn induces_cycle(adj: &[u32], mask: u32) -> bool {
    let mut members = mask;
    while members != 0 {
        let v = members.trailing_zeros() as usize;
        members &= members - 1;
        if (adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    // 2-regular: a cycle iff connected
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & mask & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == mask
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;

    #[test]
    fn triangle_girth() {
        assert_eq!(naive_girth(&complete(3)).unwrap(), Distance::Finite(3));
        assert_eq!(naive_girth(&path(5)).unwrap(), Distance::Infinite);
        assert_eq!(naive_girth(&cycle(9)).unwrap(), Distance::Finite(9));
    }

    #[test]
    fn opposite_vertices_of_square() {
        assert_eq!(naive_cycle_through_pair(&cycle(4), 0, 2).unwrap(), Distance::Finite(4));
        assert_eq!(naive_cycle_through_pair(&path(4), 0, 3).unwrap(), Distance::Infinite);
        assert!(naive_cycle_through_pair(&cycle(4), 1, 1).is_err());
    }

    #[test]
    fn pentagon_is_not_chordal() {
        assert!(!naive_chordal(&cycle(5)).unwrap());
        assert!(naive_chordal(&complete(6)).unwrap());
        assert!(naive_chordal(&path(6)).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let big = complete(NAIVE_VERTEX_CAP + 1);
        assert!(matches!(naive_girth(&big), Err(Error::NaiveCapExceeded { cap: 14, actual: 15 })));
        assert!(naive_chordal(&big).is_err());
        assert!(naive_cycle_through_pair(&big, 0, 1).is_err());
        assert!(naive_cycle_through_pair_with_cap(&big, 0, 1, 16).is_ok());
    }
}
