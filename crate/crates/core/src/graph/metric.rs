use std::collections::VecDeque;

use rayon::prelude::*;

use super::{Distance, Graph, PathWitness};
use crate::error::{Error, Result};

/// Hop distances from `src`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, src: usize) -> Vec<Option<usize>> {
    bfs(g, src).0
}

fn bfs(g: &Graph, src: usize) -> (Vec<Option<usize>>, Vec<usize>) {
    let n = g.vertex_count();
    let mut dist = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    dist[src] = Some(0);
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    (dist, parent)
}

pub fn distance(g: &Graph, u: usize, v: usize) -> Result<Distance> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(bfs_distances(g, u)[v].into())
}

/// A shortest `u`–`v` path, or `None` when `v` is unreachable. Ties resolve
/// towards smaller vertex ids because neighbor lists are sorted.
pub fn shortest_path(g: &Graph, u: usize, v: usize) -> Result<Option<PathWitness>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let (dist, parent) = bfs(g, u);
    if dist[v].is_none() {
        return Ok(None);
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    Ok(Some(PathWitness(path)))
}

pub fn eccentricity(g: &Graph, u: usize) -> Result<Distance> {
    g.check_vertex(u)?;
    Ok(ecc_of(&bfs_distances(g, u)))
}

fn ecc_of(dist: &[Option<usize>]) -> Distance {
    dist.iter()
        .map(|&d| Distance::from(d))
        .max()
        .unwrap_or(Distance::Finite(0))
}

/// Eccentricity of every vertex, one BFS per vertex in parallel.
pub fn all_eccentricities(g: &Graph) -> Vec<Distance> {
    (0..g.vertex_count())
        .into_par_iter()
        .map(|u| ecc_of(&bfs_distances(g, u)))
        .collect()
}

pub fn diameter(g: &Graph) -> Result<Distance> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(all_eccentricities(g).into_iter().max().unwrap_or(Distance::Finite(0)))
}

pub fn radius(g: &Graph) -> Result<Distance> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(all_eccentricities(g).into_iter().min().unwrap_or(Distance::Finite(0)))
}
