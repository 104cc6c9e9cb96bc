//! Canonical keys for tuples of model vertices under the symmetries of the
//! model: permutations of the points, and independent relabelings of the
//! copies inside each zero-set class.
//!
//! Two tuples with the same key are related by a graph automorphism, so any
//! automorphism-invariant quantity (such as the shortest cycle through a
//! pair) needs computing once per key.

use std::collections::HashMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::graph::{smallest_cycle_through_pair, Distance, Graph};
use crate::model::ZeroSetModel;

/// Position orders under which a vertex pair is the same pair.
pub(crate) const PAIR_ORDERS: [[usize; 2]; 2] = [[0, 1], [1, 0]];

/// Position orders under which `[a, b, c, d]`, read as the edge pair
/// `{a, b}`, `{c, d}`, is the same edge pair.
pub(crate) const EDGE_PAIR_ORDERS: [[usize; 4]; 8] = [
    [0, 1, 2, 3],
    [1, 0, 2, 3],
    [0, 1, 3, 2],
    [1, 0, 3, 2],
    [2, 3, 0, 1],
    [3, 2, 0, 1],
    [2, 3, 1, 0],
    [3, 2, 1, 0],
];

pub(crate) struct Symmetries<const N: usize> {
    /// `maps[p][mask]`: image of a zero-set bitmask under point permutation `p`.
    maps: Vec<Vec<u32>>,
    orders: &'static [[usize; N]],
}

impl<const N: usize> Symmetries<N> {
    pub fn new(n: usize, orders: &'static [[usize; N]]) -> Self {
        let maps = (0..n)
            .permutations(n)
            .map(|perm| {
                (0u32..1 << n)
                    .map(|mask| {
                        (0..n).filter(|&i| mask & (1 << i) != 0).fold(0u32, |acc, i| acc | (1 << perm[i]))
                    })
                    .collect()
            })
            .collect();
        Self { maps, orders }
    }

    /// Encoding of `seq` minimized over the position orders only. Tuples
    /// with equal raw keys differ by a copy relabeling.
    pub fn raw(&self, model: &ZeroSetModel, seq: [usize; N]) -> u128 {
        let classes = seq.map(|v| model.zero_set(v).bits());
        let ids = seq.map(|v| v as u64);
        self.orders
            .iter()
            .map(|o| encode(&o.map(|i| ids[i]), &o.map(|i| classes[i])))
            .min()
            .expect("at least one order")
    }

    /// Smallest encoding over all point permutations and position orders.
    pub fn canonical(&self, raw: u128) -> u128 {
        let items = decode::<N>(raw);
        let ids = items.map(|(c, k)| (u64::from(c) << 8) | u64::from(k));
        let mut best = u128::MAX;
        for map in &self.maps {
            for o in self.orders {
                let classes = o.map(|i| map[items[i].0 as usize]);
                best = best.min(encode(&o.map(|i| ids[i]), &classes));
            }
        }
        best
    }

    #[cfg(test)]
    pub fn key(&self, model: &ZeroSetModel, seq: [usize; N]) -> u128 {
        self.canonical(self.raw(model, seq))
    }
}

const FIELD: u32 = 20;

/// Packs `(class, copy)` per position; copies are renumbered by first
/// appearance within each class so that copy relabelings collapse.
fn encode<const N: usize>(ids: &[u64; N], classes: &[u32; N]) -> u128 {
    let mut copies = [0u8; N];
    let mut key = 0u128;
    for i in 0..N {
        let copy = match (0..i).find(|&j| ids[j] == ids[i]) {
            Some(j) => copies[j],
            None => (0..i).filter(|&j| classes[j] == classes[i]).map(|j| copies[j]).max().map_or(1, |c| c + 1),
        };
        copies[i] = copy;
        key = (key << FIELD) | (u128::from(classes[i]) << 4) | u128::from(copy);
    }
    key
}

fn decode<const N: usize>(key: u128) -> [(u32, u8); N] {
    std::array::from_fn(|i| {
        let field = (key >> (FIELD as usize * (N - 1 - i))) & ((1 << FIELD) - 1);
        ((field >> 4) as u32, (field & 0xF) as u8)
    })
}

/// `c(u, v)` for every pair of graph vertices, running the flow once per
/// orbit. `tuple` maps a pair to the model vertices the symmetry acts on.
/// Returns the lengths in pair order and the number of flows run.
pub(crate) fn cycle_lengths_by_orbit<const N: usize, T>(
    g: &Graph,
    model: &ZeroSetModel,
    pairs: &[(usize, usize)],
    sym: &Symmetries<N>,
    tuple: T,
) -> (Vec<Distance>, usize)
where
    T: Fn(usize, usize) -> [usize; N] + Sync,
{
    let raws: Vec<u128> = pairs.par_iter().map(|&(a, b)| sym.raw(model, tuple(a, b))).collect();
    let mut distinct = raws.clone();
    distinct.par_sort_unstable();
    distinct.dedup();
    let canon: HashMap<u128, u128> = distinct.par_iter().map(|&r| (r, sym.canonical(r))).collect();
    let mut slot_of: HashMap<u128, usize> = HashMap::new();
    let mut reps = Vec::new();
    let slots: Vec<usize> = raws
        .iter()
        .enumerate()
        .map(|(i, r)| {
            *slot_of.entry(canon[r]).or_insert_with(|| {
                reps.push(i);
                reps.len() - 1
            })
        })
        .collect();
    let lens: Vec<Distance> = reps
        .par_iter()
        .map(|&i| {
            let (a, b) = pairs[i];
            smallest_cycle_through_pair(g, a, b).expect("pairs hold distinct vertices").0
        })
        .collect();
    (slots.into_iter().map(|s| lens[s]).collect(), reps.len())
}
