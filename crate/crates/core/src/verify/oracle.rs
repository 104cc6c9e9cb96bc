//! Cross-check of the fast algorithms against exhaustive enumeration on
//! small graphs: every model graph up to the naive cap, plus a seeded
//! random corpus.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use super::{Status, TheoremCheck, ORACLE_ID};
use crate::graph::naive::{naive_chordal, naive_cycles_from, naive_girth, NAIVE_VERTEX_CAP};
use crate::graph::{
    girth, is_chordal, is_perfect_elimination, smallest_cycle_through_pair, ChordalWitness, Graph,
};
use crate::model::{build_gamma, ModelConfig};

pub const DEFAULT_SEED: u64 = 0x5EED_2024;
pub const RANDOM_CORPUS_SIZE: usize = 200;
const RANDOM_MAX_VERTICES: usize = 12;

#[derive(Debug, Clone)]
pub struct OracleCase {
    pub name: String,
    pub graph: Graph,
}

/// Model graphs with 2 to 14 vertices in both modes, then
/// [`RANDOM_CORPUS_SIZE`] random graphs on at most 12 vertices.
pub fn oracle_corpus(seed: u64) -> Vec<OracleCase> {
    let mut out = Vec::new();
    for n in 2..=4 {
        for m in 1..=NAIVE_VERTEX_CAP {
            for zero in [false, true] {
                let cfg = ModelConfig::new(n, m, zero);
                let count = cfg.vertex_count();
                if (2..=NAIVE_VERTEX_CAP).contains(&count) {
                    let model = build_gamma(&cfg).expect("valid config");
                    out.push(OracleCase { name: format!("model {cfg}"), graph: model.graph().clone() });
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..RANDOM_CORPUS_SIZE {
        let n = rng.gen_range(1..=RANDOM_MAX_VERTICES);
        let p: f64 = rng.gen_range(0.1..0.9);
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        let graph = Graph::unlabeled(n, edges).expect("edges in range");
        out.push(OracleCase { name: format!("random #{i} (n={n}, p={p:.2})"), graph });
    }
    out
}

#[derive(Debug, Default, Clone, Copy)]
struct Mismatches {
    girth: usize,
    chordality: usize,
    cycle_pairs: usize,
    pairs: usize,
}

fn compare(g: &Graph) -> Mismatches {
    let mut out = Mismatches::default();
    if girth(g) != naive_girth(g).expect("corpus within cap") {
        out.girth += 1;
    }
    let fast = is_chordal(g);
    let certified = match &fast.witness {
        ChordalWitness::PerfectElimination(o) => is_perfect_elimination(g, o),
        ChordalWitness::ChordlessCycle(c) => c.len() >= 4 && c.is_chordless(g),
    };
    if fast.chordal != naive_chordal(g).expect("corpus within cap") || !certified {
        out.chordality += 1;
    }
    let n = g.vertex_count();
    for u in 0..n {
        let slow = naive_cycles_from(g, u, NAIVE_VERTEX_CAP).expect("corpus within cap");
        for v in u + 1..n {
            out.pairs += 1;
            if smallest_cycle_through_pair(g, u, v).expect("distinct vertices").0 != slow[v] {
                out.cycle_pairs += 1;
            }
        }
    }
    out
}

pub fn check_oracle(seed: u64) -> TheoremCheck {
    let corpus = oracle_corpus(seed);
    let results: Vec<Mismatches> = corpus.par_iter().map(|c| compare(&c.graph)).collect();
    let total = results.iter().fold(Mismatches::default(), |a, b| Mismatches {
        girth: a.girth + b.girth,
        chordality: a.chordality + b.chordality,
        cycle_pairs: a.cycle_pairs + b.cycle_pairs,
        pairs: a.pairs + b.pairs,
    });
    let first = corpus
        .iter()
        .zip(&results)
        .find(|(_, r)| r.girth + r.chordality + r.cycle_pairs > 0)
        .map(|(c, _)| c.name.clone());
    let models = corpus.iter().filter(|c| c.name.starts_with("model")).count();
    let ok = first.is_none();
    TheoremCheck {
        id: ORACLE_ID.to_string(),
        config: None,
        hypotheses: format!("graphs with at most {NAIVE_VERTEX_CAP} vertices"),
        hypotheses_met: true,
        claim: "girth, chordality and c(u,v) agree with exhaustive enumeration".to_string(),
        observed: json!({
            "seed": seed,
            "model_graphs": models,
            "random_graphs": corpus.len() - models,
            "pairs_compared": total.pairs,
            "girth_mismatches": total.girth,
            "chordality_mismatches": total.chordality,
            "cycle_pair_mismatches": total.cycle_pairs,
            "first_mismatch": first,
        }),
        witness: None,
        status: if ok { Status::Pass } else { Status::Fail },
        anomaly: None,
        note: None,
    }
}
