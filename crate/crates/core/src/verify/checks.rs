//! Checks on the model graph itself.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde_json::json;

use super::orbit::{cycle_lengths_by_orbit, Symmetries, PAIR_ORDERS};
use super::{Hypotheses, Outcome, TheoremCheck, Witness, WitnessGraph, WitnessKind};
use crate::export::DominationValue;
use crate::graph::{
    all_eccentricities, bfs_distances, common_neighbor, connected_components, diameter,
    domination_number, girth, is_chordal, is_clique, is_complemented, is_hypertriangulated,
    is_perfect_elimination, is_triangulated, shortest_cycle, shortest_path,
    smallest_cycle_through_pair, ChordalWitness, CycleWitness, Distance, Domination, Graph,
    DEFAULT_MAX_DOMINATION,
};
use crate::model::{complement_class, FunctionVertex, ZeroSetModel};

fn gamma_witness(kind: WitnessKind, g: &Graph, ids: &[usize]) -> Witness {
    Witness::new(kind, WitnessGraph::Gamma, g, ids)
}

fn path_witness(g: &Graph, u: usize, v: usize) -> Option<Witness> {
    let p = shortest_path(g, u, v).ok()??;
    Some(gamma_witness(WitnessKind::Path, g, &p.0))
}

/// First copy of the class complementary to `v`'s zero set.
fn complement_partner(model: &ZeroSetModel, v: usize) -> Option<usize> {
    let c = complement_class(model.space(), model.zero_set(v))?;
    model.id_of(&FunctionVertex::new(c, 1))
}

fn covers_space(model: &ZeroSetModel, u: usize, v: usize) -> bool {
    model.zero_set(u).union_bits(model.zero_set(v)) == model.space().full().bits()
}

fn pair_labels(g: &Graph, u: usize, v: usize) -> [String; 2] {
    [g.label(u).to_string(), g.label(v).to_string()]
}

/// All pairs `u < v`.
fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Number of pairs failing `bad`, and the first such pair.
fn scan_pairs<F>(n: usize, bad: F) -> (usize, Option<(usize, usize)>)
where
    F: Fn(usize, usize) -> bool + Sync,
{
    (0..n)
        .into_par_iter()
        .map(|u| {
            let mut count = 0;
            let mut first = None;
            for v in u + 1..n {
                if bad(u, v) {
                    count += 1;
                    first.get_or_insert((u, v));
                }
            }
            (count, first)
        })
        .reduce(|| (0, None), |a, b| (a.0 + b.0, a.1.or(b.1)))
}

pub fn check_connectivity_diameter(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let comps = connected_components(g);
    let diam = diameter(g).unwrap_or(Distance::Infinite);
    let sizes: Vec<usize> = comps.iter().map(Vec::len).collect();
    let observed = json!({
        "connected": comps.len() == 1,
        "components": comps.len(),
        "component_sizes": sizes,
        "diameter": diam,
    });
    if cfg.n > 2 {
        let w = complement_partner(model, 0).and_then(|v| path_witness(g, 0, v));
        return Outcome::new("T2.1", cfg, Hypotheses::none(), "connected with diameter 2")
            .holds(comps.len() == 1 && diam == 2)
            .observed(observed)
            .witness(w)
            .finish();
    }
    let per_class_cliques =
        comps.len() == 2 && comps.iter().all(|c| c.len() == cfg.m && is_clique(g, c));
    let mut out = Outcome::new(
        "T2.1",
        cfg,
        Hypotheses::none(),
        "two components, each a clique on the copies of one class",
    )
    .holds(per_class_cliques)
    .observed(observed);
    if let Some(z) = model.zero_vertex() {
        let ends = [model.id_of_label("0:1"), model.id_of_label("1:1")];
        if let [Ok(a), Ok(b)] = ends {
            out = out
                .witness(Some(gamma_witness(WitnessKind::Path, g, &[a, z, b])))
                .anomaly(Some("A1"))
                .note("the zero function meets every zero set and joins the two classes");
        }
    }
    out.finish()
}

pub fn check_common_neighbor(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let n = g.vertex_count();
    let (failures, first) = scan_pairs(n, |u, v| common_neighbor(g, u, v).is_none());
    let witness = complement_partner(model, 0)
        .and_then(|v| common_neighbor(g, 0, v).map(|h| (v, h)))
        .map(|(v, h)| gamma_witness(WitnessKind::Path, g, &[0, h, v]));
    let mut out = Outcome::new(
        "C2.2",
        cfg,
        Hypotheses::new("n > 2, m >= 3", cfg.n > 2 && cfg.m >= 3),
        "every pair of distinct vertices has a common neighbor",
    )
    .holds(failures == 0)
    .observed(json!({
        "pairs": n * (n - 1) / 2,
        "pairs_without_common_neighbor": failures,
        "first_failure": first.map(|(u, v)| pair_labels(g, u, v)),
    }))
    .witness(witness);
    if let Some((u, v)) = first {
        out = out.note(format!("{} and {} have no common neighbor", g.label(u), g.label(v)));
    }
    out.finish()
}

pub fn check_distance_characterization(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let n = g.vertex_count();
    let rows: Vec<(usize, usize, usize, Option<(usize, usize)>)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let d = bfs_distances(g, u);
            let (mut ones, mut twos, mut bad, mut first) = (0, 0, 0, None);
            for v in u + 1..n {
                let expect = if model.zero_set(u).meets(model.zero_set(v)) { 1 } else { 2 };
                match d[v] {
                    Some(1) => ones += 1,
                    Some(2) => twos += 1,
                    _ => {}
                }
                if d[v] != Some(expect) {
                    bad += 1;
                    first.get_or_insert((u, v));
                }
            }
            (ones, twos, bad, first)
        })
        .collect();
    let ones: usize = rows.iter().map(|r| r.0).sum();
    let twos: usize = rows.iter().map(|r| r.1).sum();
    let bad: usize = rows.iter().map(|r| r.2).sum();
    let first = rows.iter().find_map(|r| r.3);
    let w = complement_partner(model, 0).and_then(|v| path_witness(g, 0, v));
    Outcome::new(
        "C2.3",
        cfg,
        Hypotheses::new("n > 2", cfg.n > 2),
        "distance 1 exactly when zero sets meet, distance 2 exactly when they are disjoint",
    )
    .holds(bad == 0)
    .observed(json!({
        "pairs_at_distance_1": ones,
        "pairs_at_distance_2": twos,
        "mismatches": bad,
        "first_mismatch": first.map(|(u, v)| pair_labels(g, u, v)),
    }))
    .witness(w)
    .finish()
}

pub fn check_radius(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let ecc = all_eccentricities(g);
    let radius = ecc.iter().copied().min().unwrap_or(Distance::Infinite);
    let center = ecc.iter().position(|&e| e == radius);
    let mut out = Outcome::new("T2.4", cfg, Hypotheses::new("n > 2", cfg.n > 2), "radius 2")
        .holds(radius == 2)
        .observed(json!({ "radius": radius, "center": center.map(|c| g.label(c)) }))
        .witness(center.map(|c| gamma_witness(WitnessKind::Vertex, g, &[c])));
    if radius == 1 && center.is_some_and(|c| model.is_zero_vertex(c)) {
        out = out.anomaly(Some("ZERO_RADIUS")).note("the zero vertex is adjacent to every vertex");
    }
    out.finish()
}

/// Triangle membership of vertices and edges, and the girth.
pub fn check_triangulation(model: &ZeroSetModel) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let g = model.graph();
    let hyp = || Hypotheses::new("m >= 3 or n >= 3", cfg.m >= 3 || cfg.n >= 3);
    let (tri, lonely_vertex) = is_triangulated(g);
    let (hyper, lonely_edge) = is_hypertriangulated(g);
    let triangle = g.neighbors(0).iter().find_map(|&w| common_neighbor(g, 0, w).map(|h| [0, w, h]));
    let local = Outcome::new("T3.1", cfg, hyp(), "every vertex and every edge lies on a triangle")
        .holds(tri && hyper)
        .observed(json!({
            "triangulated": tri,
            "hypertriangulated": hyper,
            "vertex_off_triangles": lonely_vertex.map(|v| g.label(v)),
            "edge_off_triangles": lonely_edge.map(|(u, v)| pair_labels(g, u, v)),
        }))
        .witness(triangle.map(|t| gamma_witness(WitnessKind::Cycle, g, &t)))
        .finish();
    let gr = girth(g);
    let cycle = shortest_cycle(g);
    let girth_check = Outcome::new("C3.2", cfg, hyp(), "girth 3")
        .holds(gr == 3)
        .observed(json!({ "girth": gr }))
        .witness(cycle.map(|c| gamma_witness(WitnessKind::Cycle, g, &c.0)))
        .finish();
    vec![local, girth_check]
}

pub fn check_cycle_pair_gamma(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let pairs = all_pairs(g.vertex_count());
    let sym = Symmetries::new(cfg.n, &PAIR_ORDERS);
    let (lens, flows) = cycle_lengths_by_orbit(g, model, &pairs, &sym, |u, v| [u, v]);
    let (mut c3, mut c4, mut bad, mut first) = (0, 0, 0, None);
    for (&(u, v), &len) in pairs.iter().zip(&lens) {
        let expect = if g.has_edge(u, v) { 3 } else { 4 };
        match len {
            Distance::Finite(3) => c3 += 1,
            Distance::Finite(4) => c4 += 1,
            _ => {}
        }
        if len != expect {
            bad += 1;
            first.get_or_insert((u, v, len));
        }
    }
    // cycle for a disjoint pair, or for the first mismatch
    let shown = first.map(|(u, v, _)| (u, v)).or_else(|| complement_partner(model, 0).map(|v| (0, v)));
    let witness = shown
        .and_then(|(u, v)| smallest_cycle_through_pair(g, u, v).ok())
        .and_then(|(_, c)| c)
        .map(|c| gamma_witness(WitnessKind::Cycle, g, &c.0));
    let mut out = Outcome::new(
        "T3.3",
        cfg,
        Hypotheses::new("n >= 3, m >= 2", cfg.n >= 3 && cfg.m >= 2),
        "c(f,g) = 3 for adjacent pairs and c(f,g) = 4 for pairs with disjoint zero sets",
    )
    .holds(bad == 0)
    .observed(json!({
        "pairs": pairs.len(),
        "pairs_with_c_3": c3,
        "pairs_with_c_4": c4,
        "mismatches": bad,
        "first_mismatch": first.map(|(u, v, len)| json!({ "pair": pair_labels(g, u, v), "c": len })),
        "flow_computations": flows,
    }))
    .witness(witness);
    if let Some((u, v, len)) = first {
        out = out.note(format!("c({}, {}) = {len}", g.label(u), g.label(v)));
    }
    out.finish()
}

/// Induced 4-cycle on the first copies of the classes {0,3}, {0,1},
/// {1,2}, {2,3}; needs at least four points.
pub fn four_point_chordless_cycle(model: &ZeroSetModel) -> Option<CycleWitness> {
    let ids = ["0,3:1", "0,1:1", "1,2:1", "2,3:1"]
        .iter()
        .map(|l| model.id_of_label(l).ok())
        .collect::<Option<Vec<_>>>()?;
    Some(CycleWitness(ids))
}

pub fn check_chordality_gamma(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let result = is_chordal(g);
    let (extracted, order_ok) = match &result.witness {
        ChordalWitness::ChordlessCycle(c) => (Some(g.labels_of(&c.0)), None),
        ChordalWitness::PerfectElimination(o) => (None, Some(is_perfect_elimination(g, o))),
    };
    let observed = json!({
        "chordal": result.chordal,
        "elimination_order_verified": order_ok,
        "extracted_chordless_cycle": extracted,
    });
    if cfg.n <= 3 {
        return Outcome::new("T3.4", cfg, Hypotheses::none(), "chordal")
            .holds(result.chordal && order_ok == Some(true))
            .observed(observed)
            .finish();
    }
    let fixed = four_point_chordless_cycle(model).filter(|c| c.is_chordless(g));
    Outcome::new(
        "T3.4",
        cfg,
        Hypotheses::none(),
        "not chordal, with a chordless 4-cycle on the classes {0,3}, {0,1}, {1,2}, {2,3}",
    )
    .holds(!result.chordal && fixed.is_some())
    .observed(observed)
    .witness(fixed.map(|c| gamma_witness(WitnessKind::ChordlessCycle, g, &c.0)))
    .finish()
}

fn closed_neighborhoods(g: &Graph) -> Vec<FixedBitSet> {
    (0..g.vertex_count())
        .map(|v| {
            let mut s = g.neighbor_set(v).clone();
            s.insert(v);
            s
        })
        .collect()
}

fn pair_dominates(closed: &[FixedBitSet], u: usize, v: usize) -> bool {
    closed[u].union_count(&closed[v]) == closed.len()
}

/// Complementedness, and the disjoint dominating partner condition it is
/// claimed to be equivalent to.
pub fn check_complemented(model: &ZeroSetModel) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let g = model.graph();
    let n = g.vertex_count();
    let (complemented, lonely) = is_complemented(g);
    let orthogonal_pairs = g.edges().filter(|&(u, v)| common_neighbor(g, u, v).is_none()).count();
    let never = Outcome::new(
        "T3.5",
        cfg,
        Hypotheses::new("n >= 2, m >= 3", cfg.n >= 2 && cfg.m >= 3),
        "not complemented",
    )
    .holds(!complemented)
    .observed(json!({
        "complemented": complemented,
        "orthogonal_pairs": orthogonal_pairs,
        "vertex_without_orthogonal_partner": lonely.map(|v| g.label(v)),
    }))
    .witness(lonely.map(|v| gamma_witness(WitnessKind::Vertex, g, &[v])))
    .finish();

    let closed = closed_neighborhoods(g);
    let partner = |f: usize| {
        (0..n).find(|&h| h != f && !model.zero_set(f).meets(model.zero_set(h)) && pair_dominates(&closed, f, h))
    };
    let partners: Vec<Option<usize>> = (0..n).into_par_iter().map(partner).collect();
    let nonzero_ok = (0..n).filter(|&f| !model.is_zero_vertex(f)).all(|f| partners[f].is_some());
    let all_ok = partners.iter().all(Option::is_some);
    let missing = (0..n).find(|&f| !model.is_zero_vertex(f) && partners[f].is_none());
    let witness = partners[0].map(|h| gamma_witness(WitnessKind::Set, g, &[0, h]));
    let mut iff = Outcome::new(
        "T4.4",
        cfg,
        Hypotheses::new("n >= 2", cfg.n >= 2),
        "complemented exactly when every nonzero f has a g with disjoint zero set and {f, g} dominating",
    )
    .holds(complemented == nonzero_ok)
    .observed(json!({
        "complemented": complemented,
        "partner_condition": nonzero_ok,
        "partner_condition_including_zero": all_ok,
        "first_vertex_without_partner": missing.map(|f| g.label(f)),
    }))
    .witness(witness);
    if !complemented && nonzero_ok {
        iff = iff.anomaly(Some("A2")).note("the partner condition holds but the graph is not complemented");
    }
    vec![never, iff.finish()]
}

pub fn check_domination(model: &ZeroSetModel) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let g = model.graph();
    let hyp = || Hypotheses::new("n >= 2", cfg.n >= 2);
    let dom = domination_number(g, DEFAULT_MAX_DOMINATION).expect("positive search bound");
    let (value, set) = match &dom {
        Domination::Found { size, set } => (DominationValue::Exact(*size), set.clone()),
        Domination::Exceeds { max_k } => (DominationValue::Above(*max_k), Vec::new()),
    };
    let complementary = set.len() == 2
        && covers_space(model, set[0], set[1])
        && !model.zero_set(set[0]).meets(model.zero_set(set[1]));
    let mut number = Outcome::new("T4.1", cfg, hyp(), "domination number 2, realized by complementary classes")
        .holds(value == DominationValue::Exact(2) && complementary)
        .observed(json!({ "domination_number": value, "complementary_witness": complementary }))
        .witness((!set.is_empty()).then(|| gamma_witness(WitnessKind::Set, g, &set)));
    if value == DominationValue::Exact(1) && set.first().is_some_and(|&v| model.is_zero_vertex(v)) {
        number = number.anomaly(Some("ZERO_DOMINATION")).note("the zero vertex dominates alone");
    }

    let closed = closed_neighborhoods(g);
    let n = g.vertex_count();
    let (bad, first) = scan_pairs(n, |u, v| pair_dominates(&closed, u, v) != covers_space(model, u, v));
    let (dominating, _) = scan_pairs(n, |u, v| pair_dominates(&closed, u, v));
    let first_dominating = all_pairs(n).into_iter().find(|&(u, v)| pair_dominates(&closed, u, v));
    let pairs = Outcome::new(
        "T4.2",
        cfg,
        hyp(),
        "{f, g} dominates exactly when Z(f) and Z(g) together cover X",
    )
    .holds(bad == 0)
    .observed(json!({
        "pairs": n * (n - 1) / 2,
        "dominating_pairs": dominating,
        "mismatches": bad,
        "first_mismatch": first.map(|(u, v)| pair_labels(g, u, v)),
    }))
    .witness(first_dominating.map(|(u, v)| gamma_witness(WitnessKind::Set, g, &[u, v])))
    .finish();
    vec![number.finish(), pairs]
}

/// Every vertex has a partner with disjoint zero set that dominates with it;
/// the partner tried is the first copy of the complementary class.
pub fn check_vnr_condition(model: &ZeroSetModel) -> TheoremCheck {
    let cfg = model.config();
    let g = model.graph();
    let closed = closed_neighborhoods(g);
    let partners: Vec<Option<usize>> = (0..g.vertex_count())
        .map(|f| {
            complement_partner(model, f).filter(|&h| {
                !model.zero_set(f).meets(model.zero_set(h)) && pair_dominates(&closed, f, h)
            })
        })
        .collect();
    let failing: Vec<usize> = (0..partners.len()).filter(|&f| partners[f].is_none()).collect();
    let pairs: Vec<[&str; 2]> = partners
        .iter()
        .enumerate()
        .filter_map(|(f, h)| h.map(|h| [g.label(f), g.label(h)]))
        .collect();
    // every vertex has a nonempty zero set and every subset of a discrete space is open
    let almost_regular = model.vertices().iter().all(|v| v.zero_set.len() > 0);
    let mut out = Outcome::new(
        "T4.3",
        cfg,
        Hypotheses::new("finite discrete space", true),
        "every f has a g with disjoint zero set such that {f, g} dominates",
    )
    .holds(failing.is_empty())
    .observed(json!({
        "almost_regular": almost_regular,
        "von_neumann_regular": true,
        "vertices_with_partner": pairs.len(),
        "vertices_without_partner": g.labels_of(&failing),
        "partners": pairs,
    }))
    .witness(partners[0].map(|h| gamma_witness(WitnessKind::Set, g, &[0, h])));
    if failing.len() == 1 && model.is_zero_vertex(failing[0]) {
        out = out.anomaly(Some("ZERO_PARTNER")).note("the zero vertex has no disjoint partner");
    }
    out.finish()
}
