//! Checks on the line graph of the model.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use super::orbit::{cycle_lengths_by_orbit, Symmetries, EDGE_PAIR_ORDERS};
use super::{Hypotheses, Outcome, TheoremCheck, Witness, WitnessGraph, WitnessKind};
use crate::error::Result;
use crate::graph::{
    bfs_distances, common_neighbor, girth, is_chordal, is_hypertriangulated, is_triangulated,
    shortest_cycle, shortest_path, smallest_cycle_through_pair, ChordalWitness, CycleWitness,
    Distance, Graph,
};
use crate::line::{cross_zero_pattern, pattern_count, shares_endpoint, CrossPattern, EdgeVertex, LineGraph};
use crate::model::ZeroSetModel;

fn line_witness(kind: WitnessKind, g: &Graph, ids: &[usize]) -> Witness {
    Witness::new(kind, WitnessGraph::Line, g, ids)
}

fn pair_labels(g: &Graph, u: usize, v: usize) -> [String; 2] {
    [g.label(u).to_string(), g.label(v).to_string()]
}

/// Which of the four cycle-length cases an edge pair falls in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineCycleCase {
    /// The edges share an endpoint.
    SharedEndpoint,
    /// No shared endpoint; one edge's endpoints both meet the other edge,
    /// or each endpoint of the first edge meets the second.
    CrossRich,
    /// No shared endpoint; exactly one cross pair of zero sets meets.
    CrossSingle,
    /// No shared endpoint; no cross pair meets.
    CrossNone,
}

impl LineCycleCase {
    pub fn expected_length(self) -> usize {
        match self {
            LineCycleCase::SharedEndpoint => 3,
            LineCycleCase::CrossRich => 4,
            LineCycleCase::CrossSingle => 5,
            LineCycleCase::CrossNone => 6,
        }
    }

    fn index(self) -> usize {
        self.expected_length() - 3
    }
}

fn rich(p: &CrossPattern) -> bool {
    let full_row = p.iter().any(|r| r[0] && r[1]);
    let both_rows = p.iter().all(|r| r[0] || r[1]);
    full_row || both_rows
}

/// Membership of a pair in each case, tested separately so that
/// exhaustiveness and exclusivity can be checked.
fn case_flags(shared: bool, p: &CrossPattern) -> [bool; 4] {
    [shared, !shared && rich(p), !shared && pattern_count(p) == 1, !shared && pattern_count(p) == 0]
}

pub fn line_cycle_case(model: &ZeroSetModel, e1: EdgeVertex, e2: EdgeVertex) -> Result<LineCycleCase> {
    let shared = shares_endpoint(e1, e2)?;
    let p = cross_zero_pattern(model, e1, e2)?;
    let flags = case_flags(shared, &p);
    let cases = [
        LineCycleCase::SharedEndpoint,
        LineCycleCase::CrossRich,
        LineCycleCase::CrossSingle,
        LineCycleCase::CrossNone,
    ];
    Ok(cases[flags.iter().position(|&f| f).expect("cases are exhaustive")])
}

#[derive(Debug, Clone, Default)]
struct MetricTally {
    by_distance: [usize; 3],
    distance_mismatches: usize,
    first_distance_mismatch: Option<(usize, usize, Distance)>,
    first_far_pair: Option<(usize, usize)>,
    common_neighbor_pairs: usize,
    common_neighbor_mismatches: usize,
    first_common_neighbor_mismatch: Option<(usize, usize)>,
    first_common_neighbor_pair: Option<(usize, usize)>,
    ecc_mismatches: usize,
    first_ecc_mismatch: Option<(usize, Distance)>,
}

impl MetricTally {
    fn merge(mut self, o: MetricTally) -> Self {
        for i in 0..3 {
            self.by_distance[i] += o.by_distance[i];
        }
        self.distance_mismatches += o.distance_mismatches;
        self.first_distance_mismatch = self.first_distance_mismatch.or(o.first_distance_mismatch);
        self.first_far_pair = self.first_far_pair.or(o.first_far_pair);
        self.common_neighbor_pairs += o.common_neighbor_pairs;
        self.common_neighbor_mismatches += o.common_neighbor_mismatches;
        self.first_common_neighbor_mismatch =
            self.first_common_neighbor_mismatch.or(o.first_common_neighbor_mismatch);
        self.first_common_neighbor_pair = self.first_common_neighbor_pair.or(o.first_common_neighbor_pair);
        self.ecc_mismatches += o.ecc_mismatches;
        self.first_ecc_mismatch = self.first_ecc_mismatch.or(o.first_ecc_mismatch);
        self
    }
}

fn covers(model: &ZeroSetModel, e: EdgeVertex) -> bool {
    let [a, b] = e.endpoints();
    model.zero_set(a).union_bits(model.zero_set(b)) == model.space().full().bits()
}

/// Distance cases, common neighbors, eccentricities, diameter and radius.
pub fn check_line_metrics(model: &ZeroSetModel, line: &LineGraph) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let g = line.graph();
    let n = g.vertex_count();
    let edges = line.edges();
    let per_source: Vec<(MetricTally, Distance)> = (0..n)
        .into_par_iter()
        .map(|u| {
            let d = bfs_distances(g, u);
            let ecc: Distance = d.iter().map(|&x| Distance::from(x)).max().unwrap_or(Distance::Infinite);
            let mut t = MetricTally::default();
            let expect_ecc = if covers(model, edges[u]) { 2 } else { 3 };
            if ecc != expect_ecc {
                t.ecc_mismatches = 1;
                t.first_ecc_mismatch = Some((u, ecc));
            }
            for v in u + 1..n {
                let shared = shares_endpoint(edges[u], edges[v]).expect("distinct edges");
                let p = cross_zero_pattern(model, edges[u], edges[v]).expect("model edges");
                let crossing = pattern_count(&p) > 0;
                let expect = if shared { 1 } else if crossing { 2 } else { 3 };
                let dist = Distance::from(d[v]);
                if let Distance::Finite(k @ 1..=3) = dist {
                    t.by_distance[k - 1] += 1;
                }
                if dist != expect {
                    t.distance_mismatches += 1;
                    t.first_distance_mismatch.get_or_insert((u, v, dist));
                }
                if expect == 3 {
                    t.first_far_pair.get_or_insert((u, v));
                }
                if !shared {
                    t.common_neighbor_pairs += 1;
                    let has = common_neighbor(g, u, v).is_some();
                    if has != crossing {
                        t.common_neighbor_mismatches += 1;
                        t.first_common_neighbor_mismatch.get_or_insert((u, v));
                    }
                    if has && crossing {
                        t.first_common_neighbor_pair.get_or_insert((u, v));
                    }
                }
            }
            (t, ecc)
        })
        .collect();
    let ecc: Vec<Distance> = per_source.iter().map(|x| x.1).collect();
    let t = per_source.into_iter().map(|x| x.0).fold(MetricTally::default(), MetricTally::merge);
    let diameter = ecc.iter().copied().max().unwrap_or(Distance::Infinite);
    let radius = ecc.iter().copied().min().unwrap_or(Distance::Infinite);
    let hyp = || Hypotheses::new("n >= 3, m >= 2", cfg.n >= 3 && cfg.m >= 2);
    let path = |u: usize, v: usize| {
        shortest_path(g, u, v).ok().flatten().map(|p| line_witness(WitnessKind::Path, g, &p.0))
    };

    let common = Outcome::new(
        "L5.1",
        cfg,
        hyp(),
        "edges without a shared endpoint have a common neighbor exactly when some cross pair of zero sets meets",
    )
    .holds(t.common_neighbor_mismatches == 0)
    .observed(json!({
        "pairs_without_shared_endpoint": t.common_neighbor_pairs,
        "mismatches": t.common_neighbor_mismatches,
        "first_mismatch": t.first_common_neighbor_mismatch.map(|(u, v)| pair_labels(g, u, v)),
    }))
    .witness(t.first_common_neighbor_pair.and_then(|(u, v)| {
        common_neighbor(g, u, v).map(|h| line_witness(WitnessKind::Path, g, &[u, h, v]))
    }))
    .finish();

    let distances = Outcome::new(
        "T5.2",
        cfg,
        hyp(),
        "distance 1 for a shared endpoint, otherwise 2 when some cross pair meets and 3 when none does",
    )
    .holds(t.distance_mismatches == 0)
    .observed(json!({
        "pairs_at_distance_1": t.by_distance[0],
        "pairs_at_distance_2": t.by_distance[1],
        "pairs_at_distance_3": t.by_distance[2],
        "mismatches": t.distance_mismatches,
        "first_mismatch": t.first_distance_mismatch.map(|(u, v, d)| json!({ "pair": pair_labels(g, u, v), "distance": d })),
    }))
    .witness(t.first_far_pair.and_then(|(u, v)| path(u, v)))
    .finish();

    let connected = diameter.is_finite();
    let far = (0..n).find(|&u| ecc[u] == diameter).and_then(|u| {
        let d = bfs_distances(g, u);
        d.iter().position(|&x| Distance::from(x) == diameter).map(|v| (u, v))
    });
    let diam = Outcome::new("C5.3", cfg, hyp(), "connected with diameter at most 3")
        .holds(connected && diameter <= Distance::Finite(3))
        .observed(json!({ "connected": connected, "diameter": diameter }))
        .witness(far.and_then(|(u, v)| path(u, v)))
        .finish();

    let witness_edge = (0..n).find(|&u| !covers(model, edges[u])).or(Some(0)).filter(|_| n > 0);
    let ecc_path = witness_edge.and_then(|u| {
        let d = bfs_distances(g, u);
        d.iter().position(|&x| Distance::from(x) == ecc[u]).and_then(|v| path(u, v))
    });
    let covering = (0..n).filter(|&u| covers(model, edges[u])).count();
    let ecc_check = Outcome::new(
        "T5.4",
        cfg,
        hyp(),
        "eccentricity 2 when the endpoint zero sets cover X, 3 otherwise",
    )
    .holds(t.ecc_mismatches == 0)
    .observed(json!({
        "edges_covering_x": covering,
        "edges_not_covering_x": n - covering,
        "mismatches": t.ecc_mismatches,
        "first_mismatch": t.first_ecc_mismatch.map(|(u, e)| json!({ "edge": g.label(u), "eccentricity": e })),
    }))
    .witness(ecc_path)
    .finish();

    let center = ecc.iter().position(|&e| e == radius);
    let rad = Outcome::new("C5.5", cfg, hyp(), "radius between 2 and 3")
        .holds(radius >= Distance::Finite(2) && radius <= Distance::Finite(3))
        .observed(json!({ "radius": radius, "center": center.map(|c| g.label(c)) }))
        .witness(center.map(|c| line_witness(WitnessKind::Vertex, g, &[c])))
        .finish();

    vec![common, distances, diam, ecc_check, rad]
}

/// Copies 1 to 4 of the first class, joined as the 4-cycle
/// `[f1,f2] - [f2,f3] - [f3,f4] - [f4,f1]` in the line graph.
pub fn same_class_square(model: &ZeroSetModel, line: &LineGraph) -> Option<CycleWitness> {
    if model.config().m < 4 {
        return None;
    }
    // vertices 0..4 are the first four copies of the lowest class
    let f = [0, 1, 2, 3];
    let ids = (0..4)
        .map(|i| line.id_of(EdgeVertex::new(f[i], f[(i + 1) % 4])))
        .collect::<Option<Vec<_>>>()?;
    Some(CycleWitness(ids))
}

/// Girth, triangles, the cycle-length case table and non-chordality.
pub fn check_line_cycles(model: &ZeroSetModel, line: &LineGraph) -> Vec<TheoremCheck> {
    let cfg = model.config();
    let g = line.graph();
    let n = g.vertex_count();
    let gr = girth(g);
    let girth_check = Outcome::new(
        "T5.6",
        cfg,
        Hypotheses::new("m >= 3 or n >= 3", cfg.m >= 3 || cfg.n >= 3),
        "girth 3",
    )
    .holds(gr == 3)
    .observed(json!({ "girth": gr }))
    .witness(shortest_cycle(g).map(|c| line_witness(WitnessKind::Cycle, g, &c.0)))
    .finish();

    let (tri, lonely_vertex) = is_triangulated(g);
    let (hyper, lonely_edge) = is_hypertriangulated(g);
    let triangle = (n > 0)
        .then(|| g.neighbors(0).iter().find_map(|&w| common_neighbor(g, 0, w).map(|h| [0, w, h])))
        .flatten();
    let local = Outcome::new(
        "T5.7",
        cfg,
        Hypotheses::new("m >= 3", cfg.m >= 3),
        "every vertex and every edge lies on a triangle",
    )
    .holds(tri && hyper)
    .observed(json!({
        "triangulated": tri,
        "hypertriangulated": hyper,
        "vertex_off_triangles": lonely_vertex.map(|v| g.label(v)),
        "edge_off_triangles": lonely_edge.map(|(u, v)| pair_labels(g, u, v)),
    }))
    .witness(triangle.map(|t| line_witness(WitnessKind::Cycle, g, &t)))
    .finish();

    let table = check_cycle_table(model, line);

    let chordality = is_chordal(g);
    let square = same_class_square(model, line).filter(|c| c.is_chordless(g));
    let extracted = match &chordality.witness {
        ChordalWitness::ChordlessCycle(c) => Some(c.clone()),
        ChordalWitness::PerfectElimination(_) => None,
    };
    let claim = if cfg.m >= 4 {
        "not chordal, with a chordless 4-cycle on edges among copies 1 to 4 of one class"
    } else {
        "not chordal"
    };
    let shown = if cfg.m >= 4 { square.clone() } else { extracted.clone() };
    let chordal_check = Outcome::new("T5.9", cfg, Hypotheses::new("n >= 3", cfg.n >= 3), claim)
        .holds(!chordality.chordal && (cfg.m < 4 || square.is_some()))
        .observed(json!({
            "chordal": chordality.chordal,
            "extracted_chordless_cycle": extracted.map(|c| g.labels_of(&c.0)),
        }))
        .witness(shown.map(|c| line_witness(WitnessKind::ChordlessCycle, g, &c.0)))
        .finish();
    vec![girth_check, local, table, chordal_check]
}

fn check_cycle_table(model: &ZeroSetModel, line: &LineGraph) -> TheoremCheck {
    let cfg = model.config();
    let g = line.graph();
    let n = g.vertex_count();
    let edges = line.edges();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let sym = Symmetries::new(cfg.n, &EDGE_PAIR_ORDERS);
    let (lens, flows) = cycle_lengths_by_orbit(g, model, &pairs, &sym, |x, y| {
        let [a, b] = edges[x].endpoints();
        let [c, d] = edges[y].endpoints();
        [a, b, c, d]
    });
    let mut by_case = [0usize; 4];
    let mut ambiguous = 0;
    let mut bad = 0;
    let mut first_bad = None;
    let mut first_six = None;
    for (&(x, y), &len) in pairs.iter().zip(&lens) {
        let shared = shares_endpoint(edges[x], edges[y]).expect("distinct edges");
        let p = cross_zero_pattern(model, edges[x], edges[y]).expect("model edges");
        let flags = case_flags(shared, &p);
        if flags.iter().filter(|&&f| f).count() != 1 {
            ambiguous += 1;
        }
        let case = line_cycle_case(model, edges[x], edges[y]).expect("model edges");
        by_case[case.index()] += 1;
        if len != case.expected_length() {
            bad += 1;
            first_bad.get_or_insert((x, y, case, len));
        }
        if case == LineCycleCase::CrossNone {
            first_six.get_or_insert((x, y));
        }
    }
    let shown = first_bad.map(|(x, y, _, _)| (x, y)).or(first_six);
    let witness = shown
        .and_then(|(x, y)| smallest_cycle_through_pair(g, x, y).ok())
        .and_then(|(_, c)| c)
        .map(|c| line_witness(WitnessKind::Cycle, g, &c.0));
    let mut out = Outcome::new(
        "T5.8",
        cfg,
        Hypotheses::new("n >= 3, m >= 3", cfg.n >= 3 && cfg.m >= 3),
        "c = 3 with a shared endpoint; otherwise 4, 5 or 6 as the cross zero-set pattern is rich, single or empty",
    )
    .holds(bad == 0 && ambiguous == 0)
    .observed(json!({
        "pairs": pairs.len(),
        "pairs_with_c_3": by_case[0],
        "pairs_with_c_4": by_case[1],
        "pairs_with_c_5": by_case[2],
        "pairs_with_c_6": by_case[3],
        "pairs_not_in_exactly_one_case": ambiguous,
        "mismatches": bad,
        "first_mismatch": first_bad.map(|(x, y, case, len)| json!({
            "pair": pair_labels(g, x, y),
            "case": case,
            "c": len,
        })),
        "flow_computations": flows,
    }))
    .witness(witness);
    if let Some((x, y, case, len)) = first_bad {
        out = out.note(format!(
            "c({}, {}) = {len}, expected {}",
            g.label(x),
            g.label(y),
            case.expected_length()
        ));
    }
    out.finish()
}

#[cfg(test)]
mod tests {
    use super::super::Status;
    use super::*;
    use crate::line::build_line_graph;
    use crate::model::{build_gamma, ModelConfig};

    fn setup(n: usize, m: usize) -> (ZeroSetModel, LineGraph) {
        let model = build_gamma(&ModelConfig::new(n, m, false)).unwrap();
        let line = build_line_graph(model.graph());
        (model, line)
    }

    fn e(model: &ZeroSetModel, x: &str, y: &str) -> EdgeVertex {
        EdgeVertex::new(model.id_of_label(x).unwrap(), model.id_of_label(y).unwrap())
    }

    #[test]
    fn metric_examples() {
        let (model, line) = setup(3, 2);
        let g = line.graph();
        let id = |x, y| line.id_of(e(&model, x, y)).unwrap();
        // all four cross intersections empty
        let (a, b) = (id("0:1", "0:2"), id("1:1", "1:2"));
        assert_eq!(bfs_distances(g, a)[b], Some(3));
        let covering = id("0,1:1", "1,2:1");
        assert_eq!(crate::graph::eccentricity(g, covering).unwrap(), 2);
        let partial = id("0:1", "0,1:1");
        assert_eq!(crate::graph::eccentricity(g, partial).unwrap(), 3);
        let checks = check_line_metrics(&model, &line);
        assert!(checks.iter().all(|c| c.status == Status::Pass), "{checks:#?}");
        assert!(checks.iter().all(|c| c.witness.as_ref().unwrap().validate(g)));
    }

    #[test]
    fn cycle_case_examples() {
        let (model, line) = setup(3, 3);
        let g = line.graph();
        let shared = (e(&model, "0:1", "0:2"), e(&model, "0:2", "0:3"));
        assert_eq!(line_cycle_case(&model, shared.0, shared.1).unwrap(), LineCycleCase::SharedEndpoint);
        // only {0,1} meets {1,2}
        let single = (e(&model, "0:1", "0,1:1"), e(&model, "1,2:1", "2:1"));
        assert_eq!(line_cycle_case(&model, single.0, single.1).unwrap(), LineCycleCase::CrossSingle);
        let (x, y) = (line.id_of(single.0).unwrap(), line.id_of(single.1).unwrap());
        assert_eq!(smallest_cycle_through_pair(g, x, y).unwrap().0, 5);
    }

    #[test]
    fn cycle_checks_pass_at_three_copies() {
        let (model, line) = setup(3, 3);
        let checks = check_line_cycles(&model, &line);
        let statuses: Vec<Status> = checks.iter().map(|c| c.status).collect();
        assert_eq!(statuses, [Status::Pass; 4]);
        assert_eq!(checks[2].observed["pairs_with_c_3"], 1071);
        assert_eq!(checks[2].observed["pairs_with_c_4"], 3321);
        assert_eq!(checks[2].observed["pairs_with_c_5"], 243);
        assert_eq!(checks[2].observed["pairs_with_c_6"], 216);
    }

    #[test]
    fn same_class_square_is_chordless() {
        let (model, line) = setup(3, 4);
        let sq = same_class_square(&model, &line).unwrap();
        assert!(sq.is_chordless(line.graph()));
        assert_eq!(line.graph().labels_of(&sq.0)[0], "[0:1|0:2]");
        let checks = check_line_cycles(&model, &line);
        assert_eq!(checks[3].status, Status::Pass);
        assert_eq!(checks[3].witness.as_ref().unwrap().kind, WitnessKind::ChordlessCycle);
    }

    #[test]
    fn orbit_table_matches_direct_flow() {
        for m in [2, 3] {
            let (model, line) = setup(3, m);
            let g = line.graph();
            let edges = line.edges();
            let checks = check_line_cycles(&model, &line);
            let mut counts = [0usize; 4];
            for x in 0..g.vertex_count() {
                for y in x + 1..g.vertex_count() {
                    let c = smallest_cycle_through_pair(g, x, y).unwrap().0;
                    let case = line_cycle_case(&model, edges[x], edges[y]).unwrap();
                    assert_eq!(c, case.expected_length());
                    counts[case.index()] += 1;
                }
            }
            let o = &checks[2].observed;
            let seen = [o["pairs_with_c_3"].clone(), o["pairs_with_c_4"].clone(), o["pairs_with_c_5"].clone(), o["pairs_with_c_6"].clone()];
            assert_eq!(seen.map(|v| v.as_u64().unwrap() as usize), counts);
        }
    }
}
