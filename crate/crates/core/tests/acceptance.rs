//! End-to-end acceptance criteria. Each criterion prints one line with its
//! verdict and runtime; the process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use zeroset_graph::graph::naive::naive_cycles_from;
use zeroset_graph::graph::{
    bfs_distances, connected_components, is_chordal, is_clique, smallest_cycle_through_pair,
    ChordalWitness,
};
use zeroset_graph::verify::{
    check_chordality_gamma, check_complemented,
    check_connectivity_diameter, check_cycle_pair_gamma, check_distance_characterization,
    check_domination, check_line_cycles, check_line_metrics, check_oracle, check_radius,
    check_triangulation, check_vnr_condition, line_cycle_case, run_all, Status, Sweep,
    TheoremCheck, DEFAULT_SEED,
};
use zeroset_graph::{build_gamma, build_line_graph, ModelConfig, ZeroSetModel};

type Verdict = Result<(), String>;

fn model(n: usize, m: usize) -> ZeroSetModel {
    build_gamma(&ModelConfig::new(n, m, false)).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn passes(c: &TheoremCheck) -> Verdict {
    ensure(c.status == Status::Pass, || {
        format!("{} at {:?}: {} ({:?})", c.id, c.config.map(|x| x.to_string()), c.status, c.note)
    })?;
    if let Some(w) = &c.witness {
        let g = zeroset_graph::verify::witness_graph(c).unwrap().unwrap();
        ensure(w.validate(&g), || format!("{} witness does not validate", c.id))?;
    }
    Ok(())
}

fn connectivity_diameter_radius() -> Verdict {
    for n in 3..=5 {
        for m in 1..=3 {
            let md = model(n, m);
            for c in [check_connectivity_diameter(&md), check_distance_characterization(&md), check_radius(&md)] {
                passes(&c)?;
            }
            let g = md.graph();
            ensure(connected_components(g).len() == 1, || format!("n={n} m={m} disconnected"))?;
            // independent all-pairs scan of the distance dichotomy
            for u in 0..g.vertex_count() {
                let d = bfs_distances(g, u);
                ensure(d.iter().all(|x| x.is_some_and(|k| k <= 2)), || format!("ecc > 2 at n={n} m={m}"))?;
                for v in u + 1..g.vertex_count() {
                    let meets = md.zero_set(u).meets(md.zero_set(v));
                    ensure(d[v] == Some(if meets { 1 } else { 2 }), || format!("pair {u},{v} at n={n} m={m}"))?;
                }
            }
        }
    }
    for m in 1..=6 {
        let md = model(2, m);
        passes(&check_connectivity_diameter(&md))?;
        let comps = connected_components(md.graph());
        ensure(comps.len() == 2 && comps.iter().all(|c| c.len() == m && is_clique(md.graph(), c)), || {
            format!("n=2 m={m} components {comps:?}")
        })?;
    }
    Ok(())
}

fn triangles_and_girth() -> Verdict {
    for n in 2..=4 {
        for c in check_triangulation(&model(n, 3)) {
            passes(&c)?;
        }
    }
    Ok(())
}

fn cycle_through_pairs() -> Verdict {
    for n in 3..=4 {
        for m in 2..=3 {
            let md = model(n, m);
            passes(&check_cycle_pair_gamma(&md))?;
            if n == 3 {
                let g = md.graph();
                let cap = g.vertex_count();
                for u in 0..cap {
                    let slow = naive_cycles_from(g, u, cap).unwrap();
                    for v in u + 1..cap {
                        let fast = smallest_cycle_through_pair(g, u, v).unwrap().0;
                        let expect = if g.has_edge(u, v) { 3 } else { 4 };
                        ensure(fast == slow[v] && fast == expect, || {
                            format!("c({},{}) flow {fast} naive {} at m={m}", g.label(u), g.label(v), slow[v])
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn chordality() -> Verdict {
    for n in 2..=3 {
        for m in [1, 4] {
            let md = model(n, m);
            passes(&check_chordality_gamma(&md))?;
            ensure(is_chordal(md.graph()).chordal, || format!("n={n} m={m} not chordal"))?;
        }
    }
    for n in 4..=5 {
        let md = model(n, 1);
        passes(&check_chordality_gamma(&md))?;
        let result = is_chordal(md.graph());
        let ChordalWitness::ChordlessCycle(c) = result.witness else {
            return Err(format!("n={n}: no chordless cycle extracted"));
        };
        ensure(c.len() == 4 && c.is_chordless(md.graph()), || format!("n={n}: extracted {:?}", c.0))?;
    }
    Ok(())
}

fn domination_and_partners() -> Verdict {
    for n in 3..=4 {
        let at3 = check_complemented(&model(n, 3));
        passes(&at3[0])?;
        ensure(at3[0].observed["orthogonal_pairs"] == 0, || format!("orthogonal pair at n={n} m=3"))?;
        let md = model(n, 2);
        for c in check_domination(&md) {
            passes(&c)?;
        }
        let dom = &check_domination(&md)[0];
        ensure(dom.observed["domination_number"] == 2 && dom.observed["complementary_witness"] == true, || {
            format!("domination at n={n}: {}", dom.observed)
        })?;
        let partners = check_vnr_condition(&md);
        passes(&partners)?;
        ensure(partners.observed["vertices_with_partner"] == md.vertices().len(), || "partner count".into())?;
    }
    Ok(())
}

fn line_metrics() -> Verdict {
    for n in 3..=4 {
        let md = model(n, 2);
        let line = build_line_graph(md.graph());
        for c in check_line_metrics(&md, &line) {
            passes(&c)?;
        }
    }
    Ok(())
}

fn line_cycles() -> Verdict {
    let md = model(3, 3);
    let line = build_line_graph(md.graph());
    for c in check_line_cycles(&md, &line) {
        passes(&c)?;
    }
    // the case table again, with one flow per pair
    let g = line.graph();
    let edges = line.edges();
    let mut counts = [0usize; 4];
    for x in 0..g.vertex_count() {
        for y in x + 1..g.vertex_count() {
            let case = line_cycle_case(&md, edges[x], edges[y]).unwrap();
            let c = smallest_cycle_through_pair(g, x, y).unwrap().0;
            ensure(c == case.expected_length(), || format!("c({}, {}) = {c}, case {case:?}", g.label(x), g.label(y)))?;
            counts[case.expected_length() - 3] += 1;
        }
    }
    ensure(counts == [1071, 3321, 243, 216], || format!("case counts {counts:?}"))?;
    let md4 = model(3, 4);
    let line4 = build_line_graph(md4.graph());
    let non_chordal = &check_line_cycles(&md4, &line4)[3];
    passes(non_chordal)?;
    let w = non_chordal.witness.as_ref().unwrap();
    ensure(w.labels == ["[0:1|0:2]", "[0:2|0:3]", "[0:3|0:4]", "[0:1|0:4]"], || format!("{:?}", w.labels))
}

fn oracle_equivalence() -> Verdict {
    let c = check_oracle(DEFAULT_SEED);
    passes(&c)?;
    ensure(c.observed["random_graphs"] == 200, || "random corpus size".into())?;
    ensure(c.observed["pairs_compared"].as_u64().unwrap_or(0) > 0, || "no pairs".into())
}

fn anomaly_ledger() -> Verdict {
    let report = run_all(&Sweep::standard(true)).map_err(|e| e.to_string())?;
    ensure(report.summary.fail == 0, || format!("{} failures", report.summary.fail))?;
    let seen: BTreeSet<&str> = report.checks.iter().filter_map(|c| c.anomaly.as_deref()).collect();
    let expected = BTreeSet::from(["A1", "A2", "ZERO_DOMINATION", "ZERO_PARTNER", "ZERO_RADIUS"]);
    ensure(seen == expected, || format!("anomalies {seen:?}"))?;
    let by_id = |code: &str| -> BTreeSet<&str> {
        report.checks.iter().filter(|c| c.anomaly.as_deref() == Some(code)).map(|c| c.id.as_str()).collect()
    };
    for (code, id) in [("A1", "T2.1"), ("ZERO_RADIUS", "T2.4"), ("ZERO_DOMINATION", "T4.1"), ("ZERO_PARTNER", "T4.3"), ("A2", "T4.4")] {
        ensure(by_id(code) == BTreeSet::from([id]), || format!("{code} raised by {:?}", by_id(code)))?;
    }
    let radius = report.checks.iter().filter(|c| c.anomaly.as_deref() == Some("ZERO_RADIUS"));
    for c in radius {
        ensure(c.observed["radius"] == 1, || "radius anomaly without radius 1".into())?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Verdict, u64); 9] = [
        ("connectivity, diameter, radius, distance dichotomy", connectivity_diameter_radius, 10),
        ("girth and triangles", triangles_and_girth, 5),
        ("cycles through pairs in the model", cycle_through_pairs, 60),
        ("chordality threshold", chordality, 5),
        ("complementedness, domination, partners", domination_and_partners, 30),
        ("line-graph distances, eccentricities, common neighbors", line_metrics, 120),
        ("line-graph girth, triangles, cycle table, non-chordality", line_cycles, 120),
        ("agreement with exhaustive oracles", oracle_equivalence, 60),
        ("anomaly set with the zero vertex", anomaly_ledger, 10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = run();
        let elapsed = start.elapsed();
        let verdict = verdict.and_then(|_| {
            ensure(elapsed < Duration::from_secs(*budget), || format!("took {elapsed:.1?}, budget {budget}s"))
        });
        match &verdict {
            Ok(()) => println!("criterion {}: PASS  {name} ({elapsed:.2?})", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name} ({elapsed:.2?}): {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        println!("failed criteria: {failed:?}");
        ExitCode::FAILURE
    }
}
