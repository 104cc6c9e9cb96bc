use itertools::Itertools;
use proptest::prelude::*;

use zeroset_graph::export::{compute_invariants, GraphDescriptor};
use zeroset_graph::graph::naive::{naive_chordal, naive_cycle_through_pair, naive_girth};
use zeroset_graph::graph::{
    bfs_distances, dominates, domination_number, girth, is_chordal, is_perfect_elimination,
    smallest_cycle_through_pair, Distance, Domination,
};
use zeroset_graph::{build_gamma, build_line_graph, Graph, ModelConfig};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges = pairs.iter().zip(keep).filter(|(_, k)| *k).map(|(e, _)| *e);
            Graph::unlabeled(n, edges).unwrap()
        })
    })
}

fn arb_config() -> impl Strategy<Value = ModelConfig> {
    (2usize..=3, 1usize..=3, any::<bool>()).prop_map(|(n, m, z)| ModelConfig::new(n, m, z))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn vertex_count_formula(cfg in arb_config()) {
        let model = build_gamma(&cfg).unwrap();
        let expected = cfg.m * ((1 << cfg.n) - 2) + usize::from(cfg.include_zero);
        prop_assert_eq!(model.graph().vertex_count(), expected);
        prop_assert_eq!(cfg.vertex_count(), expected);
    }

    #[test]
    fn adjacency_is_meeting_zero_sets(cfg in arb_config()) {
        let model = build_gamma(&cfg).unwrap();
        let g = model.graph();
        for (u, v) in (0..g.vertex_count()).tuple_combinations() {
            prop_assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            prop_assert_eq!(g.has_edge(u, v), model.zero_set(u).meets(model.zero_set(v)));
        }
        // copies of one class have identical neighborhoods outside the class
        for (u, v) in (0..g.vertex_count()).tuple_combinations() {
            if model.zero_set(u) == model.zero_set(v) {
                for w in (0..g.vertex_count()).filter(|&w| w != u && w != v) {
                    prop_assert_eq!(g.has_edge(u, w), g.has_edge(v, w));
                }
            }
        }
    }

    #[test]
    fn distances_form_a_metric(g in arb_graph(9)) {
        let d: Vec<Vec<Distance>> =
            (0..g.vertex_count()).map(|u| bfs_distances(&g, u).into_iter().map(Distance::from).collect()).collect();
        for u in 0..g.vertex_count() {
            prop_assert_eq!(d[u][u], Distance::Finite(0));
            for v in 0..g.vertex_count() {
                prop_assert_eq!(d[u][v], d[v][u]);
                prop_assert_eq!(d[u][v] == Distance::Finite(1), g.has_edge(u, v));
                for w in 0..g.vertex_count() {
                    if let (Some(a), Some(b)) = (d[u][w].finite(), d[w][v].finite()) {
                        prop_assert!(d[u][v] <= Distance::Finite(a + b));
                    }
                }
            }
        }
    }

    #[test]
    fn cycles_agree_with_exhaustive_search(g in arb_graph(9)) {
        prop_assert_eq!(girth(&g), naive_girth(&g).unwrap());
        for (u, v) in (0..g.vertex_count()).tuple_combinations() {
            let (c, w) = smallest_cycle_through_pair(&g, u, v).unwrap();
            prop_assert_eq!(c, naive_cycle_through_pair(&g, u, v).unwrap());
            if let Some(w) = w {
                prop_assert!(w.validate(&g) && w.contains(u) && w.contains(v));
                prop_assert_eq!(Distance::Finite(w.len()), c);
            }
        }
    }

    #[test]
    fn chordality_agrees_with_exhaustive_search(g in arb_graph(9)) {
        let result = is_chordal(&g);
        prop_assert_eq!(result.chordal, naive_chordal(&g).unwrap());
        match result.witness {
            zeroset_graph::graph::ChordalWitness::PerfectElimination(order) => {
                prop_assert!(is_perfect_elimination(&g, &order));
            }
            zeroset_graph::graph::ChordalWitness::ChordlessCycle(c) => {
                prop_assert!(c.len() >= 4 && c.is_chordless(&g));
            }
        }
    }

    #[test]
    fn dominating_sets_are_minimum(g in arb_graph(8)) {
        match domination_number(&g, 8).unwrap() {
            Domination::Found { size, set } => {
                prop_assert_eq!(set.len(), size);
                prop_assert!(dominates(&g, &set).unwrap());
                if size > 0 {
                    let smaller = (0..g.vertex_count()).combinations(size - 1).any(|s| dominates(&g, &s).unwrap());
                    prop_assert!(!smaller);
                }
            }
            Domination::Exceeds { .. } => prop_assert!(false, "search bound covers every vertex"),
        }
    }

    #[test]
    fn line_graph_edge_count_is_sum_of_degree_pairs(g in arb_graph(9)) {
        let line = build_line_graph(&g);
        prop_assert_eq!(line.graph().vertex_count(), g.edge_count());
        let pairs: usize = (0..g.vertex_count()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
        prop_assert_eq!(line.graph().edge_count(), pairs);
    }

    #[test]
    fn descriptor_round_trip_preserves_invariants(cfg in arb_config(), line in any::<bool>()) {
        let model = build_gamma(&cfg).unwrap();
        let (desc, g) = if line {
            let l = build_line_graph(model.graph());
            (GraphDescriptor::of_line(&model, &l), l.graph().clone())
        } else {
            (GraphDescriptor::of_model(&model), model.graph().clone())
        };
        prop_assume!(g.vertex_count() > 0);
        let back = GraphDescriptor::from_json(&desc.to_json().unwrap()).unwrap();
        prop_assert_eq!(&back, &desc);
        let rebuilt = back.to_graph().unwrap();
        prop_assert_eq!(compute_invariants(&rebuilt, 3).unwrap(), compute_invariants(&g, 3).unwrap());
    }
}
