mod common;

use std::collections::{BTreeSet, VecDeque};
use std::time::Duration;

use proptest::prelude::*;

use common::{graph_from_mask, oracle_covered, pairs, shortest_paths};
use ohl_core::formats::{emit_graph, emit_labeling, emit_manifest, parse_graph, parse_labeling, parse_manifest};
use ohl_core::graph::{all_pairs_distances, on_some_shortest_path, Graph, VertexId};
use ohl_core::labeling::{greedy_labeling, query_distance, verify, Labeling};
use ohl_core::reduction::{
    build_ohl_instance, edge_restriction, is_normalized, labeling_to_vc, normalize, vc_to_labeling,
    vertex_restriction, TieBreak, VcInstance,
};
use ohl_core::solvers::{
    brute_force_minimum_hub_labeling, brute_force_minimum_vertex_cover, decide_ohl, exact_minimum_hub_labeling,
    exact_minimum_vertex_cover, is_vertex_cover, Decision, SolveLimits, SolveStatus,
};

fn limits() -> SolveLimits {
    SolveLimits::new(u64::MAX, Duration::from_secs(60)).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let m = pairs(n).len();
        (Just(n), 0..1u64 << m)
    })
    .prop_map(|(n, bits)| graph_from_mask(n, bits))
}

fn naive_distance(g: &Graph, u: VertexId, v: VertexId) -> Option<u32> {
    let mut dist = vec![None; g.vertex_count()];
    let mut queue = VecDeque::from([u]);
    dist[u] = Some(0);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y].is_none() {
                dist[y] = Some(dist[x].unwrap() + 1);
                queue.push_back(y);
            }
        }
    }
    dist[v]
}

fn labeling_from_bits(g: &Graph, bits: &[bool]) -> Labeling {
    let d = all_pairs_distances(g);
    let n = g.vertex_count();
    let mut l = Labeling::new(n);
    for v in 0..n {
        for h in 0..n {
            if bits[v * n + h] && d.get(v, h).is_some() {
                l.assign(&d, v, h);
            }
        }
    }
    l
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn distances_match_per_pair_bfs(g in arb_graph(8)) {
        let d = all_pairs_distances(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(d.get(u, v), naive_distance(&g, u, v));
                prop_assert_eq!(d.get(u, v), d.get(v, u));
            }
        }
    }

    #[test]
    fn shortest_path_membership_matches_enumeration(g in arb_graph(7)) {
        let d = all_pairs_distances(&g);
        for u in g.vertices() {
            for v in g.vertices() {
                let on_path: BTreeSet<VertexId> = shortest_paths(&g, u, v).into_iter().flatten().collect();
                for x in g.vertices() {
                    prop_assert_eq!(on_some_shortest_path(&d, u, v, x), on_path.contains(&x));
                }
            }
        }
    }

    #[test]
    fn verify_matches_oracle(g in arb_graph(7), bits in prop::collection::vec(any::<bool>(), 49)) {
        let l = labeling_from_bits(&g, &bits);
        let report = verify(&g, &all_pairs_distances(&g), &l).unwrap();
        for u in g.vertices() {
            for v in u..g.vertex_count() {
                let reported = oracle_covered(&g, &l, u, v).map(|_| !report.uncovered.contains(&(u, v)));
                prop_assert_eq!(oracle_covered(&g, &l, u, v), reported);
            }
        }
        prop_assert!(report.distance_mismatches.is_empty());
    }

    #[test]
    fn valid_labelings_answer_distances(g in arb_graph(8)) {
        let d = all_pairs_distances(&g);
        let l = greedy_labeling(&g, &d);
        prop_assert!(verify(&g, &d, &l).unwrap().valid);
        for u in g.vertices() {
            for v in g.vertices() {
                prop_assert_eq!(query_distance(&l, u, v), d.get(u, v));
            }
        }
    }

    #[test]
    fn exact_matches_brute_force(g in arb_graph(4)) {
        let exact = exact_minimum_hub_labeling(&g, None, limits()).unwrap();
        let brute = brute_force_minimum_hub_labeling(&g, limits()).unwrap();
        prop_assert_eq!(exact.status, SolveStatus::Optimal);
        prop_assert_eq!(exact.size, brute.size);
        let l = exact.solution.unwrap();
        prop_assert!(verify(&g, &all_pairs_distances(&g), &l).unwrap().valid);
        prop_assert!(exact.size <= Some(greedy_labeling(&g, &all_pairs_distances(&g)).size()));
    }

    #[test]
    fn decision_is_monotone_at_the_optimum(g in arb_graph(4)) {
        let opt = exact_minimum_hub_labeling(&g, None, limits()).unwrap().size.unwrap();
        prop_assert!(matches!(decide_ohl(&g, opt, limits()), Decision::Yes(ref l) if l.size() <= opt));
        prop_assert_eq!(decide_ohl(&g, opt - 1, limits()), Decision::No);
    }

    #[test]
    fn vertex_cover_matches_brute_force(g in arb_graph(8)) {
        let exact = exact_minimum_vertex_cover(&g, limits());
        let brute = brute_force_minimum_vertex_cover(&g).unwrap();
        prop_assert_eq!(exact.status, SolveStatus::Optimal);
        prop_assert_eq!(exact.size, brute.size);
        prop_assert!(is_vertex_cover(&g, exact.solution.as_ref().unwrap()));
    }

    #[test]
    fn reduction_round_trip(g0 in arb_graph(4), extra in prop::collection::vec(any::<bool>(), 4)) {
        let tau = exact_minimum_vertex_cover(&g0, limits()).size.unwrap();
        let mut x = exact_minimum_vertex_cover(&g0, limits()).solution.unwrap();
        x.extend(g0.vertices().filter(|&v| extra[v]));
        let (ohl, gm) = build_ohl_instance(&VcInstance { graph: g0.clone(), budget: x.len() }).unwrap();
        let g = &ohl.graph;
        let tb = TieBreak::for_cover(&g0, &x).unwrap();
        let l = vc_to_labeling(&gm, &x, &tb).unwrap();
        prop_assert!(verify(g, &all_pairs_distances(g), &l).unwrap().valid);
        prop_assert_eq!(l.size(), ohl.budget);
        prop_assert!(is_normalized(g, &l, &gm).unwrap().normalized);
        prop_assert_eq!(labeling_to_vc(&l, &gm, &tb).unwrap(), x.clone());
        for v in g0.vertices() {
            prop_assert!(vertex_restriction(&l, &gm, v).unwrap().len() >= 2);
        }
        for (u, v) in g0.edges() {
            prop_assert!(edge_restriction(&l, &gm, u, v).unwrap().len() >= 3);
        }
        // any valid labeling yields some cover
        let greedy = greedy_labeling(g, &all_pairs_distances(g));
        let normalized = normalize(g, &greedy, &gm).unwrap();
        let cover = labeling_to_vc(&normalized, &gm, &TieBreak::canonical(&g0)).unwrap();
        prop_assert!(is_vertex_cover(&g0, &cover));
        prop_assert!(cover.len() >= tau);
    }

    #[test]
    fn formats_round_trip(g0 in arb_graph(5), k in 0usize..5) {
        let text = emit_graph(&g0).unwrap();
        prop_assert_eq!(parse_graph(&text).unwrap(), g0.clone());
        prop_assert_eq!(emit_graph(&parse_graph(&text).unwrap()).unwrap(), text);
        let (ohl, gm) = build_ohl_instance(&VcInstance { graph: g0, budget: k }).unwrap();
        let manifest = emit_manifest(&gm);
        let back = parse_manifest(&manifest).unwrap();
        prop_assert_eq!(emit_manifest(&back), manifest);
        prop_assert_eq!(back.constructed(), &ohl.graph);
        prop_assert_eq!(back.budget(), ohl.budget);
        let l = greedy_labeling(&ohl.graph, &all_pairs_distances(&ohl.graph));
        let text = emit_labeling(&l, &ohl.graph);
        let parsed = parse_labeling(&text, &ohl.graph).unwrap();
        prop_assert_eq!(emit_labeling(&parsed, &ohl.graph), text);
        prop_assert_eq!(parsed, l);
    }
}
