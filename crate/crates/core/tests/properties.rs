use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use dissalpha::bounds::{max_weighted_term, sample_thm2_parts, sample_thm2_set};
use dissalpha::gadgets::{brute_force_orientation, find_orientation};
use dissalpha::generators::{build_calG, random_calg_spec};
use dissalpha::graph::{encode_graph6, parse_graph6, Multigraph};
use dissalpha::recognize::{decompose_calG, is_isomorphic};
use dissalpha::solvers::{max_diss_max_isolated, max_dissociation_set, max_independent_set, oracle_diss, oracle_mis};
use dissalpha::{classify, induced_subgraph, Graph, VertexSet};

fn graph_upto(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let all = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = all.zip(bits).filter_map(|(e, b)| b.then_some(e)).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn graph_with_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    graph_upto(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::vec(any::<bool>(), n).prop_map(move |bits| {
            let s = VertexSet::from_vertices(n, (0..n).filter(|&v| bits[v])).unwrap();
            (g.clone(), s)
        })
    })
}

fn graph_with_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph_upto(max_n).prop_flat_map(|g| {
        let n = g.n();
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(move |perm| (g.clone(), perm))
    })
}

/// Small loopless multigraphs with a chosen edge subset standing in for M.
fn multigraph_with_m() -> impl Strategy<Value = (Multigraph, Vec<usize>)> {
    (2usize..=6).prop_flat_map(|n| {
        let edge = (0..n, 0..n).prop_filter("loop", |(u, v)| u != v);
        proptest::collection::vec(edge, 1..=12).prop_flat_map(move |edges| {
            let ids: Vec<usize> = (0..edges.len()).collect();
            let m = subsequence(ids, 0..=edges.len().min(3));
            (Just(Multigraph::new(n, edges).unwrap()), m)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 256,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn graph6_round_trips(g in graph_upto(40)) {
        let text = encode_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn full_induced_subgraph_is_identity(g in graph_upto(20)) {
        prop_assert_eq!(induced_subgraph(&g, &g.vertex_set()).unwrap(), g);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges((g, s) in graph_with_subset(20)) {
        let h = induced_subgraph(&g, &s).unwrap();
        let inner = g.edges().filter(|&(u, v)| s.contains(u) && s.contains(v)).count();
        prop_assert_eq!(h.n(), s.len());
        prop_assert_eq!(h.edge_count(), inner);
    }

    #[test]
    fn bipartite_implies_triangle_free(g in graph_upto(14)) {
        let c = classify(&g);
        prop_assert!(!c.bipartite || c.triangle_free);
    }

    #[test]
    fn relabelling_preserves_invariants((g, perm) in graph_with_perm(12)) {
        let h = g.relabel(&perm).unwrap();
        prop_assert!(is_isomorphic(&g, &h).unwrap());
        prop_assert_eq!(classify(&g), classify(&h));
        prop_assert_eq!(
            max_independent_set(&g).unwrap().value,
            max_independent_set(&h).unwrap().value
        );
        prop_assert_eq!(
            max_dissociation_set(&g).unwrap().value,
            max_dissociation_set(&h).unwrap().value
        );
    }

    #[test]
    fn solvers_agree_with_brute_force(g in graph_upto(13)) {
        let mis = max_independent_set(&g).unwrap();
        let diss = max_dissociation_set(&g).unwrap();
        prop_assert!(g.is_independent(&mis.witness));
        prop_assert!(g.is_dissociation_set(&diss.witness));
        prop_assert_eq!(mis.value, oracle_mis(&g).unwrap());
        prop_assert_eq!(diss.value, oracle_diss(&g).unwrap());
        prop_assert!(mis.value <= diss.value && diss.value <= 2 * mis.value);
    }

    #[test]
    fn certificate_complement_is_dissociation(g in graph_upto(12)) {
        prop_assume!(g.max_degree() <= 3);
        let c = max_diss_max_isolated(&g).unwrap();
        prop_assert!(c.complement_max_degree <= 1);
    }

    #[test]
    fn flow_orientation_matches_exhaustive((h, m) in multigraph_with_m()) {
        let flow = find_orientation(&h, &m);
        let brute = brute_force_orientation(&h, &m);
        prop_assert_eq!(flow.is_some(), brute.is_some());
    }

    #[test]
    fn random_family_members_are_extremal(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let spec = random_calg_spec(&mut rng, 6);
        let m = build_calG(&spec).unwrap();
        let g = &m.graph;
        let alpha = max_independent_set(g).unwrap().value;
        prop_assert_eq!(2 * alpha, max_dissociation_set(g).unwrap().value);
        prop_assert!(g.is_dissociation_set(&m.marked) && m.marked.len() == 2 * alpha);
        prop_assert!(decompose_calG(g).unwrap().is_some());
    }

    #[test]
    fn sampled_sets_are_independent(g in graph_upto(16), seed in any::<u64>()) {
        let d = max_dissociation_set(&g).unwrap().witness;
        let set = sample_thm2_set(&g, &d, seed).unwrap();
        prop_assert!(g.is_independent(&set));
        let parts = sample_thm2_parts(&g, &d, seed).unwrap();
        // I1 picks inside the matched part of D, I2 avoids it
        let matched = |v: usize| g.neighbors(v).iter().any(|&w| d.contains(w));
        prop_assert!(parts.i1.iter().all(|v| d.contains(v) && matched(v)));
        prop_assert!(parts.i2.iter().all(|v| !(d.contains(v) && matched(v))));
        prop_assert_eq!(parts.union(), set);
    }

    #[test]
    fn weighted_maximum_sits_at_delta(delta in 3u32..=16) {
        prop_assert_eq!(max_weighted_term(delta), (1u128 << delta) * delta as u128);
    }
}
