mod common;

use std::collections::BTreeSet;

use dissalpha::gadgets::{
    builtin_witness, canonical_dissociation_set, check_witness, expand_to_Gk, gadget_library, validate_H, GadgetKind,
    HWitness, LeafChoices,
};
use dissalpha::graph::{encode_graph6, parse_graph6, Multigraph};
use dissalpha::recognize::{is_isomorphic, verify_Gk_witness};
use dissalpha::solvers::{max_dissociation_set, max_independent_set};
use dissalpha::{classify, Error};

use common::*;

/// Edge sets from an independent graph6 decoder agree with ours.
#[test]
fn decoder_agrees_with_petgraph() {
    let mut checked = 0;
    for name in [
        "subcubic_connected_n9.g6",
        "bipartite_connected_upto9.g6",
        "cubic_n14.g6",
    ] {
        for line in corpus_text(name).lines().filter(|l| !l.is_empty()) {
            let (n, edges) = petgraph::graph6::from_graph6_representation::<u32>(line.to_string());
            let ours = parse_graph6(line).unwrap();
            assert_eq!(ours.n(), n, "{line}");
            let theirs: BTreeSet<(usize, usize)> = edges
                .into_iter()
                .map(|(a, b)| {
                    let (a, b) = (a as usize, b as usize);
                    (a.min(b), a.max(b))
                })
                .collect();
            let mine: BTreeSet<(usize, usize)> = ours.edges().collect();
            assert_eq!(mine, theirs, "{line}");
            checked += 1;
        }
    }
    assert!(checked > 1500);
}

#[test]
fn cubic_corpus_is_complete_and_clean() {
    for (&n, &count) in CUBIC_ORDERS.iter().zip(&CUBIC_COUNTS) {
        let graphs = cubic_corpus(n);
        assert_eq!(graphs.len(), count, "n = {n}");
        let distinct: BTreeSet<String> = graphs.iter().map(|g| encode_graph6(g).unwrap()).collect();
        assert_eq!(distinct.len(), count);
        for g in &graphs {
            let c = classify(g);
            assert!(c.connected && c.cubic && c.n == n);
        }
    }
}

#[test]
fn small_cubic_graphs_are_pairwise_non_isomorphic() {
    for n in [6, 8, 10] {
        let graphs = cubic_corpus(n);
        for (i, a) in graphs.iter().enumerate() {
            for b in &graphs[i + 1..] {
                assert!(!is_isomorphic(a, b).unwrap());
            }
        }
    }
}

#[test]
fn gadget_library_is_valid() {
    let lib = gadget_library();
    assert_eq!(lib.len(), GadgetKind::ALL.len());
    for g in &lib {
        let alpha = max_independent_set(&g.graph).unwrap().value;
        let expected = match g.kind {
            GadgetKind::Triangle => 1,
            GadgetKind::K4Star => 2,
            GadgetKind::Leaf9A | GadgetKind::Leaf9B => 3,
        };
        assert_eq!(alpha, expected, "{:?}", g.kind);
        assert_eq!(g.attach_points.len(), g.kind.arity());
    }
}

#[test]
fn witnesses_survive_json_round_trip() {
    for name in ["fig3", "k2", "figl"] {
        let w = builtin_witness(name).unwrap();
        assert_eq!(HWitness::from_json(&w.to_json()).unwrap(), w);
        check_witness(&w).unwrap();
    }
}

#[test]
fn both_leaf_gadgets_give_extremal_graphs() {
    for base in ["k2", "figl"] {
        let w = builtin_witness(base).unwrap();
        let leaves: Vec<usize> = (0..w.h.n()).filter(|&v| w.h.degrees()[v] == 1).collect();
        for kind in [GadgetKind::Leaf9A, GadgetKind::Leaf9B] {
            let choices: LeafChoices = leaves.iter().map(|&v| (v, kind)).collect();
            let (g, map) = expand_to_Gk(&w, &choices).unwrap();
            let d = canonical_dissociation_set(&g, &w, &map).unwrap();
            assert_eq!(d.len(), 10 * w.k);
            assert_eq!(max_independent_set(&g).unwrap().value, 6 * w.k, "{base} {kind:?}");
            assert_eq!(max_dissociation_set(&g).unwrap().value, 10 * w.k, "{base} {kind:?}");
            assert!(verify_Gk_witness(&g, &w, &choices).unwrap());
        }
    }
}

#[test]
fn expansion_differs_from_unrelated_cubic_graph() {
    let w = builtin_witness("fig3").unwrap();
    let cubic18 = dissalpha::generators::named_graph("petersen").unwrap().graph;
    assert!(!verify_Gk_witness(&cubic18, &w, &w.leaf_choices).unwrap());
}

fn tweak(name: &str, f: impl FnOnce(&mut serde_json::Value)) -> dissalpha::Result<HWitness> {
    let w = builtin_witness(name).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&w.to_json()).unwrap();
    f(&mut v);
    HWitness::from_json(&v.to_string())
}

#[test]
fn corrupted_witnesses_are_rejected() {
    // reversed arc gives a vertex the wrong out-degree
    let w = tweak("fig3", |v| {
        let id = v["orientation"][0][0].as_u64().unwrap() as usize;
        let head = v["orientation"][0][1].as_u64().unwrap();
        let e = v["edges"][id].clone();
        let other = if e["u"].as_u64().unwrap() == head {
            e["v"].clone()
        } else {
            e["u"].clone()
        };
        v["orientation"][0][1] = other;
    })
    .unwrap();
    assert!(matches!(check_witness(&w), Err(Error::InvalidWitness(_))));
    assert!(expand_to_Gk(&w, &w.leaf_choices).is_err());

    // wrong k breaks the degree equation
    let w = tweak("fig3", |v| v["k"] = 2.into()).unwrap();
    assert!(check_witness(&w).is_err());

    // an empty matching leaves the degree-one vertices uncovered
    let w = tweak("k2", |v| v["M"] = serde_json::json!([])).unwrap();
    assert!(check_witness(&w).is_err());

    // duplicate edge ids are a format error
    let dup = tweak("k2", |v| {
        let e = v["edges"][0].clone();
        v["edges"].as_array_mut().unwrap().push(e);
    });
    assert!(dup.is_err());
}

#[test]
fn validation_reports_failing_clauses() {
    // a 6-cycle has 3·0 + 2·6 + 0 = 12 = 6k for k = 2; edges 0 and 2 are
    // disjoint but joined by edge 1, so they are not an induced matching
    let c6: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    let h = Multigraph::new(6, c6).unwrap();
    let r = validate_H(&h, 2, &[0, 2]);
    assert!(validate_H(&h, 2, &[0, 3]).is_valid());
    let failed: Vec<&str> = r.failures().map(|c| c.clause).collect();
    assert_eq!(failed, vec!["induced"]);

    let r = validate_H(&h, 1, &[0]);
    assert!(r.failures().any(|c| c.clause == "degree_equation"));
}
