//! Recognition of the extremal families and a small isomorphism test.

mod decompose;
mod iso;

pub use decompose::{decompose_calG, is_basic_extremal, validate_decomposition, CalGDecomposition, DecompositionBlock};
pub use iso::{find_isomorphism, is_isomorphic, is_isomorphic_marked, ISO_MAX_ORDER};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadgets::{expand_to_Gk, HWitness, LeafChoices};
use crate::graph::{classify, Graph, VertexSet};
use crate::solvers::{max_diss_max_isolated, max_dissociation_set, max_independent_set};

/// Whether `g` is (isomorphic to) the expansion of the witness.
pub fn verify_Gk_witness(g: &Graph, w: &HWitness, leaf_choices: &LeafChoices) -> Result<bool> {
    let (expanded, _) = expand_to_Gk(w, leaf_choices)?;
    if g.n() != expanded.n() {
        return Ok(false);
    }
    is_isomorphic(g, &expanded)
}

/// Certificate of a connected cubic graph with `5α = 3·diss`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalProfile {
    pub n: usize,
    pub k: usize,
    pub alpha: usize,
    pub diss: usize,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub set: VertexSet,
}

/// For a connected cubic `g` of order at least 6: `None` unless
/// `5α(g) = 3·diss(g)`. For an extremal graph the order must be `18k`, and a
/// maximum dissociation set with the most isolated vertices must have
/// `p = 0`, `q = 5k`, `r = 4k`, `s = 2k` and `α = r + s`; anything else is
/// returned as [`Error::IdentityViolated`] carrying the full certificate.
pub fn theorem1_extremal_profile(g: &Graph) -> Result<Option<ExtremalProfile>> {
    let class = classify(g);
    if !(class.connected && class.cubic && g.n() >= 6) {
        return Err(Error::InvalidParameter(
            "profile needs a connected cubic graph of order >= 6".into(),
        ));
    }
    let alpha = max_independent_set(g)?.value;
    let diss = max_dissociation_set(g)?.value;
    if 5 * alpha != 3 * diss {
        return Ok(None);
    }
    let n = g.n();
    let c = max_diss_max_isolated(g)?;
    let k = n / 18;
    let profile = ExtremalProfile {
        n,
        k,
        alpha,
        diss,
        p: c.p,
        q: c.q,
        r: c.r,
        s: c.s,
        set: c.set,
    };
    let holds = n.is_multiple_of(18)
        && profile.p == 0
        && profile.q == 5 * k
        && profile.r == 4 * k
        && profile.s == 2 * k
        && alpha == n / 3
        && alpha == profile.r + profile.s;
    if !holds {
        return Err(Error::IdentityViolated(
            serde_json::to_string(&profile).expect("profile serializes"),
        ));
    }
    Ok(Some(profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gadgets::builtin_witness;
    use crate::generators::{gen_complete, named_graph, petersen};

    #[test]
    fn six_triangle_profile() {
        let g = named_graph("fig3").unwrap().graph;
        let p = theorem1_extremal_profile(&g).unwrap().unwrap();
        assert_eq!((p.k, p.p, p.q, p.r, p.s, p.alpha), (1, 0, 5, 4, 2, 6));
    }

    #[test]
    fn petersen_is_not_extremal() {
        assert_eq!(theorem1_extremal_profile(&petersen()).unwrap(), None);
        assert!(theorem1_extremal_profile(&gen_complete(4).unwrap()).is_err());
    }

    #[test]
    fn witness_against_wrong_order() {
        let w = builtin_witness("fig3").unwrap();
        assert!(!verify_Gk_witness(&gen_complete(4).unwrap(), &w, &w.leaf_choices).unwrap());
    }

    #[test]
    fn drawn_examples_are_expansions() {
        for (name, wname) in [("fig3", "fig3"), ("figl", "figl")] {
            let ng = named_graph(name).unwrap();
            let w = builtin_witness(wname).unwrap();
            let (g, map) = crate::gadgets::expand_to_Gk(&w, &w.leaf_choices).unwrap();
            let d = crate::gadgets::canonical_dissociation_set(&g, &w, &map).unwrap();
            assert!(verify_Gk_witness(&ng.graph, &w, &w.leaf_choices).unwrap(), "{name}");
            let marked = ng.marked.unwrap();
            assert!(is_isomorphic_marked(&g, &d, &ng.graph, &marked).unwrap(), "{name}");
        }
    }
}
