use serde::Serialize;

use super::diss::{DissSearch, Objective};
use super::{max_dissociation_set_with_budget, Budget};
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, Graph, VertexSet};

/// A maximum dissociation set `set` together with the component statistics
/// of `G[set]` (`p` isolated vertices, `q` edges) and of the complement
/// (`r` isolated vertices, `s` components of order two).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DissCertificate {
    pub set: VertexSet,
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    /// Largest degree in `G[V \ set]`.
    pub complement_max_degree: usize,
}

impl DissCertificate {
    pub fn size(&self) -> usize {
        self.p + 2 * self.q
    }
}

/// Counts isolated vertices and order-2 components.
fn small_components(g: &Graph, set: &VertexSet) -> Result<(usize, usize, usize)> {
    let h = induced_subgraph(g, set)?;
    let comps = h.components();
    let isolated = comps.iter().filter(|c| c.len() == 1).count();
    let pairs = comps.iter().filter(|c| c.len() == 2).count();
    Ok((isolated, pairs, h.max_degree()))
}

/// Maximum dissociation set with the most isolated vertices in `G[D]`;
/// remaining ties go to the lexicographically smallest set.
///
/// For subcubic graphs the complement of such a set is itself a
/// dissociation set; a violation is reported as an error.
pub fn max_diss_max_isolated(g: &Graph) -> Result<DissCertificate> {
    max_diss_max_isolated_with_budget(g, Budget::unlimited())
}

pub fn max_diss_max_isolated_with_budget(g: &Graph, budget: Budget) -> Result<DissCertificate> {
    let diss = max_dissociation_set_with_budget(g, budget)?.value;
    let found = DissSearch::solve(g, Objective::size_then_isolated(g.n()), diss, budget)?;
    if found.size != diss {
        return Err(Error::IdentityViolated(format!(
            "second phase found size {} but diss = {diss}",
            found.size
        )));
    }
    let set = VertexSet::from_mask(g.n(), found.set);
    let (p, q, inner) = small_components(g, &set)?;
    debug_assert!(inner <= 1 && p + 2 * q == diss);
    let (r, s, complement_max_degree) = small_components(g, &set.complement())?;
    if g.max_degree() <= 3 && complement_max_degree > 1 {
        return Err(Error::IdentityViolated(format!(
            "complement of {set:?} has maximum degree {complement_max_degree}"
        )));
    }
    Ok(DissCertificate {
        set,
        p,
        q,
        r,
        s,
        complement_max_degree,
    })
}

/// Edge counts between `D` and `V \ D` in a cubic graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EdgeCountRecord {
    pub cut: usize,
    /// `3p + 4q`
    pub from_set: usize,
    /// `3r + 4s`
    pub from_complement: usize,
}

pub fn edge_count_identity(g: &Graph, c: &DissCertificate) -> Result<EdgeCountRecord> {
    if g.n() == 0 || g.degrees().iter().any(|&d| d != 3) {
        return Err(Error::InvalidParameter(
            "edge count identity needs a cubic graph".into(),
        ));
    }
    let cut = c
        .set
        .iter()
        .map(|v| g.neighbors(v).iter().filter(|&&w| !c.set.contains(w)).count())
        .sum();
    let rec = EdgeCountRecord {
        cut,
        from_set: 3 * c.p + 4 * c.q,
        from_complement: 3 * c.r + 4 * c.s,
    };
    if rec.cut != rec.from_set || rec.cut != rec.from_complement {
        return Err(Error::IdentityViolated(format!(
            "cut {} vs 3p+4q = {} vs 3r+4s = {}",
            rec.cut, rec.from_set, rec.from_complement
        )));
    }
    Ok(rec)
}
