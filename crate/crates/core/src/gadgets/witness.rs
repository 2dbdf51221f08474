use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::library::GadgetKind;
use crate::error::{Error, Result};
use crate::graph::Multigraph;

/// Which order-9 gadget replaces each degree-1 vertex; absent entries default
/// to [`GadgetKind::Leaf9A`].
pub type LeafChoices = BTreeMap<usize, GadgetKind>;

/// A multigraph `H` with parameter `k`, a distinguished matching `M` (edge
/// ids) and an orientation of the remaining edges, given as `(edge id, head)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WitnessFile", into = "WitnessFile")]
pub struct HWitness {
    pub h: Multigraph,
    pub k: usize,
    pub m: Vec<usize>,
    pub orientation: Vec<(usize, usize)>,
    pub leaf_choices: LeafChoices,
}

#[derive(Serialize, Deserialize)]
struct EdgeEntry {
    id: usize,
    u: usize,
    v: usize,
}

/// On-disk layout: explicit edge ids so that `M` and the orientation can
/// refer to parallel edges unambiguously.
#[derive(Serialize, Deserialize)]
struct WitnessFile {
    n: usize,
    k: usize,
    edges: Vec<EdgeEntry>,
    #[serde(rename = "M")]
    m: Vec<usize>,
    #[serde(default)]
    orientation: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    leaf_choices: LeafChoices,
}

impl TryFrom<WitnessFile> for HWitness {
    type Error = Error;

    fn try_from(f: WitnessFile) -> Result<Self> {
        let count = f.edges.len();
        let mut slots: Vec<Option<(usize, usize)>> = vec![None; count];
        for e in &f.edges {
            match slots.get_mut(e.id) {
                Some(slot @ None) => *slot = Some((e.u, e.v)),
                Some(Some(_)) => return Err(Error::InvalidWitness(format!("duplicate edge id {}", e.id))),
                None => {
                    return Err(Error::InvalidWitness(format!(
                        "edge ids must be 0..{count}, found {}",
                        e.id
                    )))
                }
            }
        }
        let edges = slots.into_iter().map(|s| s.expect("all ids filled")).collect();
        let h = Multigraph::new(f.n, edges).map_err(|e| Error::InvalidWitness(e.to_string()))?;
        Ok(HWitness {
            h,
            k: f.k,
            m: f.m,
            orientation: f.orientation,
            leaf_choices: f.leaf_choices,
        })
    }
}

impl From<HWitness> for WitnessFile {
    fn from(w: HWitness) -> Self {
        WitnessFile {
            n: w.h.n(),
            k: w.k,
            edges: w
                .h
                .edges()
                .iter()
                .enumerate()
                .map(|(id, &(u, v))| EdgeEntry { id, u, v })
                .collect(),
            m: w.m,
            orientation: w.orientation,
            leaf_choices: w.leaf_choices,
        }
    }
}

impl HWitness {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidWitness(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("witness serializes")
    }

    /// `covered[v]` is true when `v` is an endpoint of an edge of `M`.
    /// Out-of-range ids are ignored here; validation reports them.
    pub fn covered(&self) -> Vec<bool> {
        covered(&self.h, &self.m)
    }
}

pub(super) fn covered(h: &Multigraph, m: &[usize]) -> Vec<bool> {
    let mut covered = vec![false; h.n()];
    for &id in m.iter().filter(|&&id| id < h.edges().len()) {
        let (u, v) = h.edge(id);
        covered[u] = true;
        covered[v] = true;
    }
    covered
}

const WITNESS_FIG3: &str = include_str!("../../data/witnesses/fig3.json");
const WITNESS_K2: &str = include_str!("../../data/witnesses/k2.json");
const WITNESS_FIGL: &str = include_str!("../../data/witnesses/figl.json");

pub const WITNESS_NAMES: &[&str] = &["fig3", "k2", "figl"];

/// The shipped witnesses: the six-triangle example, the single edge, and the
/// order-36 example (which uses the second leaf gadget).
pub fn builtin_witness(name: &str) -> Result<HWitness> {
    let text = match name {
        "fig3" => WITNESS_FIG3,
        "k2" => WITNESS_K2,
        "figl" => WITNESS_FIGL,
        other => return Err(Error::UnknownName(other.to_string())),
    };
    HWitness::from_json(text)
}
