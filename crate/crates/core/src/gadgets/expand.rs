use serde::Serialize;

use super::library::{gadget, Gadget, GadgetKind};
use super::validate::{orientation_problems, validate_H};
use super::witness::{HWitness, LeafChoices};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Where each vertex and edge of `H` ended up in the expanded graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionMap {
    /// Gadget used for each vertex of `H`.
    pub kinds: Vec<GadgetKind>,
    /// Vertices of the gadget replacing each vertex of `H`, in gadget-local
    /// order.
    pub vertex_image: Vec<Vec<usize>>,
    /// For edge `id = (u, v)` of `H`: the pair (vertex in `u`'s gadget,
    /// vertex in `v`'s gadget).
    pub edge_image: Vec<(usize, usize)>,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidWitness(msg.into())
}

/// Validates every clause of the witness, orientation included.
pub fn check_witness(w: &HWitness) -> Result<()> {
    let report = validate_H(&w.h, w.k, &w.m);
    if !report.is_valid() {
        let failed: Vec<String> = report
            .failures()
            .map(|c| format!("{}: {}", c.clause, c.detail))
            .collect();
        return Err(invalid(failed.join("; ")));
    }
    let problems = orientation_problems(&w.h, &w.m, &w.orientation);
    if !problems.is_empty() {
        return Err(invalid(problems.join("; ")));
    }
    Ok(())
}

fn leaf_kind(w: &HWitness, choices: &LeafChoices, v: usize) -> Result<GadgetKind> {
    let kind = choices.get(&v).copied().unwrap_or(GadgetKind::Leaf9A);
    if !kind.is_leaf() {
        return Err(invalid(format!(
            "leaf choice {kind:?} for vertex {v} is not a leaf gadget"
        )));
    }
    debug_assert!(v < w.h.n());
    Ok(kind)
}

/// Replaces every vertex of `H` by the gadget matching its degree and every
/// edge of `H` by an edge between attach points. Edges reach a vertex's
/// attach points in increasing edge-id order.
pub fn expand_to_Gk(w: &HWitness, leaf_choices: &LeafChoices) -> Result<(Graph, ExpansionMap)> {
    check_witness(w)?;
    let deg = w.h.degrees();
    if let Some((&v, _)) = leaf_choices.iter().find(|(&v, _)| v >= w.h.n() || deg[v] != 1) {
        return Err(invalid(format!(
            "leaf choice given for vertex {v}, which is not a leaf"
        )));
    }
    let mut kinds = Vec::with_capacity(w.h.n());
    let mut gadgets: Vec<Gadget> = Vec::with_capacity(w.h.n());
    for (v, &d) in deg.iter().enumerate() {
        let kind = match d {
            3 => GadgetKind::Triangle,
            2 => GadgetKind::K4Star,
            1 => leaf_kind(w, leaf_choices, v)?,
            other => return Err(invalid(format!("vertex {v} has degree {other}"))),
        };
        kinds.push(kind);
        gadgets.push(gadget(kind));
    }

    let mut vertex_image = Vec::with_capacity(w.h.n());
    let mut edges = Vec::new();
    let mut next = 0;
    for g in &gadgets {
        let base = next;
        vertex_image.push((base..base + g.graph.n()).collect::<Vec<_>>());
        edges.extend(g.graph.edges().map(|(a, b)| (base + a, base + b)));
        next += g.graph.n();
    }

    let incidence = w.h.incidence();
    let attach_of = |v: usize, id: usize| -> Result<usize> {
        let slot = incidence[v].iter().position(|&e| e == id).expect("incident");
        let points = &gadgets[v].attach_points;
        if incidence[v].len() != points.len() {
            return Err(invalid(format!(
                "vertex {v}: {} edges for {} attach points",
                incidence[v].len(),
                points.len()
            )));
        }
        Ok(vertex_image[v][points[slot]])
    };
    let mut edge_image = Vec::with_capacity(w.h.edges().len());
    for (id, &(u, v)) in w.h.edges().iter().enumerate() {
        let pair = (attach_of(u, id)?, attach_of(v, id)?);
        edge_image.push(pair);
        edges.push(pair);
    }

    let g = Graph::from_edges(next, &edges)?;
    if g.edge_count() != edges.len() {
        return Err(Error::Construction("expansion produced a repeated edge".into()));
    }
    if g.n() != 18 * w.k || g.degrees().iter().any(|&d| d != 3) || !g.is_connected() {
        return Err(Error::Construction(format!(
            "expansion has order {} (expected {}), cubic: {}, connected: {}",
            g.n(),
            18 * w.k,
            g.degrees().iter().all(|&d| d == 3),
            g.is_connected()
        )));
    }
    Ok((
        g,
        ExpansionMap {
            kinds,
            vertex_image,
            edge_image,
        },
    ))
}

/// The dissociation set of size `10k` built from the witness: both ends of
/// every edge of `M`, the tail end of every edge leaving an uncovered vertex,
/// and the fixed marked vertices inside the degree-2 and degree-1 gadgets.
pub fn canonical_dissociation_set(g: &Graph, w: &HWitness, map: &ExpansionMap) -> Result<VertexSet> {
    let mut d = VertexSet::new(g.n());
    for &id in &w.m {
        let (a, b) = map.edge_image[id];
        d.insert(a);
        d.insert(b);
    }
    let covered = w.covered();
    for &(id, head) in &w.orientation {
        let (u, _) = w.h.edge(id);
        let tail = w.h.other_end(id, head);
        if covered[tail] {
            continue;
        }
        let (a, b) = map.edge_image[id];
        d.insert(if tail == u { a } else { b });
    }
    for (v, &kind) in map.kinds.iter().enumerate() {
        for local in gadget(kind).d_contribution.iter() {
            d.insert(map.vertex_image[v][local]);
        }
    }
    if !g.is_dissociation_set(&d) {
        let bad = d
            .iter()
            .find(|&v| g.neighbors(v).iter().filter(|&&x| d.contains(x)).count() > 1)
            .expect("some vertex violates");
        return Err(Error::NotDissociation(bad));
    }
    if d.len() != 10 * w.k {
        return Err(Error::Construction(format!(
            "canonical set has {} vertices, expected {}",
            d.len(),
            10 * w.k
        )));
    }
    Ok(d)
}
