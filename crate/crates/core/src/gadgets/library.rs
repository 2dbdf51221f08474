//! The replacement graphs for vertices of degree 3, 2 and 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::BlockKind;
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::solvers::max_independent_set;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum GadgetKind {
    Triangle,
    #[serde(rename = "K4STAR")]
    K4Star,
    #[serde(rename = "LEAF9_A")]
    Leaf9A,
    #[serde(rename = "LEAF9_B")]
    Leaf9B,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 4] = [
        GadgetKind::Triangle,
        GadgetKind::K4Star,
        GadgetKind::Leaf9A,
        GadgetKind::Leaf9B,
    ];

    pub fn is_leaf(self) -> bool {
        matches!(self, GadgetKind::Leaf9A | GadgetKind::Leaf9B)
    }

    /// Number of external edges the gadget accepts.
    pub fn arity(self) -> usize {
        match self {
            GadgetKind::Triangle => 3,
            GadgetKind::K4Star => 2,
            GadgetKind::Leaf9A | GadgetKind::Leaf9B => 1,
        }
    }
}

// Both leaf gadgets: vertex 0 is the attach point, adjacent to 1 and 2; the
// marked vertices 3,5 and 4,6 induce two disjoint edges. The variants differ
// in a single chord and are not isomorphic.
#[rustfmt::skip]
const LEAF9_A_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (1, 3), (1, 5), (2, 4), (2, 6), (3, 5), (3, 7), (4, 6),
    (4, 8), (5, 7), (6, 8), (7, 8),
];
#[rustfmt::skip]
const LEAF9_B_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (1, 3), (1, 6), (2, 4), (2, 5), (3, 5), (3, 7), (4, 6),
    (4, 8), (5, 7), (6, 8), (7, 8),
];
const LEAF9_MARKED: &[usize] = &[3, 4, 5, 6];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    /// Local vertices receiving the external edges, in order.
    pub attach_points: Vec<usize>,
    /// Local vertices that join the canonical dissociation set regardless of
    /// the orientation.
    pub d_contribution: VertexSet,
}

fn assemble(kind: GadgetKind, n: usize, edges: &[(usize, usize)], attach: &[usize], d: &[usize]) -> Gadget {
    Gadget {
        kind,
        graph: Graph::from_edges(n, edges).expect("gadget edge list is valid"),
        attach_points: attach.to_vec(),
        d_contribution: VertexSet::from_vertices(n, d.iter().copied()).expect("in range"),
    }
}

/// Builds a gadget without running the validation battery.
pub fn gadget(kind: GadgetKind) -> Gadget {
    match kind {
        GadgetKind::Triangle => assemble(kind, 3, &[(0, 1), (0, 2), (1, 2)], &[0, 1, 2], &[]),
        // s1 = 4, s2 = 5; c = 2, d = 3
        GadgetKind::K4Star => assemble(kind, 6, BlockKind::K4Star.edges(), &[4, 5], &[2, 3]),
        GadgetKind::Leaf9A => assemble(kind, 9, LEAF9_A_EDGES, &[0], LEAF9_MARKED),
        GadgetKind::Leaf9B => assemble(kind, 9, LEAF9_B_EDGES, &[0], LEAF9_MARKED),
    }
}

/// Checks the structural facts the expansion relies on: attaching one
/// external edge per attach point makes every vertex cubic, and the marked
/// part has the prescribed shape.
pub fn validate_gadget(g: &Gadget) -> Result<()> {
    let fail = |msg: String| Err(Error::Construction(format!("{:?}: {msg}", g.kind)));
    let n = g.graph.n();
    if g.attach_points.len() != g.kind.arity() {
        return fail(format!("{} attach points", g.attach_points.len()));
    }
    for v in 0..n {
        let external = g.attach_points.iter().filter(|&&a| a == v).count();
        if g.graph.degree(v) + external != 3 {
            return fail(format!("vertex {v} would have degree {}", g.graph.degree(v) + external));
        }
    }
    if !g.graph.is_connected() {
        return fail("disconnected".into());
    }
    let marked = induced_subgraph(&g.graph, &g.d_contribution)?;
    let comps = marked.components();
    let alpha = max_independent_set(&g.graph)?.value;
    let ok = match g.kind {
        GadgetKind::Triangle => n == 3 && g.d_contribution.is_empty(),
        GadgetKind::K4Star => n == 6 && comps.len() == 1 && comps[0].len() == 2 && alpha == 2,
        GadgetKind::Leaf9A | GadgetKind::Leaf9B => {
            n == 9
                && g.graph.edge_count() == 13
                && alpha == 3
                && comps.len() == 2
                && comps.iter().all(|c| c.len() == 2)
                && g.attach_points.iter().all(|&a| !g.d_contribution.contains(a))
                && g.graph
                    .neighbors(g.attach_points[0])
                    .iter()
                    .all(|&w| !g.d_contribution.contains(w))
        }
    };
    if !ok {
        return fail(format!("marked part {comps:?}, alpha {alpha}"));
    }
    Ok(())
}

/// All four gadgets, each validated.
///
/// # Panics
/// If a built-in gadget fails validation, which would mean a broken edge list.
pub fn gadget_library() -> Vec<Gadget> {
    GadgetKind::ALL
        .iter()
        .map(|&k| {
            let g = gadget(k);
            if let Err(e) = validate_gadget(&g) {
                panic!("built-in gadget is malformed: {e}");
            }
            g
        })
        .collect()
}
