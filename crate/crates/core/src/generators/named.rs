//! Fixed graphs, including literal transcriptions of the drawn examples.
//!
//! Each entry carries its expected α and diss so a transcription slip shows
//! up as a failing self-test instead of a silently different graph.

use serde::Serialize;

use super::families::{gen_complete, gen_complete_bipartite, gen_cycle};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedGraph {
    pub name: String,
    #[serde(skip)]
    pub graph: Graph,
    /// Encircled vertices of a drawn example, when the drawing marks some.
    pub marked: Option<VertexSet>,
    pub expected_alpha: usize,
    pub expected_diss: usize,
}

/// Smallest cubic graph with α = 3/5 · diss; the marked vertices are the
/// encircled maximum dissociation set. Six triangles; vertices 16 and 17 are
/// the two central ones.
#[rustfmt::skip]
pub const FIG3_EDGES: &[(usize, usize)] = &[
    (0, 2), (0, 4), (0, 10), (1, 3), (1, 5), (1, 11), (2, 8), (2, 14), (3, 9),
    (3, 15), (4, 10), (4, 12), (5, 11), (5, 13), (6, 8), (6, 12), (6, 16), (7, 9),
    (7, 13), (7, 17), (8, 14), (9, 15), (10, 11), (12, 16), (13, 17), (14, 15), (16, 17),
];
#[rustfmt::skip]
pub const FIG3_MARKED: &[usize] = &[1, 2, 4, 5, 8, 9, 10, 15, 16, 17];

/// Subcubic tree attaining α = 5/8 · diss − 1/4.
#[rustfmt::skip]
pub const FIG1_TREE_EDGES: &[(usize, usize)] = &[
    (0, 4), (1, 5), (1, 27), (2, 6), (2, 28), (3, 7), (3, 29), (4, 16), (8, 12),
    (9, 13), (9, 27), (10, 14), (10, 28), (11, 15), (11, 29), (12, 16), (13, 30),
    (14, 31), (16, 22), (17, 22), (17, 27), (18, 23), (19, 24), (20, 25), (20, 28),
    (21, 26), (21, 29), (23, 30), (24, 31), (25, 30), (26, 31),
];

/// Cubic graph of order 36 built from a multigraph with one vertex of degree
/// 1, three of degree 2 and three of degree 3. Vertices 0..9 form the order-9
/// leaf gadget (second variant), 27..36 three triangles, the rest three
/// copies of `K_4^*`.
#[rustfmt::skip]
pub const FIGL_EDGES: &[(usize, usize)] = &[
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 4), (2, 7), (3, 5), (3, 6), (4, 6),
    (5, 7), (6, 8), (7, 8), (8, 33), (9, 12), (9, 18), (9, 21), (10, 13), (10, 19),
    (10, 22), (11, 14), (11, 20), (11, 23), (12, 15), (12, 18), (13, 16), (13, 19),
    (14, 17), (14, 20), (15, 24), (15, 35), (16, 25), (16, 30), (17, 25), (17, 26),
    (18, 21), (19, 22), (20, 23), (21, 24), (22, 25), (23, 26), (24, 26), (27, 30),
    (27, 33), (27, 34), (28, 29), (28, 31), (28, 34), (29, 32), (29, 35), (30, 33),
    (31, 32), (31, 34), (32, 35),
];
#[rustfmt::skip]
pub const FIGL_MARKED: &[usize] = &[
    2, 3, 4, 5, 8, 9, 10, 11, 16, 18, 19, 20, 24, 25, 26, 29, 31, 33, 34, 35,
];

/// Subcubic extremal graph containing one `K_4^*` and two triangles.
#[rustfmt::skip]
pub const FIG2_LEFT_EDGES: &[(usize, usize)] = &[
    (0, 3), (0, 5), (0, 8), (1, 6), (1, 10), (2, 7), (2, 11), (3, 4), (3, 5),
    (4, 9), (4, 11), (5, 8), (6, 10), (7, 11), (8, 9), (9, 10),
];
#[rustfmt::skip]
pub const FIG2_LEFT_MARKED: &[usize] = &[0, 1, 2, 4, 5, 6, 7, 9];

/// Subcubic extremal graph made of seven triangles.
#[rustfmt::skip]
pub const FIG2_RIGHT_EDGES: &[(usize, usize)] = &[
    (0, 7), (0, 14), (0, 18), (1, 8), (1, 15), (1, 16), (2, 9), (2, 16), (3, 10),
    (3, 17), (4, 11), (4, 18), (4, 20), (5, 12), (5, 19), (6, 13), (6, 20), (7, 14),
    (7, 19), (8, 15), (8, 17), (9, 16), (10, 17), (11, 14), (11, 18), (12, 15),
    (12, 19), (13, 20),
];
#[rustfmt::skip]
pub const FIG2_RIGHT_MARKED: &[usize] = &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13];

pub const NAMES: &[&str] = &[
    "fig3",
    "fig1_tree",
    "figl",
    "fig2_left",
    "fig2_right",
    "petersen",
    "k4",
    "k33",
    "heawood",
    "k4star",
];

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid")
}

pub fn heawood() -> Graph {
    let mut edges: Vec<_> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
    edges.extend((0..14).step_by(2).map(|i| (i, (i + 5) % 14)));
    Graph::from_edges(14, &edges).expect("valid")
}

fn drawn(
    name: &str,
    n: usize,
    edges: &[(usize, usize)],
    marked: Option<&[usize]>,
    alpha: usize,
    diss: usize,
) -> NamedGraph {
    let graph = Graph::from_edges(n, edges).expect("transcribed edge list is valid");
    NamedGraph {
        name: name.to_string(),
        graph,
        marked: marked.map(|m| VertexSet::from_vertices(n, m.iter().copied()).expect("in range")),
        expected_alpha: alpha,
        expected_diss: diss,
    }
}

/// Looks up a fixed graph by name; `c<n>` yields the cycle of length `n`.
pub fn named_graph(name: &str) -> Result<NamedGraph> {
    let ng = match name {
        "fig3" => drawn(name, 18, FIG3_EDGES, Some(FIG3_MARKED), 6, 10),
        "fig1_tree" => drawn(name, 32, FIG1_TREE_EDGES, None, 16, 26),
        "figl" => drawn(name, 36, FIGL_EDGES, Some(FIGL_MARKED), 12, 20),
        "fig2_left" => drawn(name, 12, FIG2_LEFT_EDGES, Some(FIG2_LEFT_MARKED), 4, 8),
        "fig2_right" => drawn(name, 21, FIG2_RIGHT_EDGES, Some(FIG2_RIGHT_MARKED), 7, 14),
        "petersen" => NamedGraph {
            name: name.into(),
            graph: petersen(),
            marked: None,
            expected_alpha: 4,
            expected_diss: 6,
        },
        "heawood" => NamedGraph {
            name: name.into(),
            graph: heawood(),
            marked: None,
            expected_alpha: 7,
            expected_diss: 7,
        },
        "k4" => NamedGraph {
            name: name.into(),
            graph: gen_complete(4)?,
            marked: None,
            expected_alpha: 1,
            expected_diss: 2,
        },
        "k33" => NamedGraph {
            name: name.into(),
            graph: gen_complete_bipartite(3, 3)?,
            marked: None,
            expected_alpha: 3,
            expected_diss: 3,
        },
        "k4star" => {
            let k = super::calg::gen_K4_star();
            NamedGraph {
                name: name.into(),
                graph: k.graph,
                marked: Some(k.marked),
                expected_alpha: 2,
                expected_diss: 4,
            }
        }
        other => {
            let n = other
                .strip_prefix('c')
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::UnknownName(other.to_string()))?;
            NamedGraph {
                name: name.into(),
                graph: gen_cycle(n)?,
                marked: None,
                expected_alpha: n / 2,
                expected_diss: 2 * n / 3,
            }
        }
    };
    Ok(ng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;
    use crate::solvers::{max_dissociation_set, max_independent_set};

    #[test]
    fn transcriptions_match_their_expectations() {
        for name in NAMES.iter().copied().chain(["c5", "c9"]) {
            let ng = named_graph(name).unwrap();
            assert_eq!(
                max_independent_set(&ng.graph).unwrap().value,
                ng.expected_alpha,
                "{name}"
            );
            assert_eq!(
                max_dissociation_set(&ng.graph).unwrap().value,
                ng.expected_diss,
                "{name}"
            );
            if let Some(m) = &ng.marked {
                assert!(ng.graph.is_dissociation_set(m), "{name}");
                assert_eq!(m.len(), ng.expected_diss, "{name}");
            }
        }
    }

    #[test]
    fn drawn_cubic_examples() {
        for (name, n) in [("fig3", 18), ("figl", 36)] {
            let g = named_graph(name).unwrap().graph;
            let c = classify(&g);
            assert!(c.cubic && c.connected);
            assert_eq!(g.n(), n);
        }
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(named_graph("dodecahedron"), Err(Error::UnknownName(_))));
        assert!(named_graph("c2").is_err());
    }
}
