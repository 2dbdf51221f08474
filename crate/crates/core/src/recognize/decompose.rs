//! Recovering the block structure of a subcubic graph with `2α = diss`.
//!
//! Take any maximum dissociation set `D`. For a member of the family, `G[D]`
//! is a perfect matching and every vertex `u` outside `D` sees both ends of
//! exactly one of those edges, `K(u)`. An edge of `G[D]` seen by nobody is a
//! `K_2` block, one seen by a single `u` closes a triangle, and one seen by
//! two vertices `u, v` is the `{c, d}` pair of a `K_4^*` whose subdivision
//! vertices form the `G[D]` edge joining a neighbour of `u` to a neighbour of
//! `v`.

use serde::Serialize;

use crate::error::Result;
use crate::generators::{BlockKind, CalGSpec};
use crate::graph::{induced_subgraph, Graph, VertexSet};
use crate::solvers::{max_dissociation_set, max_independent_set};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionBlock {
    pub kind: BlockKind,
    /// Vertices listed in the block's local order (see [`BlockKind::edges`]).
    pub vertices: Vec<usize>,
    pub marked: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CalGDecomposition {
    /// Set for `K_4` itself, which attains equality without being built
    /// from blocks; `blocks` is then empty.
    pub k4_exception: bool,
    pub blocks: Vec<DecompositionBlock>,
    pub extra_edges: Vec<(usize, usize)>,
    pub marked: VertexSet,
}

impl CalGDecomposition {
    /// The equivalent block specification and the vertex order it uses.
    pub fn to_spec(&self) -> (CalGSpec, Vec<usize>) {
        let order: Vec<usize> = self.blocks.iter().flat_map(|b| b.vertices.iter().copied()).collect();
        let mut place = vec![(0, 0); order.len()];
        for (bi, b) in self.blocks.iter().enumerate() {
            for (li, &v) in b.vertices.iter().enumerate() {
                place[v] = (bi, li);
            }
        }
        let spec = CalGSpec {
            blocks: self.blocks.iter().map(|b| b.kind).collect(),
            extra_edges: self
                .extra_edges
                .iter()
                .map(|&(u, v)| (place[u].0, place[u].1, place[v].0, place[v].1))
                .collect(),
        };
        (spec, order)
    }
}

/// `2α(G) = diss(G)`, decided with the exact solvers.
pub fn is_basic_extremal(g: &Graph) -> Result<bool> {
    Ok(2 * max_independent_set(g)?.value == max_dissociation_set(g)?.value)
}

fn is_k4(g: &Graph) -> bool {
    g.n() == 4 && g.edge_count() == 6
}

/// Decomposes `g` into marked `K_2`, `K_3` and `K_4^*` blocks plus extra
/// edges, or returns `None` when `g` is not in the family. Inputs that are not
/// connected and subcubic are never in the family.
pub fn decompose_calG(g: &Graph) -> Result<Option<CalGDecomposition>> {
    if !g.is_connected() || g.max_degree() > 3 {
        return Ok(None);
    }
    if is_k4(g) {
        return Ok(Some(CalGDecomposition {
            k4_exception: true,
            blocks: Vec::new(),
            extra_edges: Vec::new(),
            marked: VertexSet::from_vertices(4, [0, 1])?,
        }));
    }
    let d = max_dissociation_set(g)?.witness;
    let alpha = max_independent_set(g)?.value;
    if d.len() != 2 * alpha {
        return Ok(None);
    }
    let n = g.n();
    let inside = |v: usize| g.neighbors(v).iter().copied().filter(|&w| d.contains(w));
    // partner in G[D]; every member of D needs exactly one
    let mut partner = vec![usize::MAX; n];
    for v in d.iter() {
        let mut it = inside(v);
        match (it.next(), it.next()) {
            (Some(w), None) => partner[v] = w,
            _ => return Ok(None),
        }
    }
    // K(u) named by its smaller endpoint
    let mut seers: Vec<Vec<usize>> = vec![Vec::new(); n];
    for u in (0..n).filter(|&u| !d.contains(u)) {
        let hit = inside(u).find(|&x| g.has_edge(u, partner[x]));
        let Some(x) = hit else { return Ok(None) };
        seers[x.min(partner[x])].push(u);
    }

    let mut used = vec![false; n];
    let mut blocks = Vec::new();
    let reps: Vec<usize> = d.iter().filter(|&x| x < partner[x]).collect();
    for &x in &reps {
        let y = partner[x];
        if seers[x].len() == 2 {
            let (u, v) = (seers[x][0], seers[x][1]);
            let near_u: Vec<usize> = inside(u).filter(|&s| s != x && s != y).collect();
            let pick = near_u.iter().copied().find_map(|s1| {
                let s2 = partner[s1];
                g.has_edge(v, s2).then_some((s1, s2))
            });
            let Some((s1, s2)) = pick else { return Ok(None) };
            blocks.push(DecompositionBlock {
                kind: BlockKind::K4Star,
                vertices: vec![u, v, x, y, s1, s2],
                marked: vec![x, y, s1, s2],
            });
        }
    }
    for b in &blocks {
        for &v in &b.vertices {
            if std::mem::replace(&mut used[v], true) {
                return Ok(None);
            }
        }
    }
    for &x in &reps {
        let y = partner[x];
        if used[x] || used[y] {
            continue;
        }
        let block = match seers[x].as_slice() {
            [] => DecompositionBlock {
                kind: BlockKind::K2,
                vertices: vec![x, y],
                marked: vec![x, y],
            },
            [u] => DecompositionBlock {
                kind: BlockKind::K3,
                vertices: vec![x, y, *u],
                marked: vec![x, y],
            },
            _ => return Ok(None),
        };
        for &v in &block.vertices {
            if std::mem::replace(&mut used[v], true) {
                return Ok(None);
            }
        }
        blocks.push(block);
    }
    if used.iter().any(|&u| !u) {
        return Ok(None);
    }
    blocks.sort_by_key(|b| b.vertices.iter().copied().min());

    let mut owner = vec![0usize; n];
    for (bi, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            owner[v] = bi;
        }
    }
    let extra_edges: Vec<(usize, usize)> = g.edges().filter(|&(u, v)| owner[u] != owner[v]).collect();
    let decomposition = CalGDecomposition {
        k4_exception: false,
        blocks,
        extra_edges,
        marked: d,
    };
    Ok(validate_decomposition(g, &decomposition, alpha)?.then_some(decomposition))
}

/// Re-checks a decomposition against `g`: blocks partition the vertices and
/// induce exactly their kind's graph, extra edges touch at most one marked
/// vertex, and the marked union is a dissociation set of size `2α`.
pub fn validate_decomposition(g: &Graph, dec: &CalGDecomposition, alpha: usize) -> Result<bool> {
    if dec.k4_exception {
        return Ok(is_k4(g) && g.is_dissociation_set(&dec.marked) && dec.marked.len() == 2);
    }
    let n = g.n();
    let mut seen = vec![false; n];
    let mut marked = VertexSet::new(n);
    for b in &dec.blocks {
        if b.vertices.len() != b.kind.order() {
            return Ok(false);
        }
        for &v in &b.vertices {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Ok(false);
            }
        }
        let mut as_set = VertexSet::new(n);
        for &v in &b.vertices {
            as_set.insert(v);
        }
        let local: Vec<(usize, usize)> = b
            .kind
            .edges()
            .iter()
            .map(|&(p, q)| (b.vertices[p], b.vertices[q]))
            .collect();
        if local.iter().any(|&(p, q)| !g.has_edge(p, q)) {
            return Ok(false);
        }
        if induced_subgraph(g, &as_set)?.edge_count() != local.len() {
            return Ok(false);
        }
        let expected: Vec<usize> = b.kind.marked().iter().map(|&l| b.vertices[l]).collect();
        let mut got = b.marked.clone();
        let mut want = expected;
        got.sort_unstable();
        want.sort_unstable();
        if got != want {
            return Ok(false);
        }
        for &m in &b.marked {
            marked.insert(m);
        }
    }
    if seen.iter().any(|&s| !s) || marked != dec.marked {
        return Ok(false);
    }
    let inner: usize = dec.blocks.iter().map(|b| b.kind.edges().len()).sum();
    if inner + dec.extra_edges.len() != g.edge_count() {
        return Ok(false);
    }
    let extra_ok = dec
        .extra_edges
        .iter()
        .all(|&(u, v)| g.has_edge(u, v) && !(marked.contains(u) && marked.contains(v)));
    Ok(extra_ok && g.is_dissociation_set(&marked) && marked.len() == 2 * alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{build_calG, gen_complete, gen_cycle, named_graph};

    #[test]
    fn triangle() {
        let dec = decompose_calG(&gen_cycle(3).unwrap()).unwrap().unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].kind, BlockKind::K3);
        assert_eq!(dec.marked.len(), 2);
    }

    #[test]
    fn k4_sentinel_and_c5() {
        assert!(decompose_calG(&gen_complete(4).unwrap()).unwrap().unwrap().k4_exception);
        assert!(decompose_calG(&gen_cycle(5).unwrap()).unwrap().is_none());
    }

    #[test]
    fn one_star_example_has_one_k4_star() {
        let g = named_graph("fig2_left").unwrap().graph;
        let dec = decompose_calG(&g).unwrap().unwrap();
        let stars = dec.blocks.iter().filter(|b| b.kind == BlockKind::K4Star).count();
        assert_eq!(stars, 1);
        let (spec, order) = dec.to_spec();
        let rebuilt = build_calG(&spec).unwrap();
        let mut perm = vec![0; g.n()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        assert_eq!(g.relabel(&perm).unwrap(), rebuilt.graph);
    }
}
