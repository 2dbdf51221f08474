//! Marked building blocks and the assembly of the subcubic extremal family.

use rand::seq::IndexedRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A graph with a distinguished dissociation set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkedGraph {
    pub graph: Graph,
    pub marked: VertexSet,
}

impl MarkedGraph {
    pub fn new(graph: Graph, marked: VertexSet) -> Result<Self> {
        if marked.universe() != graph.n() {
            return Err(Error::Construction("marked set has the wrong universe".into()));
        }
        if let Some(v) = marked
            .iter()
            .find(|&v| graph.neighbors(v).iter().filter(|&&w| marked.contains(w)).count() > 1)
        {
            return Err(Error::NotDissociation(v));
        }
        Ok(MarkedGraph { graph, marked })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BlockKind {
    K2,
    K3,
    #[serde(rename = "K4STAR")]
    K4Star,
}

impl BlockKind {
    pub const ALL: [BlockKind; 3] = [BlockKind::K2, BlockKind::K3, BlockKind::K4Star];

    pub fn order(self) -> usize {
        match self {
            BlockKind::K2 => 2,
            BlockKind::K3 => 3,
            BlockKind::K4Star => 6,
        }
    }

    /// Local edge list of the block.
    pub fn edges(self) -> &'static [(usize, usize)] {
        match self {
            BlockKind::K2 => &[(0, 1)],
            BlockKind::K3 => &[(0, 1), (0, 2), (1, 2)],
            // a=0 b=1 c=2 d=3, edge ab subdivided by s1=4, s2=5
            BlockKind::K4Star => &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 1)],
        }
    }

    /// Local labels of the marked vertices.
    pub fn marked(self) -> &'static [usize] {
        match self {
            BlockKind::K2 => &[0, 1],
            BlockKind::K3 => &[0, 1],
            BlockKind::K4Star => &[2, 3, 4, 5],
        }
    }

    pub fn graph(self) -> Graph {
        Graph::from_edges(self.order(), self.edges()).expect("block edge lists are valid")
    }
}

/// `K_4` with one edge subdivided twice; the two subdivision vertices and the
/// two vertices off the subdivided edge are marked.
#[allow(non_snake_case)]
pub fn gen_K4_star() -> MarkedGraph {
    let kind = BlockKind::K4Star;
    let marked = VertexSet::from_vertices(6, kind.marked().iter().copied()).expect("in range");
    MarkedGraph::new(kind.graph(), marked).expect("marked set is a dissociation set")
}

/// A block list plus extra edges `(block, local vertex, block, local vertex)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CalGSpec {
    pub blocks: Vec<BlockKind>,
    pub extra_edges: Vec<(usize, usize, usize, usize)>,
}

impl CalGSpec {
    /// Global label of the first vertex of each block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let at = acc;
                acc += b.order();
                at
            })
            .collect()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(|b| b.order()).sum()
    }
}

/// Assembles the marked graph described by `spec`, enforcing that every extra
/// edge joins distinct blocks and touches at most one marked vertex, and that
/// the result is connected and subcubic.
#[allow(non_snake_case)]
pub fn build_calG(spec: &CalGSpec) -> Result<MarkedGraph> {
    if spec.blocks.is_empty() {
        return Err(Error::Construction("no blocks".into()));
    }
    let offsets = spec.offsets();
    let n = spec.order();
    let mut edges = Vec::new();
    let mut marked = VertexSet::new(n);
    for (kind, &off) in spec.blocks.iter().zip(&offsets) {
        edges.extend(kind.edges().iter().map(|&(u, v)| (off + u, off + v)));
        for &m in kind.marked() {
            marked.insert(off + m);
        }
    }
    let base_edges = edges.len();
    for &(bi, li, bj, lj) in &spec.extra_edges {
        if bi >= spec.blocks.len() || bj >= spec.blocks.len() {
            return Err(Error::Construction(format!(
                "block index out of range in ({bi},{li},{bj},{lj})"
            )));
        }
        if bi == bj {
            return Err(Error::Construction(format!("extra edge inside block {bi}")));
        }
        if li >= spec.blocks[bi].order() || lj >= spec.blocks[bj].order() {
            return Err(Error::Construction(format!(
                "local vertex out of range in ({bi},{li},{bj},{lj})"
            )));
        }
        let (u, v) = (offsets[bi] + li, offsets[bj] + lj);
        if marked.contains(u) && marked.contains(v) {
            return Err(Error::Construction(format!(
                "extra edge {u}-{v} joins two marked vertices"
            )));
        }
        edges.push((u, v));
    }
    let graph = Graph::from_edges(n, &edges)?;
    if graph.edge_count() != edges.len() {
        return Err(Error::Construction("repeated extra edge".into()));
    }
    debug_assert!(graph.edge_count() >= base_edges);
    if let Some(v) = (0..n).find(|&v| graph.degree(v) > 3) {
        return Err(Error::Construction(format!(
            "vertex {v} has degree {}",
            graph.degree(v)
        )));
    }
    if !graph.is_connected() {
        return Err(Error::Construction("result is disconnected".into()));
    }
    MarkedGraph::new(graph, marked)
}

/// Random member of the family: a uniform block multiset of size
/// `1..=max_blocks`, then random legal extra edges until connected, then a
/// few more at random. Dead ends are rejected and resampled.
pub fn random_calg_spec<R: Rng + ?Sized>(rng: &mut R, max_blocks: usize) -> CalGSpec {
    loop {
        let count = rng.random_range(1..=max_blocks.max(1));
        let blocks: Vec<BlockKind> = (0..count)
            .map(|_| *BlockKind::ALL.choose(rng).expect("non-empty"))
            .collect();
        if let Some(spec) = try_connect(rng, blocks) {
            return spec;
        }
    }
}

fn try_connect<R: Rng + ?Sized>(rng: &mut R, blocks: Vec<BlockKind>) -> Option<CalGSpec> {
    let mut spec = CalGSpec {
        blocks,
        extra_edges: Vec::new(),
    };
    let offsets = spec.offsets();
    let n = spec.order();
    let mut owner = Vec::with_capacity(n);
    let mut is_marked = vec![false; n];
    let mut degree = vec![0usize; n];
    for (b, (kind, &off)) in spec.blocks.iter().zip(&offsets).enumerate() {
        owner.extend((0..kind.order()).map(|l| (b, l)));
        for &m in kind.marked() {
            is_marked[off + m] = true;
        }
        for &(u, v) in kind.edges() {
            degree[off + u] += 1;
            degree[off + v] += 1;
        }
    }
    let mut adjacent = std::collections::HashSet::new();
    let mut component: Vec<usize> = (0..spec.blocks.len()).collect();
    let find = |c: &mut Vec<usize>, mut x: usize| {
        while c[x] != x {
            c[x] = c[c[x]];
            x = c[x];
        }
        x
    };
    let legal = |u: usize, v: usize, degree: &[usize], adjacent: &std::collections::HashSet<(usize, usize)>| {
        owner[u].0 != owner[v].0
            && degree[u] < 3
            && degree[v] < 3
            && !(is_marked[u] && is_marked[v])
            && !adjacent.contains(&(u.min(v), u.max(v)))
    };
    let mut components = spec.blocks.len();
    while components > 1 {
        let options: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| legal(u, v, &degree, &adjacent))
            .filter(|&(u, v)| {
                let (a, b) = (owner[u].0, owner[v].0);
                let mut c = component.clone();
                find(&mut c, a) != find(&mut c, b)
            })
            .collect();
        let &(u, v) = options.choose(rng)?;
        let (a, b) = (find(&mut component, owner[u].0), find(&mut component, owner[v].0));
        component[a] = b;
        components -= 1;
        degree[u] += 1;
        degree[v] += 1;
        adjacent.insert((u, v));
        spec.extra_edges.push((owner[u].0, owner[u].1, owner[v].0, owner[v].1));
    }
    let extra = rng.random_range(0..=spec.blocks.len());
    for _ in 0..extra {
        let options: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| legal(u, v, &degree, &adjacent))
            .collect();
        let Some(&(u, v)) = options.choose(rng) else { break };
        degree[u] += 1;
        degree[v] += 1;
        adjacent.insert((u, v));
        spec.extra_edges.push((owner[u].0, owner[u].1, owner[v].0, owner[v].1));
    }
    Some(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn k4_star_shape() {
        let k = gen_K4_star();
        let mut degrees = k.graph.degrees();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degrees, vec![3, 3, 3, 3, 2, 2]);
        assert_eq!(k.marked.len(), 4);
        assert!(k.graph.is_dissociation_set(&k.marked));
    }

    #[test]
    fn marked_pair_rejected() {
        let spec = CalGSpec {
            blocks: vec![BlockKind::K2, BlockKind::K2],
            extra_edges: vec![(0, 0, 1, 0)],
        };
        assert!(matches!(build_calG(&spec), Err(Error::Construction(_))));
    }

    #[test]
    fn degree_overflow_and_disconnection() {
        let disconnected = CalGSpec {
            blocks: vec![BlockKind::K3, BlockKind::K3],
            extra_edges: vec![],
        };
        assert!(build_calG(&disconnected).is_err());
        let overflow = CalGSpec {
            blocks: vec![BlockKind::K3, BlockKind::K3, BlockKind::K3],
            extra_edges: vec![(0, 2, 1, 2), (0, 2, 2, 2)],
        };
        assert!(build_calG(&overflow).is_err());
    }

    #[test]
    fn random_specs_build() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let spec = random_calg_spec(&mut rng, 6);
            let m = build_calG(&spec).unwrap();
            assert!(m.graph.max_degree() <= 3);
            let expected: usize = spec.blocks.iter().map(|b| b.marked().len()).sum();
            assert_eq!(m.marked.len(), expected);
        }
    }
}
