//! Simple graphs, loopless multigraphs, vertex sets and structural predicates.

mod graph6;
mod multigraph;

pub use graph6::{encode_graph6, parse_graph6, parse_graph6_stream, parse_sparse6};
pub use multigraph::{multigraph_degrees, Multigraph};

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A set of vertices of a graph with labels `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set over `0..n`, rejecting out-of-range members.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<Self> {
        let mut set = VertexSet::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    /// Builds a set from the low `n` bits of a mask.
    pub fn from_mask(n: usize, mask: u128) -> Self {
        let mut set = VertexSet::new(n);
        let mut m = mask;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if v < n {
                set.bits.insert(v);
            }
            m &= m - 1;
        }
        set
    }

    /// Capacity of the host vertex range.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Mask form for solvers; members at index >= 128 are dropped.
    pub fn to_mask(&self) -> u128 {
        self.iter().filter(|&v| v < 128).fold(0u128, |m, v| m | (1u128 << v))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Finite simple undirected graph on vertices `0..n` with sorted neighbour lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(v, l)| { l.windows(2).all(|w| w[0] < w[1]) && !l.contains(&v) }));
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Neighbourhood masks; only valid when `n <= 128`.
    pub(crate) fn masks(&self) -> Vec<u128> {
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u128, |m, &v| m | (1u128 << v)))
            .collect()
    }

    /// Applies `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::InvalidParameter(format!(
                "permutation of length {} for graph of order {n}",
                perm.len()
            )));
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&v| v + shift).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut out = Vec::new();
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                        queue.push_back(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !sorted_intersect(&self.adj[u], &self.adj[v]))
    }

    /// Proper 2-colouring if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n()
    }

    /// Largest degree inside `G[set]`.
    pub fn induced_max_degree(&self, set: &VertexSet) -> usize {
        set.iter()
            .map(|v| self.adj[v].iter().filter(|&&w| set.contains(w)).count())
            .max()
            .unwrap_or(0)
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.induced_max_degree(set) == 0
    }

    pub fn is_dissociation_set(&self, set: &VertexSet) -> bool {
        self.induced_max_degree(set) <= 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

fn sorted_intersect(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Hypothesis flags used to decide which bounds apply to a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphClass {
    pub n: usize,
    pub connected: bool,
    pub max_degree: usize,
    pub min_degree: usize,
    pub regular: bool,
    pub cubic: bool,
    pub subcubic: bool,
    pub triangle_free: bool,
    pub bipartite: bool,
}

pub fn classify(g: &Graph) -> GraphClass {
    let max_degree = g.max_degree();
    let min_degree = g.min_degree();
    let regular = g.n() > 0 && max_degree == min_degree;
    let bipartite = g.is_bipartite();
    GraphClass {
        n: g.n(),
        connected: g.is_connected(),
        max_degree,
        min_degree,
        regular,
        cubic: regular && max_degree == 3,
        subcubic: max_degree <= 3,
        triangle_free: bipartite || g.is_triangle_free(),
        bipartite,
    }
}

/// `G[s]`, relabelled `0..|s|` in increasing order of the original labels.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<Graph> {
    if let Some(v) = s.iter().find(|&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut index = vec![usize::MAX; g.n()];
    let members = s.to_vec();
    for (i, &v) in members.iter().enumerate() {
        index[v] = i;
    }
    let adj = members
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect()
        })
        .collect();
    Ok(Graph::from_sorted_adjacency(adj))
}
