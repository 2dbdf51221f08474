//! Orientations of `H − M` in which every vertex not covered by `M` has
//! exactly two outgoing edges.
//!
//! Each edge sends one unit of flow to the endpoint that becomes its tail.
//! Uncovered vertices drain into the sink with capacity 2 first; only after
//! that maximum flow is found may covered vertices absorb the rest. Augmenting
//! paths never undo flow on arcs into the sink, so the uncovered vertices stay
//! saturated through the second phase.

use super::witness::covered;
use crate::graph::Multigraph;

const INF: u32 = u32::MAX / 2;

struct FlowNet {
    head: Vec<usize>,
    cap: Vec<u32>,
    adj: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Adds arc `u -> v`; returns its index (the reverse arc is `index ^ 1`).
    fn arc(&mut self, u: usize, v: usize, cap: u32) -> usize {
        let id = self.head.len();
        self.head.push(v);
        self.cap.push(cap);
        self.adj[u].push(id);
        self.head.push(u);
        self.cap.push(0);
        self.adj[v].push(id + 1);
        id
    }

    /// Breadth-first augmentation until no path remains.
    fn augment(&mut self, s: usize, t: usize) -> u32 {
        let mut total = 0;
        loop {
            let mut via = vec![usize::MAX; self.adj.len()];
            let mut queue = std::collections::VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let w = self.head[a];
                    if self.cap[a] > 0 && w != s && via[w] == usize::MAX {
                        via[w] = a;
                        if w == t {
                            reached = true;
                            break;
                        }
                        queue.push_back(w);
                    }
                }
                if reached {
                    break;
                }
            }
            if !reached {
                return total;
            }
            let mut bottleneck = INF;
            let mut v = t;
            while v != s {
                let a = via[v];
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.head[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.head[a ^ 1];
            }
            total += bottleneck;
        }
    }
}

/// Finds an orientation of the edges outside `m` as `(edge id, head)` pairs,
/// or `None` if no orientation gives every uncovered vertex out-degree 2.
pub fn find_orientation(h: &Multigraph, m: &[usize]) -> Option<Vec<(usize, usize)>> {
    let cov = covered(h, m);
    let free: Vec<usize> = (0..h.edges().len()).filter(|id| !m.contains(id)).collect();
    let (s, t) = (0, 1);
    let edge_node = |i: usize| 2 + i;
    let vertex_node = |v: usize| 2 + free.len() + v;
    let mut net = FlowNet::new(2 + free.len() + h.n());
    let mut choice = Vec::with_capacity(free.len());
    for (i, &id) in free.iter().enumerate() {
        let (u, v) = h.edge(id);
        net.arc(s, edge_node(i), 1);
        let to_u = net.arc(edge_node(i), vertex_node(u), 1);
        net.arc(edge_node(i), vertex_node(v), 1);
        choice.push((id, u, v, to_u));
    }
    let uncovered: Vec<usize> = (0..h.n()).filter(|&v| !cov[v]).collect();
    for &v in &uncovered {
        net.arc(vertex_node(v), t, 2);
    }
    let mut flow = net.augment(s, t);
    if flow as usize != 2 * uncovered.len() {
        return None;
    }
    for v in (0..h.n()).filter(|&v| cov[v]) {
        net.arc(vertex_node(v), t, INF);
    }
    flow += net.augment(s, t);
    if flow as usize != free.len() {
        return None;
    }
    let orientation: Vec<(usize, usize)> = choice
        .into_iter()
        .map(|(id, u, v, to_u)| {
            // flow into `u` makes `u` the tail, so the head is `v`
            let tail_is_u = net.cap[to_u] == 0;
            (id, if tail_is_u { v } else { u })
        })
        .collect();
    let problems = super::validate::orientation_problems(h, m, &orientation);
    assert!(
        problems.is_empty(),
        "flow produced an invalid orientation: {problems:?}"
    );
    Some(orientation)
}

/// Exhaustive search over all `2^|E − M|` orientations; for cross-checking.
pub fn brute_force_orientation(h: &Multigraph, m: &[usize]) -> Option<Vec<(usize, usize)>> {
    let free: Vec<usize> = (0..h.edges().len()).filter(|id| !m.contains(id)).collect();
    assert!(free.len() <= 24, "brute force limited to 24 free edges");
    (0u32..1 << free.len()).find_map(|bits| {
        let orientation: Vec<(usize, usize)> = free
            .iter()
            .enumerate()
            .map(|(i, &id)| {
                let (u, v) = h.edge(id);
                (id, if bits >> i & 1 == 1 { u } else { v })
            })
            .collect();
        super::validate::orientation_problems(h, m, &orientation)
            .is_empty()
            .then_some(orientation)
    })
}
