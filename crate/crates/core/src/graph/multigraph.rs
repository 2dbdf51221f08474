use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Loopless multigraph kept as an explicit edge list; an edge's id is its
/// index in `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> (usize, usize) {
        self.edges[id]
    }

    /// Degrees counting parallel edges with multiplicity.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Ids of the edges incident with each vertex, ascending.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (id, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(id);
            inc[v].push(id);
        }
        inc
    }

    pub fn other_end(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.edges[id];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &id in &inc[u] {
                let w = self.other_end(id, u);
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

pub fn multigraph_degrees(h: &Multigraph) -> Vec<usize> {
    h.degrees()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_edge_degrees() {
        let h = Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        assert_eq!(multigraph_degrees(&h), vec![2, 2]);
    }

    #[test]
    fn loops_rejected() {
        assert_eq!(Multigraph::new(2, vec![(1, 1)]), Err(Error::Loop(1)));
    }
}
