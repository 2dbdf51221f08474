//! Exhaustive generation of small graphs up to isomorphism by scanning every
//! edge subset. Only meant for orders where all `2^(n(n-1)/2)` subsets can be
//! visited quickly; larger corpora come from external generators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::is_isomorphic;

pub const ENUM_MAX_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumFilter {
    pub connected: bool,
    pub max_degree: Option<usize>,
}

/// Cheap isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.n())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
            around.sort_unstable();
            (g.degree(v), around)
        })
        .collect();
    inv.sort();
    inv
}

/// One representative per isomorphism class of graphs on `n` vertices that
/// pass `filter`, ordered by the smallest edge mask in which each class
/// first appears.
pub fn enumerate_graphs(n: usize, filter: EnumFilter) -> Result<Vec<Graph>> {
    if n > ENUM_MAX_ORDER {
        return Err(Error::TooLarge { n, max: ENUM_MAX_ORDER });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let cap = filter.max_degree.unwrap_or(usize::MAX);
    let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
    let mut reps: Vec<Graph> = Vec::new();
    'masks: for mask in 0u32..1 << pairs.len() {
        let mut deg = [0usize; ENUM_MAX_ORDER];
        let mut edges = Vec::with_capacity(mask.count_ones() as usize);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
                if deg[u] > cap || deg[v] > cap {
                    continue 'masks;
                }
                edges.push((u, v));
            }
        }
        if filter.connected && (n == 0 || mask.count_ones() as usize + 1 < n) {
            continue;
        }
        let g = Graph::from_edges(n, &edges)?;
        if filter.connected && !g.is_connected() {
            continue;
        }
        let bucket = buckets.entry(invariant(&g)).or_default();
        for &i in bucket.iter() {
            if is_isomorphic(&reps[i], &g)? {
                continue 'masks;
            }
        }
        bucket.push(reps.len());
        reps.push(g);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let all: Vec<usize> = (1..=5)
            .map(|n| enumerate_graphs(n, EnumFilter::default()).unwrap().len())
            .collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34]);
        let connected = EnumFilter {
            connected: true,
            max_degree: None,
        };
        let c: Vec<usize> = (1..=5).map(|n| enumerate_graphs(n, connected).unwrap().len()).collect();
        assert_eq!(c, vec![1, 1, 2, 6, 21]);
        assert!(enumerate_graphs(8, connected).is_err());
    }
}
