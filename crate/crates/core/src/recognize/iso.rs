//! Isomorphism by colour refinement with individualisation.
//!
//! Both graphs are refined together so colour ids mean the same thing on
//! each side; a mismatch in colour class sizes prunes the branch.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const ISO_MAX_ORDER: usize = 64;

type Colours = Vec<u32>;

/// Refines to the coarsest equitable partition; `None` if the two sides
/// disagree on some class size.
fn refine(g1: &Graph, g2: &Graph, mut c1: Colours, mut c2: Colours) -> Option<(Colours, Colours)> {
    let mut classes = usize::MAX;
    loop {
        let signature = |g: &Graph, c: &Colours, v: usize| {
            let mut around: Vec<u32> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            around.sort_unstable();
            (c[v], around)
        };
        let s1: Vec<_> = (0..g1.n()).map(|v| signature(g1, &c1, v)).collect();
        let s2: Vec<_> = (0..g2.n()).map(|v| signature(g2, &c2, v)).collect();
        let mut census: BTreeMap<&(u32, Vec<u32>), (usize, usize)> = BTreeMap::new();
        for s in &s1 {
            census.entry(s).or_default().0 += 1;
        }
        for s in &s2 {
            census.entry(s).or_default().1 += 1;
        }
        if census.values().any(|(a, b)| a != b) {
            return None;
        }
        let ids: BTreeMap<&(u32, Vec<u32>), u32> = census.keys().enumerate().map(|(i, &k)| (k, i as u32)).collect();
        let next = ids.len();
        c1 = s1.iter().map(|s| ids[s]).collect();
        c2 = s2.iter().map(|s| ids[s]).collect();
        if next == classes {
            return Some((c1, c2));
        }
        classes = next;
    }
}

fn search(g1: &Graph, g2: &Graph, c1: Colours, c2: Colours) -> Option<Vec<usize>> {
    let (c1, c2) = refine(g1, g2, c1, c2)?;
    let n = g1.n();
    let mut size = vec![0usize; n + 1];
    for &c in &c1 {
        size[c as usize] += 1;
    }
    let target = (0..n)
        .filter(|&v| size[c1[v] as usize] > 1)
        .min_by_key(|&v| (size[c1[v] as usize], c1[v]));
    let Some(v) = target else {
        // discrete partition: the colours define the only candidate map
        let mut inverse = vec![0usize; n];
        for (w, &c) in c2.iter().enumerate() {
            inverse[c as usize] = w;
        }
        let map: Vec<usize> = c1.iter().map(|&c| inverse[c as usize]).collect();
        let ok = g1.edges().all(|(a, b)| g2.has_edge(map[a], map[b]));
        return ok.then_some(map);
    };
    let fresh = n as u32 + 1;
    for w in (0..n).filter(|&w| c2[w] == c1[v]) {
        let mut d1 = c1.clone();
        let mut d2 = c2.clone();
        d1[v] = fresh;
        d2[w] = fresh;
        if let Some(map) = search(g1, g2, d1, d2) {
            return Some(map);
        }
    }
    None
}

/// An isomorphism `g1 -> g2` (as `map[v]`) that also preserves the given
/// vertex colours, if one exists.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, colours: Option<(&[u32], &[u32])>) -> Result<Option<Vec<usize>>> {
    let n = g1.n();
    if n.max(g2.n()) > ISO_MAX_ORDER {
        return Err(Error::TooLarge {
            n: n.max(g2.n()),
            max: ISO_MAX_ORDER,
        });
    }
    if n != g2.n() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let (c1, c2) = match colours {
        Some((a, b)) => {
            if a.len() != n || b.len() != n {
                return Err(Error::InvalidParameter(
                    "colour vector length differs from order".into(),
                ));
            }
            (a.to_vec(), b.to_vec())
        }
        None => (vec![0; n], vec![0; n]),
    };
    Ok(search(g1, g2, c1, c2))
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, None)?.is_some())
}

/// Isomorphism carrying `s1` onto `s2`.
pub fn is_isomorphic_marked(g1: &Graph, s1: &VertexSet, g2: &Graph, s2: &VertexSet) -> Result<bool> {
    let paint = |s: &VertexSet, n: usize| (0..n).map(|v| u32::from(s.contains(v))).collect::<Vec<_>>();
    let (a, b) = (paint(s1, g1.n()), paint(s2, g2.n()));
    Ok(find_isomorphism(g1, g2, Some((&a, &b)))?.is_some())
}
