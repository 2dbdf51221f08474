use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn gen_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn gen_path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn gen_complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
    Graph::from_edges(a + b, &edges)
}

fn check_k_ell(k: usize, ell: usize) -> Result<()> {
    if k < 2 || ell < 2 {
        return Err(Error::InvalidParameter(format!(
            "k and l must be at least 2, got k={k}, l={ell}"
        )));
    }
    Ok(())
}

/// Clique `i` occupies `2k*i .. 2k*(i+1)`; its first `k` vertices form
/// `L(i)`, the last `k` form `R(i)`.
fn clique_chain(k: usize, ell: usize, shifts: &[usize]) -> Result<Graph> {
    check_k_ell(k, ell)?;
    let left = |i: usize, j: usize| 2 * k * (i % ell) + j;
    let right = |i: usize, j: usize| 2 * k * i + k + j;
    let mut edges = Vec::new();
    for i in 0..ell {
        let base = 2 * k * i;
        for u in 0..2 * k {
            for v in u + 1..2 * k {
                edges.push((base + u, base + v));
            }
        }
        for &shift in shifts {
            for j in 0..k {
                edges.push((right(i, j), left(i + 1, (j + shift) % k)));
            }
        }
    }
    Graph::from_edges(2 * k * ell, &edges)
}

/// `ℓ` copies of `K_{2k}` joined in a ring: the `j`-th vertex of `R(i)` is
/// matched to the `j`-th vertex of `L(i+1)`.
#[allow(non_snake_case)]
pub fn gen_G_k_ell(k: usize, ell: usize) -> Result<Graph> {
    clique_chain(k, ell, &[0])
}

/// `G(k,ℓ)` plus a second matching pairing the `j`-th vertex of `R(i)` with
/// the `(j+1 mod k)`-th vertex of `L(i+1)`.
#[allow(non_snake_case)]
pub fn gen_Gprime_k_ell(k: usize, ell: usize) -> Result<Graph> {
    clique_chain(k, ell, &[0, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    fn regular_of(g: &Graph) -> Option<usize> {
        let c = classify(g);
        c.regular.then_some(c.max_degree)
    }

    #[test]
    fn cycle_and_clique() {
        assert_eq!(gen_cycle(3).unwrap(), gen_complete(3).unwrap());
        assert!(gen_cycle(2).is_err());
        assert!(gen_complete(0).is_err());
        assert_eq!(gen_cycle(6).unwrap().edges().count(), 6);
    }

    #[test]
    fn ring_degrees() {
        for (k, ell) in [(2, 2), (2, 3), (3, 2), (3, 3)] {
            let g = gen_G_k_ell(k, ell).unwrap();
            assert_eq!(g.n(), 2 * k * ell);
            assert_eq!(regular_of(&g), Some(2 * k));
            assert!(g.is_connected());
            let h = gen_Gprime_k_ell(k, ell).unwrap();
            assert_eq!(regular_of(&h), Some(2 * k + 1));
        }
    }

    #[test]
    fn parameter_floor() {
        assert!(gen_G_k_ell(1, 3).is_err());
        assert!(gen_Gprime_k_ell(2, 1).is_err());
    }
}
