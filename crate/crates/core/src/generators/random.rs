//! Random graph sources for property tests and surveys. All take a caller
//! supplied generator so runs are reproducible from a seed.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid")
}

/// Scans all vertex pairs in random order, adding each with probability
/// `density` while both ends still have degree below 3. Not necessarily
/// connected.
pub fn random_subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < 3 && deg[v] < 3 && rng.random_bool(density) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("valid")
}

/// Uniform triangle-free cubic graph of even order `n >= 6` from the
/// configuration model, rejecting loops, multiple edges and triangles.
/// Connectivity is not enforced.
pub fn random_triangle_free_cubic<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Result<Graph> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "triangle-free cubic graphs need even n >= 6, got {n}"
        )));
    }
    let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
    loop {
        points.shuffle(rng);
        let edges: Vec<(usize, usize)> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if edges.iter().any(|&(u, v)| u == v) {
            continue;
        }
        let g = Graph::from_edges(n, &edges).expect("no loops");
        if g.edge_count() == edges.len() && g.is_triangle_free() {
            return Ok(g);
        }
    }
}

/// Connected triangle-free graph of maximum degree at most 3: a random tree
/// grown by attaching each new vertex to a random earlier vertex of degree
/// below 3, then random extra edges that keep both properties.
pub fn random_connected_tf_subcubic<R: Rng + ?Sized>(rng: &mut R, n: usize, extra_density: f64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let mut adj = vec![Vec::<usize>::new(); n];
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| adj[u].len() < 3).collect();
        let u = open[rng.random_range(0..open.len())];
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    for (u, v) in pairs {
        let closes_triangle = adj[u].iter().any(|w| adj[v].contains(w));
        if adj[u].len() < 3
            && adj[v].len() < 3
            && !adj[u].contains(&v)
            && !closes_triangle
            && rng.random_bool(extra_density)
        {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let edges: Vec<(usize, usize)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in [6, 10, 20] {
            let g = random_triangle_free_cubic(&mut rng, n).unwrap();
            let c = classify(&g);
            assert!(c.cubic && c.triangle_free);
        }
        for n in 1..20 {
            let g = random_connected_tf_subcubic(&mut rng, n, 0.3).unwrap();
            let c = classify(&g);
            assert!(c.connected && c.subcubic && c.triangle_free);
            assert!(random_subcubic(&mut rng, n, 0.5).max_degree() <= 3);
        }
        assert!(random_triangle_free_cubic(&mut rng, 7).is_err());
    }
}
