//! The randomized independent set behind the regular triangle-free bound.
//!
//! Given a dissociation set `D`, split it into the isolated part `D0` and
//! the matched part `D1` of `G[D]`. `I1` takes one end of every matched edge
//! at random. A uniformly random order is realised by i.i.d. 64-bit
//! priorities with index tie-break; `I2` takes each `D0` vertex that precedes
//! all its neighbours and each vertex outside `D` that precedes all its
//! neighbours outside `D1` and has no neighbour in `I1`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{ser_rational, Rational};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionStats {
    pub delta: usize,
    pub p: usize,
    pub q: usize,
    pub d0: VertexSet,
    pub d1: VertexSet,
    /// `r_vec[i]`: vertices outside `D` with exactly `i` neighbours in `D1`.
    pub r_vec: Vec<usize>,
}

/// Splits `d` and counts the `R_i`. For regular graphs also checks that the
/// edges leaving `D1` number `Σ i·r_i = 2(Δ−1)q`.
pub fn diss_partition_stats(g: &Graph, d: &VertexSet) -> Result<PartitionStats> {
    let n = g.n();
    if d.universe() != n {
        return Err(Error::InvalidParameter("set universe differs from graph order".into()));
    }
    let inside = |v: usize| g.neighbors(v).iter().filter(|&&w| d.contains(w)).count();
    let mut d0 = VertexSet::new(n);
    let mut d1 = VertexSet::new(n);
    for v in d.iter() {
        match inside(v) {
            0 => d0.insert(v),
            1 => d1.insert(v),
            _ => return Err(Error::NotDissociation(v)),
        }
    }
    let delta = g.max_degree();
    let mut r_vec = vec![0usize; delta + 1];
    for v in (0..n).filter(|&v| !d.contains(v)) {
        r_vec[g.neighbors(v).iter().filter(|&&w| d1.contains(w)).count()] += 1;
    }
    let stats = PartitionStats {
        delta,
        p: d0.len(),
        q: d1.len() / 2,
        d0,
        d1,
        r_vec,
    };
    if n > 0 && g.min_degree() == delta {
        let weighted: usize = stats.r_vec.iter().enumerate().map(|(i, r)| i * r).sum();
        let expected = 2 * delta.saturating_sub(1) * stats.q;
        if weighted != expected {
            return Err(Error::IdentityViolated(format!(
                "sum i*r_i = {weighted} but 2(Δ-1)q = {expected}"
            )));
        }
    }
    Ok(stats)
}

/// `E|I2| = (p + r_0)/(Δ+1) + Σ_{i>=1} r_i / (2^i (Δ−i+1))`.
pub fn expected_I2_exact(st: &PartitionStats) -> Rational {
    let delta = st.delta as i64;
    let mut e = Rational::new((st.p + st.r_vec.first().copied().unwrap_or(0)) as i64, delta + 1);
    for (i, &r) in st.r_vec.iter().enumerate().skip(1) {
        e += Rational::new(r as i64, (1i64 << i) * (delta - i as i64 + 1));
    }
    e
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm2Draw {
    pub i1: VertexSet,
    pub i2: VertexSet,
}

impl Thm2Draw {
    pub fn union(&self) -> VertexSet {
        let mut u = self.i1.clone();
        for v in self.i2.iter() {
            u.insert(v);
        }
        u
    }
}

fn draw<R: Rng>(g: &Graph, st: &PartitionStats, rng: &mut R) -> Result<Thm2Draw> {
    let n = g.n();
    let mut i1 = VertexSet::new(n);
    for u in st.d1.iter() {
        let partner = g
            .neighbors(u)
            .iter()
            .copied()
            .find(|&w| st.d1.contains(w))
            .expect("matched");
        if u < partner {
            i1.insert(if rng.random::<bool>() { u } else { partner });
        }
    }
    let priority: Vec<(u64, usize)> = (0..n).map(|v| (rng.random::<u64>(), v)).collect();
    let mut i2 = VertexSet::new(n);
    for u in (0..n).filter(|&u| !st.d1.contains(u)) {
        let before = |w: &usize| priority[u] < priority[*w];
        let chosen = if st.d0.contains(u) {
            g.neighbors(u).iter().all(before)
        } else {
            g.neighbors(u).iter().filter(|&&w| !st.d1.contains(w)).all(before)
                && g.neighbors(u).iter().all(|&w| !i1.contains(w))
        };
        if chosen {
            i2.insert(u);
        }
    }
    let out = Thm2Draw { i1, i2 };
    let all = out.union();
    if let Some((a, b)) = g.edges().find(|&(a, b)| all.contains(a) && all.contains(b)) {
        return Err(Error::NotIndependent(a, b));
    }
    Ok(out)
}

/// One draw of `I1` and `I2` from the generator seeded with `seed`.
pub fn sample_thm2_parts(g: &Graph, d: &VertexSet, seed: u64) -> Result<Thm2Draw> {
    let st = diss_partition_stats(g, d)?;
    draw(g, &st, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `I1 ∪ I2` for one draw; errors if the result is not independent.
pub fn sample_thm2_set(g: &Graph, d: &VertexSet, seed: u64) -> Result<VertexSet> {
    Ok(sample_thm2_parts(g, d, seed)?.union())
}

/// Emitted JSON carries no float numbers: the two sample statistics are
/// written as decimal strings.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MCResult {
    pub trials: u64,
    pub seed: u64,
    #[serde(serialize_with = "ser_decimal")]
    pub sample_mean: f64,
    #[serde(serialize_with = "ser_decimal")]
    pub sample_stderr: f64,
    #[serde(serialize_with = "ser_rational")]
    pub exact_expectation: Rational,
    /// How often each vertex landed in `I2`.
    pub membership: Vec<u64>,
}

fn ser_decimal<S: serde::Serializer>(x: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Clone)]
struct Tally {
    sum: u64,
    sum_sq: u64,
    membership: Vec<u64>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.sum += other.sum;
        self.sum_sq += other.sum_sq;
        for (a, b) in self.membership.iter_mut().zip(other.membership) {
            *a += b;
        }
        self
    }
}

/// Mean and standard error of `|I2|` over `trials` draws. Trial `t` uses the
/// generator seeded with `seed` on stream `t`, so results do not depend on
/// how trials are scheduled across threads.
pub fn montecarlo_I2(g: &Graph, d: &VertexSet, trials: u64, seed: u64) -> Result<MCResult> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    let st = diss_partition_stats(g, d)?;
    let n = g.n();
    let empty = || Tally {
        sum: 0,
        sum_sq: 0,
        membership: vec![0; n],
    };
    let tally = (0..trials)
        .into_par_iter()
        .try_fold(empty, |mut acc, t| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(t);
            let sample = draw(g, &st, &mut rng)?;
            let size = sample.i2.len() as u64;
            acc.sum += size;
            acc.sum_sq += size * size;
            for v in sample.i2.iter() {
                acc.membership[v] += 1;
            }
            Ok::<_, Error>(acc)
        })
        .try_reduce(empty, |a, b| Ok(a.merge(b)))?;
    let t = trials as f64;
    let mean = tally.sum as f64 / t;
    let variance = if trials > 1 {
        ((tally.sum_sq as f64 - t * mean * mean) / (t - 1.0)).max(0.0)
    } else {
        0.0
    };
    Ok(MCResult {
        trials,
        seed,
        sample_mean: mean,
        sample_stderr: (variance / t).sqrt(),
        exact_expectation: expected_I2_exact(&st),
        membership: tally.membership,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_complete_bipartite;

    #[test]
    fn hand_built_expectation() {
        let st = PartitionStats {
            delta: 3,
            p: 0,
            q: 3,
            d0: VertexSet::new(10),
            d1: VertexSet::new(10),
            r_vec: vec![0, 0, 0, 4],
        };
        assert_eq!(expected_I2_exact(&st), Rational::new(1, 2));
        let isolated = PartitionStats {
            p: 5,
            r_vec: vec![0; 4],
            ..st.clone()
        };
        assert_eq!(expected_I2_exact(&isolated), Rational::new(5, 4));
    }

    #[test]
    fn independent_side_of_k33() {
        let g = gen_complete_bipartite(3, 3).unwrap();
        let d = VertexSet::from_vertices(6, [0, 1, 2]).unwrap();
        let st = diss_partition_stats(&g, &d).unwrap();
        assert_eq!((st.p, st.q, st.r_vec.clone()), (3, 0, vec![3, 0, 0, 0]));
        for seed in 0..200 {
            let s = sample_thm2_set(&g, &d, seed).unwrap();
            assert!(g.is_independent(&s));
        }
    }

    #[test]
    fn single_trial_mean() {
        let g = gen_complete_bipartite(3, 3).unwrap();
        let d = VertexSet::from_vertices(6, [0, 1, 2]).unwrap();
        let r = montecarlo_I2(&g, &d, 1, 9).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        rng.set_stream(0);
        let st = diss_partition_stats(&g, &d).unwrap();
        assert_eq!(r.sample_mean, draw(&g, &st, &mut rng).unwrap().i2.len() as f64);
        assert_eq!(r.sample_stderr, 0.0);
        assert!(montecarlo_I2(&g, &d, 0, 9).is_err());
    }
}
