//! Exact independence and dissociation numbers.
//!
//! Both solvers are depth-first branch-and-bound over `u128` vertex masks, so
//! they accept graphs of order at most [`MAX_SOLVER_ORDER`]. Witnesses are
//! re-checked before they are returned.

mod certificate;
mod diss;
mod mis;
mod oracle;

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub use certificate::{
    edge_count_identity, max_diss_max_isolated, max_diss_max_isolated_with_budget, DissCertificate, EdgeCountRecord,
};
pub use diss::{max_dissociation_set, max_dissociation_set_with_budget};
pub use mis::{max_independent_set, max_independent_set_with_budget};
pub use oracle::{oracle_diss, oracle_mis, ORACLE_MAX_ORDER};

pub const MAX_SOLVER_ORDER: usize = 128;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub value: usize,
    pub witness: VertexSet,
    pub nodes_explored: u64,
}

/// Optional wall-clock limit for a single solve.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { deadline: None }
    }

    pub fn millis(ms: u64) -> Self {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    fn exhausted(&self) -> bool {
        self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Node counter that polls the clock every few thousand nodes.
struct Ticker {
    nodes: u64,
    budget: Budget,
    timed_out: bool,
}

impl Ticker {
    fn new(budget: Budget) -> Self {
        Ticker {
            nodes: 0,
            budget,
            timed_out: false,
        }
    }

    #[inline]
    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.budget.exhausted() {
            self.timed_out = true;
        }
        self.timed_out
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_SOLVER_ORDER {
        return Err(Error::TooLarge {
            n: g.n(),
            max: MAX_SOLVER_ORDER,
        });
    }
    Ok(())
}

#[inline]
fn bit(v: usize) -> u128 {
    1u128 << v
}

#[inline]
fn lowest(m: u128) -> usize {
    m.trailing_zeros() as usize
}

struct Bits(u128);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Vertex of largest degree inside `cand`, smallest label on ties.
fn max_degree_vertex(adj: &[u128], cand: u128) -> (usize, u32) {
    let mut best = (lowest(cand), 0);
    let mut first = true;
    for v in Bits(cand) {
        let d = (adj[v] & cand).count_ones();
        if first || d > best.1 {
            best = (v, d);
            first = false;
        }
    }
    best
}

/// `a` precedes `b` in lexicographic order of ascending vertex lists.
#[inline]
fn lex_less(a: u128, b: u128) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

pub(crate) fn verify_independent(g: &Graph, set: &VertexSet) -> Result<()> {
    for v in set.iter() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| set.contains(w)) {
            return Err(Error::NotIndependent(v.min(w), v.max(w)));
        }
    }
    Ok(())
}

pub(crate) fn verify_dissociation(g: &Graph, set: &VertexSet) -> Result<()> {
    for v in set.iter() {
        if g.neighbors(v).iter().filter(|&&w| set.contains(w)).count() > 1 {
            return Err(Error::NotDissociation(v));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_of_masks() {
        // {0,5} < {1,2}
        assert!(lex_less(0b100001, 0b110));
        assert!(!lex_less(0b110, 0b100001));
        // {1,2} < {1,3}
        assert!(lex_less(0b0110, 0b1010));
        assert!(!lex_less(7, 7));
    }
}
