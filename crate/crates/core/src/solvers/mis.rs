use super::{bit, check_order, max_degree_vertex, verify_independent, Bits, Budget, SolveResult, Ticker};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximum independent set by branch-and-bound on a maximum-degree vertex.
pub fn max_independent_set(g: &Graph) -> Result<SolveResult> {
    max_independent_set_with_budget(g, Budget::unlimited())
}

pub fn max_independent_set_with_budget(g: &Graph, budget: Budget) -> Result<SolveResult> {
    check_order(g)?;
    let n = g.n();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut search = MisSearch {
        adj: g.masks(),
        best: 0,
        best_set: 0,
        ticker: Ticker::new(budget),
    };
    search.run(full, 0, 0);
    if search.ticker.timed_out {
        return Err(Error::Timeout);
    }
    let witness = VertexSet::from_mask(n, search.best_set);
    verify_independent(g, &witness)?;
    debug_assert_eq!(witness.len(), search.best);
    Ok(SolveResult {
        value: search.best,
        witness,
        nodes_explored: search.ticker.nodes,
    })
}

struct MisSearch {
    adj: Vec<u128>,
    best: usize,
    best_set: u128,
    ticker: Ticker,
}

impl MisSearch {
    /// Upper bound: vertices left minus a greedy matching inside them.
    fn bound(&self, cand: u128) -> usize {
        let mut free = cand;
        let mut matched = 0;
        for v in Bits(cand) {
            if free & bit(v) == 0 {
                continue;
            }
            let nb = self.adj[v] & free;
            if nb != 0 {
                free &= !(bit(v) | (nb & nb.wrapping_neg()));
                matched += 1;
            }
        }
        cand.count_ones() as usize - matched
    }

    fn run(&mut self, mut cand: u128, mut set: u128, mut size: usize) {
        if self.ticker.tick() {
            return;
        }
        // vertices of degree <= 1 belong to some maximum independent set
        loop {
            let low = Bits(cand).find(|&v| (self.adj[v] & cand).count_ones() <= 1);
            match low {
                Some(v) => {
                    set |= bit(v);
                    size += 1;
                    cand &= !(bit(v) | self.adj[v]);
                }
                None => break,
            }
        }
        if cand == 0 {
            if size > self.best || self.best_set == 0 && size == self.best {
                self.best = size;
                self.best_set = set;
            }
            return;
        }
        if size + self.bound(cand) <= self.best {
            return;
        }
        let (v, _) = max_degree_vertex(&self.adj, cand);
        self.run(cand & !(bit(v) | self.adj[v]), set | bit(v), size + 1);
        self.run(cand & !bit(v), set, size);
    }
}
