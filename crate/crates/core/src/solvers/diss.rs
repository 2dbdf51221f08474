use super::{
    bit, check_order, lex_less, lowest, max_degree_vertex, verify_dissociation, Bits, Budget, SolveResult, Ticker,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Maximum dissociation set.
///
/// Every vertex is either outside the set, inside with no partner, or inside
/// with exactly one partner. Branching on a maximum-degree vertex `v`:
/// `v` isolated removes `N[v]`; `v` paired with `u` removes `N[v] ∪ N[u]`;
/// `v` excluded removes `v`. Vertices still undecided never see the chosen
/// set, so each subproblem is an induced subgraph.
pub fn max_dissociation_set(g: &Graph) -> Result<SolveResult> {
    max_dissociation_set_with_budget(g, Budget::unlimited())
}

pub fn max_dissociation_set_with_budget(g: &Graph, budget: Budget) -> Result<SolveResult> {
    let found = DissSearch::solve(g, Objective::size(), 0, budget)?;
    Ok(SolveResult {
        value: found.size,
        witness: VertexSet::from_mask(g.n(), found.set),
        nodes_explored: found.nodes,
    })
}

/// Linear objective `per_vertex * |D| + per_isolated * p`.
#[derive(Debug, Clone, Copy)]
pub(super) struct Objective {
    per_vertex: u64,
    per_isolated: u64,
    /// Break ties towards the lexicographically smallest set.
    lexicographic: bool,
}

impl Objective {
    pub(super) fn size() -> Self {
        Objective {
            per_vertex: 1,
            per_isolated: 0,
            lexicographic: false,
        }
    }

    /// Size first, then isolated count, then lexicographic order.
    pub(super) fn size_then_isolated(n: usize) -> Self {
        Objective {
            per_vertex: n as u64 + 1,
            per_isolated: 1,
            lexicographic: true,
        }
    }

    fn isolated(&self) -> u64 {
        self.per_vertex + self.per_isolated
    }

    fn pair(&self) -> u64 {
        2 * self.per_vertex
    }
}

pub(super) struct Found {
    pub set: u128,
    pub size: usize,
    pub nodes: u64,
}

pub(super) struct DissSearch {
    adj: Vec<u128>,
    objective: Objective,
    /// Minimum size a leaf must reach to be useful.
    target: usize,
    best: Option<(u64, u128, usize)>,
    ticker: Ticker,
}

impl DissSearch {
    pub(super) fn solve(g: &Graph, objective: Objective, target: usize, budget: Budget) -> Result<Found> {
        check_order(g)?;
        let n = g.n();
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let mut search = DissSearch {
            adj: g.masks(),
            objective,
            target,
            best: None,
            ticker: Ticker::new(budget),
        };
        search.run(full, 0, 0, 0);
        if search.ticker.timed_out {
            return Err(Error::Timeout);
        }
        let (_, set, size) = search.best.unwrap_or((0, 0, 0));
        verify_dissociation(g, &VertexSet::from_mask(n, set))?;
        Ok(Found {
            set,
            size,
            nodes: search.ticker.nodes,
        })
    }

    /// Upper bound on the set size inside `cand`: any three vertices forming
    /// a path cannot all be chosen, so each vertex-disjoint path on three
    /// vertices costs one.
    fn size_bound(&self, cand: u128) -> usize {
        let mut rest = cand;
        let mut paths = 0;
        for v in Bits(cand) {
            if rest & bit(v) == 0 {
                continue;
            }
            let nb = self.adj[v] & rest;
            if nb.count_ones() >= 2 {
                let a = nb & nb.wrapping_neg();
                let b = (nb & !a) & (nb & !a).wrapping_neg();
                rest &= !(bit(v) | a | b);
                paths += 1;
            }
        }
        // leftovers of degree >= 2 around a removed centre
        for v in Bits(rest) {
            let nb = self.adj[v] & rest;
            if nb.count_ones() >= 2 && rest & bit(v) != 0 {
                let a = nb & nb.wrapping_neg();
                let b = (nb & !a) & (nb & !a).wrapping_neg();
                rest &= !(bit(v) | a | b);
                paths += 1;
            }
        }
        cand.count_ones() as usize - paths
    }

    /// Whether a subtree with decided members `set` and undecided `cand`
    /// can still produce a set that beats `best` on the lexicographic tie-break.
    fn may_win_tie(set: u128, cand: u128, best: u128) -> bool {
        let horizon = if cand == 0 { u128::MAX } else { bit(lowest(cand)) - 1 };
        let diff = (set ^ best) & horizon;
        if diff == 0 {
            // equal on every decided prefix vertex: only an undecided vertex can differ
            return cand != 0;
        }
        set & (diff & diff.wrapping_neg()) != 0
    }

    fn record(&mut self, set: u128, size: usize, value: u64) {
        if size < self.target {
            return;
        }
        let better = match self.best {
            None => true,
            Some((bv, bs, _)) => value > bv || (self.objective.lexicographic && value == bv && lex_less(set, bs)),
        };
        if better {
            self.best = Some((value, set, size));
        }
    }

    fn run(&mut self, mut cand: u128, mut set: u128, mut size: usize, mut value: u64) {
        if self.ticker.tick() {
            return;
        }
        let obj = self.objective;
        // isolated vertices and isolated edges are taken whole
        for v in Bits(cand) {
            if cand & bit(v) == 0 {
                continue;
            }
            let nb = self.adj[v] & cand;
            if nb == 0 {
                set |= bit(v);
                cand &= !bit(v);
                size += 1;
                value += obj.isolated();
            } else if nb.count_ones() == 1 {
                let u = lowest(nb);
                if self.adj[u] & cand == bit(v) {
                    set |= bit(v) | bit(u);
                    cand &= !(bit(v) | bit(u));
                    size += 2;
                    value += obj.pair();
                }
            }
        }
        if cand == 0 {
            self.record(set, size, value);
            return;
        }
        let ub_size = self.size_bound(cand);
        if size + ub_size < self.target {
            return;
        }
        if let Some((best_value, best_set, _)) = self.best {
            // each vertex contributes at most the isolated weight
            let ub = value + ub_size as u64 * obj.isolated();
            if ub < best_value {
                return;
            }
            if ub == best_value && !(obj.lexicographic && Self::may_win_tie(set, cand, best_set)) {
                return;
            }
        }

        let (v, _) = max_degree_vertex(&self.adj, cand);
        let closed_v = bit(v) | self.adj[v];
        self.run(cand & !closed_v, set | bit(v), size + 1, value + obj.isolated());
        for u in Bits(self.adj[v] & cand) {
            let removed = closed_v | bit(u) | self.adj[u];
            self.run(cand & !removed, set | bit(v) | bit(u), size + 2, value + obj.pair());
        }
        self.run(cand & !bit(v), set, size, value);
    }
}
