//! Exhaustive subset enumeration, used only to cross-check the solvers.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_ORDER: usize = 24;

fn small_masks(g: &Graph) -> Result<Vec<u32>> {
    if g.n() > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            n: g.n(),
            max: ORACLE_MAX_ORDER,
        });
    }
    Ok((0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect())
}

fn best_subset(g: &Graph, max_inside: u32) -> Result<usize> {
    let adj = small_masks(g)?;
    let n = g.n();
    let mut best = 0;
    for subset in 0u32..(1u32 << n) {
        let size = subset.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = subset;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & subset).count_ones() > max_inside {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}

/// α(g) by checking every subset.
pub fn oracle_mis(g: &Graph) -> Result<usize> {
    best_subset(g, 0)
}

/// diss(g) by checking every subset.
pub fn oracle_diss(g: &Graph) -> Result<usize> {
    best_subset(g, 1)
}
