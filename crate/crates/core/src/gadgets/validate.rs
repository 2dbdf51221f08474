use serde::Serialize;

use super::witness::covered;
use crate::graph::Multigraph;

/// Outcome of one membership clause.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub clause: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HValidation {
    pub n1: usize,
    pub n2: usize,
    pub n3: usize,
    pub checks: Vec<Check>,
}

impl HValidation {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, clause: &'static str, failure: Option<String>) {
        self.checks.push(Check {
            clause,
            passed: failure.is_none(),
            detail: failure.unwrap_or_default(),
        });
    }
}

/// Checks every structural clause for `(h, k, m)`: the degree equation,
/// connectivity, subcubicity, looplessness and that `m` is an induced
/// matching of size `k` covering every degree-1 vertex. Orientation
/// existence is not part of this report.
pub fn validate_H(h: &Multigraph, k: usize, m: &[usize]) -> HValidation {
    let deg = h.degrees();
    let count = |d: usize| deg.iter().filter(|&&x| x == d).count();
    let (n1, n2, n3) = (count(1), count(2), count(3));
    let mut report = HValidation {
        n1,
        n2,
        n3,
        checks: Vec::new(),
    };

    report.push("k_positive", (k == 0).then(|| "k must be at least 1".to_string()));
    let lhs = 3 * n1 + 2 * n2 + n3;
    report.push(
        "degree_equation",
        (lhs != 6 * k).then(|| format!("3n1+2n2+n3 = {lhs}, 6k = {}", 6 * k)),
    );
    report.push(
        "connected",
        (!h.is_connected()).then(|| "H is disconnected".to_string()),
    );
    let heavy: Vec<usize> = (0..h.n()).filter(|&v| deg[v] > 3 || deg[v] == 0).collect();
    report.push(
        "subcubic",
        (!heavy.is_empty()).then(|| format!("vertices with degree outside 1..=3: {heavy:?}")),
    );
    let loops: Vec<usize> = h
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.0 == e.1)
        .map(|(i, _)| i)
        .collect();
    report.push(
        "loopless",
        (!loops.is_empty()).then(|| format!("loops at edge ids {loops:?}")),
    );

    let bad_ids: Vec<usize> = m.iter().copied().filter(|&id| id >= h.edges().len()).collect();
    report.push(
        "matching_ids",
        (!bad_ids.is_empty()).then(|| format!("unknown edge ids {bad_ids:?}")),
    );
    let mut ids: Vec<usize> = m.iter().copied().filter(|&id| id < h.edges().len()).collect();
    ids.sort_unstable();
    ids.dedup();
    report.push(
        "matching_size",
        (ids.len() != k || m.len() != k)
            .then(|| format!("|M| = {} distinct of {} listed, k = {k}", ids.len(), m.len())),
    );

    let mut hits = vec![0usize; h.n()];
    for &id in &ids {
        let (u, v) = h.edge(id);
        hits[u] += 1;
        hits[v] += 1;
    }
    let shared: Vec<usize> = (0..h.n()).filter(|&v| hits[v] > 1).collect();
    report.push(
        "matching",
        (!shared.is_empty()).then(|| format!("vertices on two M-edges: {shared:?}")),
    );

    let cov = covered(h, &ids);
    let chords: Vec<usize> = (0..h.edges().len())
        .filter(|id| ids.binary_search(id).is_err())
        .filter(|&id| {
            let (u, v) = h.edge(id);
            cov[u] && cov[v]
        })
        .collect();
    report.push(
        "induced",
        (!chords.is_empty()).then(|| format!("edges outside M joining covered vertices: {chords:?}")),
    );

    let bare: Vec<usize> = (0..h.n()).filter(|&v| deg[v] == 1 && !cov[v]).collect();
    report.push(
        "covers_degree_one",
        (!bare.is_empty()).then(|| format!("uncovered degree-1 vertices: {bare:?}")),
    );
    report
}

/// Checks that `orientation` directs exactly the edges outside `m`, each
/// towards one of its endpoints, and that every uncovered vertex has exactly
/// two outgoing edges. Returns the list of problems.
pub fn orientation_problems(h: &Multigraph, m: &[usize], orientation: &[(usize, usize)]) -> Vec<String> {
    let mut problems = Vec::new();
    let e = h.edges().len();
    let mut seen = vec![false; e];
    let mut out = vec![0usize; h.n()];
    for &(id, head) in orientation {
        if id >= e {
            problems.push(format!("unknown edge id {id}"));
            continue;
        }
        if m.contains(&id) {
            problems.push(format!("matching edge {id} is oriented"));
        }
        if std::mem::replace(&mut seen[id], true) {
            problems.push(format!("edge {id} oriented twice"));
        }
        let (u, v) = h.edge(id);
        if head != u && head != v {
            problems.push(format!("head {head} is not an endpoint of edge {id}"));
            continue;
        }
        out[h.other_end(id, head)] += 1;
    }
    for id in (0..e).filter(|&id| !seen[id] && !m.contains(&id)) {
        problems.push(format!("edge {id} is not oriented"));
    }
    let cov = covered(h, m);
    for v in (0..h.n()).filter(|&v| !cov[v] && out[v] != 2) {
        problems.push(format!("uncovered vertex {v} has out-degree {}", out[v]));
    }
    problems
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let h = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let r = validate_H(&h, 1, &[0]);
        assert!(r.is_valid(), "{r:?}");
        assert_eq!((r.n1, r.n2, r.n3), (2, 0, 0));
    }

    #[test]
    fn clauses_fail_individually() {
        let h = Multigraph::new(2, vec![(0, 1)]).unwrap();
        let r = validate_H(&h, 2, &[]);
        let failed: Vec<_> = r.failures().map(|c| c.clause).collect();
        assert_eq!(failed, vec!["degree_equation", "matching_size", "covers_degree_one"]);
    }

    #[test]
    fn non_induced_matching() {
        // path a-b-c-d with M = {ab, cd}: bc joins covered vertices
        let h = Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = validate_H(&h, 2, &[0, 2]);
        assert!(r.failures().any(|c| c.clause == "induced"));
    }
}
