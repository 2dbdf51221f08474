//! Batch verification over graph streams: one record per graph plus a
//! summary that flags anything contradicting a proven statement.

mod enumerate;
mod selftest;

pub use enumerate::{enumerate_graphs, EnumFilter, ENUM_MAX_ORDER};
pub use selftest::{run_selftest, SelfTestCase};

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{bound_report, ser_rational, BoundReport, Rational};
use crate::error::{Error, Result};
use crate::graph::{classify, encode_graph6, Graph, GraphClass};
use crate::recognize::{decompose_calG, theorem1_extremal_profile, CalGDecomposition, ExtremalProfile};
use crate::solvers::{
    edge_count_identity, max_diss_max_isolated_with_budget, max_dissociation_set_with_budget,
    max_independent_set_with_budget, Budget,
};

/// Environment variable naming the worker count.
pub const THREADS_ENV: &str = "DISSALPHA_THREADS";

/// Sizes the global worker pool from `DISSALPHA_THREADS` if it is set. Safe to
/// call more than once; later calls are ignored.
pub fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        let n: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("{THREADS_ENV}={value:?} is not a count")))?;
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Timeout,
    Error,
}

/// Outcome of the certificate lemma on a subcubic graph: the complement of a
/// maximum dissociation set with most isolated vertices is a dissociation
/// set, and for cubic graphs `3p + 4q = 3r + 4s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaCheck {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub complement_max_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cut: Option<usize>,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<GraphClass>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diss: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_report: Option<BoundReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basic_extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thm1_extremal: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<CalGDecomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<ExtremalProfile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma: Option<LemmaCheck>,
    /// Statements contradicted by this graph; empty on every sound run.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub falsifications: Vec<String>,
    /// Failed conjectured bounds; reported, never fatal.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<String>,
}

impl SurveyRecord {
    fn empty(index: usize, line: Option<usize>) -> Self {
        SurveyRecord {
            index,
            line,
            status: Status::Ok,
            error: None,
            graph6: String::new(),
            class: None,
            alpha: None,
            diss: None,
            ratio: None,
            bound_report: None,
            basic_extremal: None,
            thm1_extremal: None,
            decomposition: None,
            profile: None,
            lemma: None,
            falsifications: Vec::new(),
            findings: Vec::new(),
        }
    }

    fn failed(mut self, e: Error) -> Self {
        self.status = if e == Error::Timeout {
            Status::Timeout
        } else {
            Status::Error
        };
        self.error = Some(e.to_string());
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SurveyOptions {
    pub budget_ms: Option<u64>,
}

fn lemma_check(g: &Graph, budget: Budget) -> Result<LemmaCheck> {
    let c = match max_diss_max_isolated_with_budget(g, budget) {
        Ok(c) => c,
        Err(Error::IdentityViolated(_)) => {
            return Ok(LemmaCheck {
                p: 0,
                q: 0,
                r: 0,
                s: 0,
                complement_max_degree: usize::MAX,
                cut: None,
                holds: false,
            })
        }
        Err(e) => return Err(e),
    };
    let cubic = g.n() > 0 && g.min_degree() == 3 && g.max_degree() == 3;
    let (cut, identity) = if cubic {
        match edge_count_identity(g, &c) {
            Ok(rec) => (Some(rec.cut), true),
            Err(_) => (None, false),
        }
    } else {
        (None, true)
    };
    Ok(LemmaCheck {
        p: c.p,
        q: c.q,
        r: c.r,
        s: c.s,
        complement_max_degree: c.complement_max_degree,
        cut,
        holds: identity && c.complement_max_degree <= 1 && g.n() - c.size() == c.r + 2 * c.s,
    })
}

/// Solves and checks one graph.
pub fn survey_graph(index: usize, line: Option<usize>, g: &Graph, opts: SurveyOptions) -> SurveyRecord {
    let mut rec = SurveyRecord::empty(index, line);
    match fill_record(&mut rec, g, opts) {
        Ok(()) => rec,
        Err(e) => rec.failed(e),
    }
}

fn fill_record(rec: &mut SurveyRecord, g: &Graph, opts: SurveyOptions) -> Result<()> {
    let budget = opts.budget_ms.map_or(Budget::unlimited(), Budget::millis);
    rec.graph6 = encode_graph6(g)?;
    let class = classify(g);
    rec.class = Some(class);
    let alpha = max_independent_set_with_budget(g, budget)?.value;
    let diss = max_dissociation_set_with_budget(g, budget)?.value;
    rec.alpha = Some(alpha);
    rec.diss = Some(diss);
    if diss > 0 {
        let ratio = Rational::new(alpha as i64, diss as i64);
        if ratio < Rational::new(1, 2) || ratio > Rational::from_integer(1) {
            rec.falsifications.push(format!("ratio {ratio} outside [1/2, 1]"));
        }
        rec.ratio = Some(crate::bounds::format_rational(&ratio));
    }
    let report = bound_report(class, alpha, diss);
    for v in report.violations() {
        rec.falsifications.push(format!("bound {} violated", v.name));
    }
    for f in report.findings() {
        rec.findings.push(format!("bound {} fails", f.name));
    }
    if let Some(prop1) = report.record("prop1") {
        if prop1.applicable && prop1.tight && !g.is_tree() {
            rec.falsifications
                .push("prop1 tight on a graph that is not a tree".into());
        }
    }
    rec.bound_report = Some(report);

    let basic = 2 * alpha == diss;
    rec.basic_extremal = Some(basic);
    if class.connected && class.subcubic {
        let dec = decompose_calG(g)?;
        if dec.is_some() != basic {
            rec.falsifications.push(format!(
                "decomposition {} but 2α = diss is {basic}",
                if dec.is_some() { "found" } else { "missing" }
            ));
        }
        rec.decomposition = dec;
    }
    if class.subcubic && g.n() <= crate::solvers::MAX_SOLVER_ORDER {
        let lemma = lemma_check(g, budget)?;
        if !lemma.holds {
            rec.falsifications.push("certificate lemma fails".into());
        }
        rec.lemma = Some(lemma);
    }
    if class.connected && class.cubic && g.n() >= 6 {
        let extremal = 5 * alpha == 3 * diss;
        rec.thm1_extremal = Some(extremal);
        if extremal {
            match theorem1_extremal_profile(g) {
                Ok(p) => rec.profile = p,
                Err(Error::IdentityViolated(c)) => rec.falsifications.push(format!("extremal profile violated: {c}")),
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassStats {
    pub count: usize,
    #[serde(serialize_with = "ser_opt_rational")]
    pub min_ratio: Option<Rational>,
}

fn ser_opt_rational<S: serde::Serializer>(r: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ser_rational(r, s),
        None => s.serialize_none(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveySummary {
    pub graphs: usize,
    pub ok: usize,
    pub timeouts: usize,
    pub errors: usize,
    pub classes: BTreeMap<&'static str, ClassStats>,
    /// Number of applicable bounds met with equality, per bound.
    pub tight: BTreeMap<&'static str, usize>,
    pub basic_extremal: Vec<String>,
    pub thm1_extremal: Vec<String>,
    pub falsifications: Vec<String>,
    pub findings: Vec<String>,
}

impl SurveySummary {
    pub fn falsified(&self) -> bool {
        !self.falsifications.is_empty()
    }
}

fn class_names(c: &GraphClass) -> Vec<&'static str> {
    let mut names = vec!["all"];
    let flags = [
        (c.connected, "connected"),
        (c.cubic, "cubic"),
        (c.subcubic, "subcubic"),
        (c.triangle_free, "triangle_free"),
        (c.bipartite, "bipartite"),
        (c.connected && c.cubic, "connected_cubic"),
        (c.connected && c.subcubic, "connected_subcubic"),
        (c.connected && c.bipartite, "connected_bipartite"),
    ];
    names.extend(flags.iter().filter(|f| f.0).map(|f| f.1));
    names
}

pub fn summarize(records: &[SurveyRecord]) -> SurveySummary {
    let mut s = SurveySummary {
        graphs: records.len(),
        ok: 0,
        timeouts: 0,
        errors: 0,
        classes: BTreeMap::new(),
        tight: BTreeMap::new(),
        basic_extremal: Vec::new(),
        thm1_extremal: Vec::new(),
        falsifications: Vec::new(),
        findings: Vec::new(),
    };
    for r in records {
        match r.status {
            Status::Ok => s.ok += 1,
            Status::Timeout => s.timeouts += 1,
            Status::Error => s.errors += 1,
        }
        let label = r.line.map_or(format!("#{}", r.index), |l| format!("line {l}"));
        s.falsifications
            .extend(r.falsifications.iter().map(|f| format!("{label} {}: {f}", r.graph6)));
        s.findings
            .extend(r.findings.iter().map(|f| format!("{label} {}: {f}", r.graph6)));
        let Some(class) = &r.class else { continue };
        let ratio = match (r.alpha, r.diss) {
            (Some(a), Some(d)) if d > 0 => Some(Rational::new(a as i64, d as i64)),
            _ => None,
        };
        for name in class_names(class) {
            let entry = s.classes.entry(name).or_insert(ClassStats {
                count: 0,
                min_ratio: None,
            });
            entry.count += 1;
            if let Some(q) = ratio {
                entry.min_ratio = Some(entry.min_ratio.map_or(q, |m| m.min(q)));
            }
        }
        if let Some(report) = &r.bound_report {
            for b in report.records.iter().filter(|b| b.applicable && b.tight) {
                *s.tight.entry(b.name).or_default() += 1;
            }
        }
        if r.basic_extremal == Some(true) {
            s.basic_extremal.push(r.graph6.clone());
        }
        if r.thm1_extremal == Some(true) {
            s.thm1_extremal.push(r.graph6.clone());
        }
    }
    s
}

/// Input to a survey: the source line (if read from a stream) and the parsed
/// graph or the parse error.
pub type SurveyInput = (Option<usize>, Result<Graph>);

/// Surveys every input in parallel; records come back in input order.
pub fn run_survey(inputs: &[SurveyInput], opts: SurveyOptions) -> (Vec<SurveyRecord>, SurveySummary) {
    let records: Vec<SurveyRecord> = inputs
        .par_iter()
        .enumerate()
        .map(|(i, (line, parsed))| match parsed {
            Ok(g) => survey_graph(i, *line, g, opts),
            Err(e) => SurveyRecord::empty(i, *line).failed(e.clone()),
        })
        .collect();
    let summary = summarize(&records);
    (records, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, named_graph, petersen};

    #[test]
    fn records_and_summary() {
        let inputs: Vec<SurveyInput> = vec![
            (Some(1), Ok(gen_complete(4).unwrap())),
            (
                Some(2),
                Err(Error::Parse {
                    offset: 0,
                    reason: "bad".into(),
                }),
            ),
            (Some(3), Ok(petersen())),
            (Some(4), Ok(named_graph("fig3").unwrap().graph)),
        ];
        let (records, summary) = run_survey(&inputs, SurveyOptions::default());
        assert_eq!(records[0].alpha, Some(1));
        assert_eq!(records[1].status, Status::Error);
        assert_eq!(records[2].ratio.as_deref(), Some("2/3"));
        assert!(records[3].profile.is_some());
        assert_eq!((summary.ok, summary.errors), (3, 1));
        assert!(!summary.falsified(), "{:?}", summary.falsifications);
        assert_eq!(summary.thm1_extremal.len(), 1);
        assert_eq!(summary.classes["connected_cubic"].count, 3);
        assert_eq!(summary.classes["connected_cubic"].min_ratio, Some(Rational::new(1, 2)));
    }

    #[test]
    fn deterministic_output() {
        let inputs: Vec<SurveyInput> = (3..9).map(|n| (None, crate::generators::gen_cycle(n))).collect();
        let a = serde_json::to_string(&run_survey(&inputs, SurveyOptions::default()).0).unwrap();
        let b = serde_json::to_string(&run_survey(&inputs, SurveyOptions::default()).0).unwrap();
        assert_eq!(a, b);
        assert!(!a.contains('.'), "no floating point in survey output");
    }
}
