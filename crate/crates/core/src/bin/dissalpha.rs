use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use dissalpha::bounds::{check_all_bounds, montecarlo_I2};
use dissalpha::gadgets::{
    builtin_witness, canonical_dissociation_set, expand_to_Gk, find_orientation, GadgetKind, HWitness,
};
use dissalpha::generators::{
    build_calG, gen_G_k_ell, gen_Gprime_k_ell, gen_complete, gen_complete_bipartite, gen_cycle, gen_path, named_graph,
    random_calg_spec, random_connected_tf_subcubic, random_triangle_free_cubic,
};
use dissalpha::graph::{encode_graph6, parse_graph6_stream, Graph};
use dissalpha::recognize::{decompose_calG, theorem1_extremal_profile, verify_Gk_witness};
use dissalpha::solvers::{
    max_diss_max_isolated_with_budget, max_dissociation_set_with_budget, max_independent_set_with_budget, Budget,
};
use dissalpha::survey::{configure_threads, enumerate_graphs, run_selftest, run_survey, EnumFilter, SurveyOptions};
use dissalpha::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Parser)]
#[command(name = "dissalpha", version, about = "Independence vs. dissociation number toolkit")]
struct Cli {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum What {
    Alpha,
    Diss,
    Both,
    Certificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Blocks K2/K3/K4* with extra edges (2α = diss).
    Calg,
    /// Connected cubic graphs with 5α = 3·diss (profile check).
    CubicExtremal,
    /// Expansion of a witness multigraph; needs --witness.
    Gk,
}

#[derive(Subcommand)]
enum Command {
    /// α and/or diss for every graph in a graph6/sparse6 stream.
    Solve {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, value_enum, default_value = "both")]
        what: What,
        #[arg(long)]
        budget_ms: Option<u64>,
    },
    /// Checks every bound and characterization on a stream or on all small graphs.
    Survey {
        #[arg(long = "in")]
        input: Option<String>,
        /// Enumerate all graphs of order 1..=N (N <= 7) instead of reading input.
        #[arg(long)]
        exhaustive_upto: Option<usize>,
        /// With --exhaustive-upto: keep only connected graphs.
        #[arg(long)]
        connected: bool,
        /// With --exhaustive-upto: keep only graphs of maximum degree at most this.
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        budget_ms: Option<u64>,
        /// Print only the summary line.
        #[arg(long)]
        summary_only: bool,
    },
    /// Emits a graph6 line for a named graph or family member.
    Gen {
        /// cycle, path, complete, kab, Gkl, Gprimekl, calg-random, tf-cubic-random,
        /// tf-subcubic-random, or any named graph (fig3, figl, fig1_tree, ...).
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Write expected invariants and marked vertices as JSON here.
        #[arg(long)]
        sidecar: Option<PathBuf>,
    },
    /// Expands a witness multigraph (JSON file or built-in name) into a cubic graph.
    Expand {
        #[arg(long)]
        witness: String,
        /// Override a leaf gadget, e.g. `--leaf 3=LEAF9_B`.
        #[arg(long)]
        leaf: Vec<String>,
        /// Emit a JSON record (graph6, canonical set, map) instead of graph6.
        #[arg(long)]
        json: bool,
    },
    /// Recognizes family membership with a certificate.
    Recognize {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long)]
        witness: Option<String>,
    },
    /// Exact-rational bound report for every graph in a stream.
    Bounds {
        #[arg(long = "in", default_value = "-")]
        input: String,
    },
    /// Monte-Carlo estimate of E|I2| for the first graph of a stream, with a
    /// maximum dissociation set as D.
    Montecarlo {
        #[arg(long = "in", default_value = "-")]
        input: String,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Runs the built-in known-answer checks.
    Selftest,
}

fn read_input(path: &str) -> Result<String> {
    let mut text = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Error::InvalidParameter(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

/// Loads a witness; a file without an orientation gets one from the flow
/// search (or fails if none exists).
fn read_witness(spec: &str) -> Result<HWitness> {
    let mut w = if std::path::Path::new(spec).exists() {
        HWitness::from_json(&read_input(spec)?)?
    } else {
        builtin_witness(spec)?
    };
    if w.orientation.is_empty() && w.m.len() < w.h.edges().len() {
        w.orientation = find_orientation(&w.h, &w.m)
            .ok_or_else(|| Error::InvalidWitness("no orientation gives every uncovered vertex out-degree 2".into()))?;
    }
    Ok(w)
}

fn budget(ms: Option<u64>) -> Budget {
    ms.map_or(Budget::unlimited(), Budget::millis)
}

fn error_line(line: usize, e: &Error) -> Value {
    json!({ "line": line, "error": e.to_string() })
}

/// Applies `f` to every parsed graph in parallel; lines come back in input order.
fn per_graph(text: &str, f: impl Fn(&Graph) -> Result<Value> + Sync) -> Vec<Value> {
    parse_graph6_stream(text)
        .into_par_iter()
        .map(|(line, parsed)| {
            let outcome = parsed.and_then(|g| {
                let mut v = f(&g)?;
                v["graph6"] = json!(encode_graph6(&g)?);
                Ok(v)
            });
            match outcome {
                Ok(mut v) => {
                    v["line"] = json!(line);
                    v
                }
                Err(e) => error_line(line, &e),
            }
        })
        .collect()
}

fn solve(g: &Graph, what: What, ms: Option<u64>) -> Result<Value> {
    let b = budget(ms);
    let mut v = json!({ "n": g.n() });
    if matches!(what, What::Alpha | What::Both) {
        let r = max_independent_set_with_budget(g, b)?;
        v["alpha"] = json!(r.value);
        v["alpha_witness"] = json!(r.witness);
    }
    if matches!(what, What::Diss | What::Both) {
        let r = max_dissociation_set_with_budget(g, b)?;
        v["diss"] = json!(r.value);
        v["diss_witness"] = json!(r.witness);
    }
    if matches!(what, What::Certificate) {
        let c = max_diss_max_isolated_with_budget(g, b)?;
        v["diss"] = json!(c.size());
        v["certificate"] = json!(c);
    }
    Ok(v)
}

fn gen(family: &str, p: &GenParams, rng: &mut ChaCha8Rng) -> Result<(Graph, Value)> {
    let need =
        |x: Option<usize>, name: &str| x.ok_or_else(|| Error::InvalidParameter(format!("{family} needs --{name}")));
    let plain = |g: Graph| (g, json!({}));
    Ok(match family {
        "cycle" => plain(gen_cycle(need(p.n, "n")?)?),
        "path" => plain(gen_path(need(p.n, "n")?)?),
        "complete" => plain(gen_complete(need(p.n, "n")?)?),
        "kab" => plain(gen_complete_bipartite(need(p.a, "a")?, need(p.b, "b")?)?),
        "Gkl" => {
            let (k, l) = (need(p.k, "k")?, need(p.l, "l")?);
            (
                gen_G_k_ell(k, l)?,
                json!({ "expected_alpha": l, "expected_diss": 2 * l }),
            )
        }
        "Gprimekl" => plain(gen_Gprime_k_ell(need(p.k, "k")?, need(p.l, "l")?)?),
        "calg-random" => {
            let m = build_calG(&random_calg_spec(rng, p.n.unwrap_or(6)))?;
            let d = m.marked.len();
            (
                m.graph,
                json!({ "marked": m.marked, "expected_diss": d, "expected_alpha": d / 2 }),
            )
        }
        "tf-cubic-random" => plain(random_triangle_free_cubic(rng, need(p.n, "n")?)?),
        "tf-subcubic-random" => plain(random_connected_tf_subcubic(rng, need(p.n, "n")?, 0.3)?),
        name => {
            let ng = named_graph(name)?;
            let side = json!({
                "name": ng.name,
                "expected_alpha": ng.expected_alpha,
                "expected_diss": ng.expected_diss,
                "marked": ng.marked,
            });
            (ng.graph, side)
        }
    })
}

struct GenParams {
    n: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    a: Option<usize>,
    b: Option<usize>,
}

fn parse_leaf(spec: &str) -> Result<(usize, GadgetKind)> {
    let bad = || Error::InvalidParameter(format!("leaf override {spec:?} is not VERTEX=LEAF9_A|LEAF9_B"));
    let (v, kind) = spec.split_once('=').ok_or_else(bad)?;
    let v = v.trim().parse().map_err(|_| bad())?;
    let kind: GadgetKind = serde_json::from_value(json!(kind.trim())).map_err(|_| bad())?;
    Ok((v, kind))
}

struct Outcome {
    lines: Vec<String>,
    failed: bool,
}

fn to_lines(values: Vec<Value>) -> Vec<String> {
    values.into_iter().map(|v| v.to_string()).collect()
}

fn run(cmd: Command) -> Result<Outcome> {
    let ok = |lines| Ok(Outcome { lines, failed: false });
    match cmd {
        Command::Solve { input, what, budget_ms } => {
            let text = read_input(&input)?;
            ok(to_lines(per_graph(&text, |g| solve(g, what, budget_ms))))
        }
        Command::Survey {
            input,
            exhaustive_upto,
            connected,
            max_degree,
            budget_ms,
            summary_only,
        } => {
            let inputs = match (input, exhaustive_upto) {
                (Some(path), None) => parse_graph6_stream(&read_input(&path)?)
                    .into_iter()
                    .map(|(l, g)| (Some(l), g))
                    .collect(),
                (None, Some(upto)) => {
                    let filter = EnumFilter { connected, max_degree };
                    let mut all = Vec::new();
                    for n in 1..=upto {
                        all.extend(enumerate_graphs(n, filter)?.into_iter().map(|g| (None, Ok(g))));
                    }
                    all
                }
                _ => {
                    return Err(Error::InvalidParameter(
                        "survey needs exactly one of --in and --exhaustive-upto".into(),
                    ))
                }
            };
            let (records, summary) = run_survey(&inputs, SurveyOptions { budget_ms });
            let mut lines = Vec::new();
            if !summary_only {
                lines.extend(records.iter().map(|r| serde_json::to_string(r).expect("serializes")));
            }
            lines.push(json!({ "summary": summary }).to_string());
            Ok(Outcome {
                lines,
                failed: summary.falsified(),
            })
        }
        Command::Gen {
            family,
            n,
            k,
            l,
            a,
            b,
            seed,
            count,
            sidecar,
        } => {
            let params = GenParams { n, k, l, a, b };
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut lines = Vec::new();
            let mut sides = Vec::new();
            for _ in 0..count.max(1) {
                let (g, side) = gen(&family, &params, &mut rng)?;
                lines.push(encode_graph6(&g)?);
                sides.push(side);
            }
            if let Some(path) = sidecar {
                let body = if sides.len() == 1 {
                    sides.remove(0)
                } else {
                    json!(sides)
                };
                fs::write(&path, format!("{body}\n"))
                    .map_err(|e| Error::InvalidParameter(format!("cannot write {}: {e}", path.display())))?;
            }
            ok(lines)
        }
        Command::Expand {
            witness,
            leaf,
            json: as_json,
        } => {
            let w = read_witness(&witness)?;
            let mut choices = w.leaf_choices.clone();
            for spec in &leaf {
                let (v, kind) = parse_leaf(spec)?;
                choices.insert(v, kind);
            }
            let (g, map) = expand_to_Gk(&w, &choices)?;
            let g6 = encode_graph6(&g)?;
            if as_json {
                let d = canonical_dissociation_set(&g, &w, &map)?;
                ok(vec![json!({
                    "graph6": g6,
                    "n": g.n(),
                    "k": w.k,
                    "canonical_dissociation_set": d,
                    "map": map,
                })
                .to_string()])
            } else {
                ok(vec![g6])
            }
        }
        Command::Recognize { family, input, witness } => {
            let text = read_input(&input)?;
            let w = witness.as_deref().map(read_witness).transpose()?;
            let values = per_graph(&text, |g| match family {
                Family::Calg => {
                    let dec = decompose_calG(g)?;
                    Ok(json!({ "member": dec.is_some(), "decomposition": dec }))
                }
                Family::CubicExtremal => {
                    let p = theorem1_extremal_profile(g)?;
                    Ok(json!({ "member": p.is_some(), "profile": p }))
                }
                Family::Gk => {
                    let w = w
                        .as_ref()
                        .ok_or_else(|| Error::InvalidParameter("--family gk needs --witness".into()))?;
                    Ok(json!({ "member": verify_Gk_witness(g, w, &w.leaf_choices)? }))
                }
            });
            ok(to_lines(values))
        }
        Command::Bounds { input } => {
            let text = read_input(&input)?;
            ok(to_lines(per_graph(&text, |g| Ok(json!(check_all_bounds(g)?)))))
        }
        Command::Montecarlo { input, trials, seed } => {
            let text = read_input(&input)?;
            let (line, parsed) = parse_graph6_stream(&text)
                .into_iter()
                .next()
                .ok_or_else(|| Error::InvalidParameter("no graph in input".into()))?;
            let g = parsed.map_err(|e| Error::InvalidParameter(format!("line {line}: {e}")))?;
            let d = max_dissociation_set_with_budget(&g, Budget::unlimited())?.witness;
            let r = montecarlo_I2(&g, &d, trials, seed)?;
            ok(vec![json!({ "dissociation_set": d, "result": r }).to_string()])
        }
        Command::Selftest => {
            let cases = run_selftest();
            let failed = cases.iter().any(|c| !c.passed);
            Ok(Outcome {
                lines: cases
                    .iter()
                    .map(|c| serde_json::to_string(c).expect("serializes"))
                    .collect(),
                failed,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let outcome = match run(cli.command) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let sink: Box<dyn Write> = match &cli.out {
        Some(path) => match fs::File::create(path) {
            Ok(f) => Box::new(f),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return ExitCode::from(2);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    for line in &outcome.lines {
        if writeln!(sink, "{line}").is_err() {
            return ExitCode::from(2);
        }
    }
    if sink.flush().is_err() {
        return ExitCode::from(2);
    }
    if outcome.failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
