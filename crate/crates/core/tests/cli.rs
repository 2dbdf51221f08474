use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_dissalpha"))
        .args(args)
        .env("DISSALPHA_THREADS", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

fn json_lines(out: &Output) -> Vec<Value> {
    stdout_lines(out)
        .iter()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn gen(args: &[&str]) -> String {
    let out = run(&[&["gen"], args].concat(), "");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn solve_complete_graph() {
    let k4 = gen(&["complete", "--n", "4"]);
    let out = run(&["solve", "--in", "-"], &k4);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!((v["alpha"].as_u64(), v["diss"].as_u64()), (Some(1), Some(2)));
}

#[test]
fn gen_piped_into_solve() {
    let out = run(&["solve", "--what", "both"], &gen(&["fig3"]));
    let v = &json_lines(&out)[0];
    assert_eq!((v["alpha"].as_u64(), v["diss"].as_u64()), (Some(6), Some(10)));
}

#[test]
fn empty_input_is_empty_output() {
    let out = run(&["solve"], "");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
}

#[test]
fn parse_errors_keep_their_line_and_do_not_spread() {
    let input = "Bw\nnot graph6 !\nC~\n";
    let out = run(&["solve"], input);
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 3);
    assert_eq!(lines[0]["alpha"], 1);
    assert_eq!(lines[1]["line"], 2);
    assert!(lines[1]["error"].is_string());
    assert_eq!(lines[2]["diss"], 2);
}

#[test]
fn certificate_output() {
    let out = run(&["solve", "--what", "certificate"], &gen(&["petersen"]));
    let v = &json_lines(&out)[0];
    let c = &v["certificate"];
    assert!(c["complement_max_degree"].as_u64().unwrap() <= 1);
    assert_eq!(v["diss"], 6);
}

#[test]
fn ring_construction_is_four_regular_on_eight() {
    let line = gen(&["Gkl", "--k", "2", "--l", "2"]);
    let g = dissalpha::graph::parse_graph6(line.trim()).unwrap();
    assert_eq!(g.n(), 8);
    assert!(g.degrees().iter().all(|&d| d == 4));
}

#[test]
fn unknown_family_is_an_error() {
    let out = run(&["gen", "no-such-family"], "");
    assert!(!out.status.success());
    assert!(!out.stderr.is_empty());
}

#[test]
fn expand_builtin_matches_drawing() {
    let expanded = gen_from(&["expand", "--witness", "fig3"]);
    let g = dissalpha::graph::parse_graph6(expanded.trim()).unwrap();
    let drawn = dissalpha::generators::named_graph("fig3").unwrap().graph;
    assert!(dissalpha::recognize::is_isomorphic(&g, &drawn).unwrap());
}

fn gen_from(args: &[&str]) -> String {
    let out = run(args, "");
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn recognize_families() {
    let out = run(&["recognize", "--family", "cubic-extremal"], &gen(&["fig3"]));
    let v = &json_lines(&out)[0];
    assert_eq!(v["member"], true);
    assert_eq!(v["profile"]["q"], 5);

    let out = run(&["recognize", "--family", "calg"], &gen(&["fig2_left"]));
    let v = &json_lines(&out)[0];
    assert_eq!(v["member"], true);
    assert!(v["decomposition"].is_object());

    let out = run(&["recognize", "--family", "calg"], &gen(&["cycle", "--n", "5"]));
    assert_eq!(json_lines(&out)[0]["member"], false);
}

#[test]
fn bounds_emit_rational_strings() {
    let out = run(&["bounds"], &gen(&["fig3"]));
    let v = &json_lines(&out)[0];
    for r in v["records"].as_array().unwrap() {
        assert!(r["bound_value"].is_string());
    }
}

#[test]
fn survey_is_deterministic_and_float_free() {
    let input: String = ["cycle --n 5", "petersen", "fig3", "kab --a 2 --b 3"]
        .iter()
        .map(|a| gen(&a.split(' ').collect::<Vec<_>>()))
        .collect();
    let a = run(&["survey", "--in", "-"], &input);
    let b = run(&["survey", "--in", "-"], &input);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    fn no_floats(v: &Value) -> bool {
        match v {
            Value::Number(n) => !n.is_f64(),
            Value::Array(a) => a.iter().all(no_floats),
            Value::Object(o) => o.values().all(no_floats),
            _ => true,
        }
    }
    let lines = json_lines(&a);
    assert_eq!(lines.len(), 5);
    assert!(lines.iter().all(no_floats));
}

#[test]
fn exhaustive_survey_summary() {
    let out = run(
        &["survey", "--exhaustive-upto", "5", "--connected", "--summary-only"],
        "",
    );
    assert!(out.status.success());
    let v = &json_lines(&out)[0]["summary"];
    assert_eq!(v["graphs"], 1 + 1 + 2 + 6 + 21);
    assert!(v["falsifications"].as_array().unwrap().is_empty());
}

#[test]
fn montecarlo_is_reproducible() {
    let g = gen(&["petersen"]);
    let a = run(&["montecarlo", "--trials", "2000", "--seed", "11"], &g);
    let b = run(&["montecarlo", "--trials", "2000", "--seed", "11"], &g);
    assert_eq!(a.stdout, b.stdout);
    let r = &json_lines(&a)[0]["result"];
    assert_eq!(r["exact_expectation"], "1/2");
    assert!(r["sample_mean"].is_string() && r["sample_stderr"].is_string());
}

#[test]
fn selftest_passes() {
    let out = run(&["selftest"], "");
    assert!(out.status.success());
    assert!(json_lines(&out).iter().all(|c| c["passed"] == true));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("dissalpha-out-{}.txt", std::process::id()));
    let out = run(&["gen", "petersen", "--out", path.to_str().unwrap()], "");
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "IheA@GUAo");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn missing_orientation_is_found_by_flow() {
    let w = dissalpha::gadgets::builtin_witness("fig3").unwrap();
    let mut v: Value = serde_json::from_str(&w.to_json()).unwrap();
    v.as_object_mut().unwrap().remove("orientation");
    let path = std::env::temp_dir().join(format!("dissalpha-w-{}.json", std::process::id()));
    std::fs::write(&path, v.to_string()).unwrap();
    let from_file = gen_from(&["expand", "--witness", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    let g = dissalpha::graph::parse_graph6(from_file.trim()).unwrap();
    let drawn = dissalpha::generators::named_graph("fig3").unwrap().graph;
    assert!(dissalpha::recognize::is_isomorphic(&g, &drawn).unwrap());
}
