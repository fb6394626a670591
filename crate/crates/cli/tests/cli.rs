use std::io::Write;
use std::process::{Command, Output, Stdio};

fn eigmatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigmatch")).args(args).output().expect("binary runs")
}

fn with_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eigmatch")).args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().expect("binary runs");
    child.stdin.take().expect("piped").write_all(input).expect("stdin accepts input");
    child.wait_with_output().expect("binary exits")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = eigmatch(args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("valid json")
}

fn mult_at(report: &serde_json::Value, approx: f64) -> u64 {
    report["spectrum"].as_array().unwrap().iter().find(|e| (e["approx"].as_f64().unwrap() - approx).abs() < 1e-9).map_or(0, |e| e["mult"].as_u64().unwrap())
}

#[test]
fn analyze_triangle_with_pendants() {
    let r = json(&["analyze", "--construct", "c3aaa:2", "--format", "json"]);
    assert_eq!(r["order"], 9);
    assert_eq!(r["beta_prime"], 1);
    assert_eq!(r["cyclomatic"], 1);
    assert_eq!(mult_at(&r, -2.0), 2);
    assert_eq!(mult_at(&r, 1.0), 2);
    assert_eq!(mult_at(&r, 0.0), 3);
    let class = &r["classifications"][0];
    assert_eq!(class["classification"]["tag"], "C3aaa");
    assert_eq!(class["classification"]["a"], 2);
    assert_eq!(class["verified"], true);
}

#[test]
fn analyze_graph6_star() {
    let r = json(&["analyze", "--graph6", "D?{", "--format", "json"]);
    assert_eq!(r["order"], 5);
    assert_eq!(r["edges"], 4);
    assert_eq!(r["diameter"], 2);
    assert_eq!(r["beta"], 1);
    assert_eq!(mult_at(&r, 2.0), 1);
    assert_eq!(mult_at(&r, 0.0), 3);
    assert_eq!(r["classifications"][0]["classification"]["tag"], "TreeDiamAtMost3");
}

#[test]
fn analyze_large_example_at_minus_two() {
    let r = json(&["analyze", "--construct", "fig2", "--lambda", "-2", "--format", "json"]);
    assert_eq!(r["order"], 51);
    assert_eq!(r["beta_prime"], 7);
    assert_eq!(r["cyclomatic"], 2);
    assert_eq!(r["lambda"]["multiplicity"], 8);
    let hub = r["classifications"].as_array().unwrap().iter().find(|c| c["classification"]["tag"] == "Thm32Form").expect("hub form reported");
    assert_eq!(hub["classification"]["s"], 7);
    assert_eq!(hub["verified"], true);
}

#[test]
fn text_and_csv_outputs() {
    let text = stdout(&eigmatch(&["analyze", "--construct", "cycle:5"]));
    assert!(text.contains("order: 5"));
    assert!(text.contains("classification: m = β′ + c: C5 verified=true"));
    let csv = stdout(&eigmatch(&["analyze", "--construct", "cycle:5", "--format", "csv"]));
    assert!(csv.starts_with("graph6,eigenvalue,multiplicity,approx\n"));
    assert_eq!(csv.lines().count(), 4);
}

#[test]
fn star_sets() {
    let o = eigmatch(&["starset", "--construct", "cycle:5", "--lambda", "poly:-1,1,1;interval:0,1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("multiplicity: 2"));
    assert!(text.contains("star_set: 0 1"));
    assert!(text.contains("verified: true"));

    let r = json(&["starset", "--construct", "star:5", "--lambda", "2/1", "--format", "json"]);
    assert_eq!(r["multiplicity"], 1);
    assert_eq!(r["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(r["verified"], true);

    let o = eigmatch(&["starset", "--construct", "path:4", "--lambda", "3/1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not an eigenvalue"));
}

#[test]
fn construct_then_analyze_round_trips() {
    for spec in ["c3aaa:2", "fig2", "caterpillar:1,0,2", "double-star:2,3", "star-hub:2,3", "y6"] {
        let direct = stdout(&eigmatch(&["analyze", "--construct", spec, "--format", "json"]));
        let g6 = eigmatch(&["construct", spec]);
        assert!(g6.status.success(), "{spec}");
        assert_eq!(stdout(&with_stdin(&["analyze", "--format", "json"], &g6.stdout)), direct, "{spec} via graph6");
        let edges = eigmatch(&["construct", spec, "--format", "edge-list"]);
        assert_eq!(stdout(&with_stdin(&["analyze", "--format", "json"], &edges.stdout)), direct, "{spec} via edge list");
    }
}

#[test]
fn several_graph6_lines_give_a_json_array() {
    let o = with_stdin(&["analyze", "--graph6-file", "-", "--format", "json"], b"Bw\nDhc\n");
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["order"], 5);
}

#[test]
fn disconnected_input_is_analyzed_per_component() {
    let o = with_stdin(&["analyze", "--format", "json"], b"4 2\n0 1\n2 3\n");
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["connected"], false);
    assert_eq!(r["cyclomatic"], 0);
    assert_eq!(r["beta_prime"], 2);
    assert_eq!(r["components"].as_array().unwrap().len(), 2);
    assert_eq!(r["components"][1]["order"], 2);
}

#[test]
fn input_errors() {
    let bad = eigmatch(&["analyze", "--graph6", "D?"]);
    assert_eq!(bad.status.code(), Some(2));
    let decimal = eigmatch(&["analyze", "--construct", "path:4", "--lambda", "0.5"]);
    assert_eq!(decimal.status.code(), Some(2));
    let family = eigmatch(&["construct", "wheel:5"]);
    assert_eq!(family.status.code(), Some(2));
    let check = eigmatch(&["verify", "--checks", "nonsense"]);
    assert_eq!(check.status.code(), Some(2));
    let both = eigmatch(&["analyze", "--graph6", "Bw", "--construct", "y6"]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn verify_tree_characterization() {
    let o = eigmatch(&["verify", "--checks", "thm12", "--trees-max-n", "12", "--format", "json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let r: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(r["checks"][0]["check"], "thm12");
    assert_eq!(r["checks"][0]["scanned"], 987);
    assert_eq!(r["violations"], 0);
}

#[test]
fn verify_writes_report_file() {
    let path = std::env::temp_dir().join(format!("eigmatch-cli-{}.csv", std::process::id()));
    let o = eigmatch(&["verify", "--checks", "spectra_formulas,paths", "--format", "csv", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("0 violations, 1 notes"));
    let body = std::fs::read_to_string(&path).unwrap();
    assert!(body.lines().any(|l| l.starts_with("spectra_formulas,Bw,3,") && l.ends_with("paper-discrepancy-note")));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn enumerate_counts() {
    assert_eq!(stdout(&eigmatch(&["enumerate", "--n", "5"])).lines().count(), 21);
    assert_eq!(stdout(&eigmatch(&["enumerate", "--kind", "trees", "--n", "8"])).lines().count(), 23);
    assert_eq!(stdout(&eigmatch(&["enumerate", "--kind", "caterpillars", "--n", "7"])).lines().count(), 10);
}
