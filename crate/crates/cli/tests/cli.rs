use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "core", "data", "diagrams", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_equicm")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn suspension_of_w7_fails_in_degree_two() {
    let o = run(&["--format", "table", "cm", &data("susp_w711.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NotCohenMacaulay: sum-of-images fails at degree 2, missing class t\n"));
}

#[test]
fn cm_messages() {
    let cases = [
        ("sp1cubed.json", "CohenMacaulay (corank ≤ 1, sum surjective through 12)"),
        ("susp_cp3_z2.json", "CohenMacaulay (equal ranks 2)"),
        ("corank.json", "NotCohenMacaulay (Krull dimension 2, depth 1, through 20)"),
        ("rp2_join_w7.json", "CohenMacaulay (Krull dimension 3, depth 3, through 16)"),
    ];
    for (file, line) in cases {
        let o = run(&["--format", "table", "cm", &data(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert_eq!(stdout(&o).lines().next(), Some(line), "{file}");
    }
}

#[test]
fn unknown_verdict_exits_with_two() {
    let o = run(&["--format", "json", "--max-degree", "4", "cm", &data("rp2_join_w7.json")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["result"]["verdict"]["decision"]["UnknownUpTo"], 4);
}

#[test]
fn empty_file_is_an_error() {
    let f = tempfile::NamedTempFile::new().unwrap();
    let o = run(&["cm", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("malformed JSON at line 1, column 0"));
}

#[test]
fn unknown_fiber_is_an_error() {
    let o = run(&["join", "BadName", "W7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("fiber not in catalog: BadName"));
}

#[test]
fn join_of_two_w7_is_not_cm() {
    let o = run(&["--format", "json", "join", "W7", "W7", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["verdict"]["decision"], "NotCohenMacaulay");
    assert_eq!(v["result"]["verdict"]["basis"]["degree"], 4);
}

#[test]
fn sphere_join_is_refused_and_cm() {
    let o = run(&["--format", "json", "join", "S5", "W7", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).starts_with("refused: "));
    assert_eq!(json(&o)["result"]["verdict"]["decision"], "CohenMacaulay");
}

#[test]
fn written_join_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("join.json");
    let p = path.to_str().unwrap();
    let direct = run(&["--format", "json", "join", "W7", "W6", "--classify", "-o", p]);
    assert_eq!(direct.status.code(), Some(0));
    let again = run(&["--format", "json", "cm", p]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(json(&direct)["result"]["verdict"], json(&again)["result"]["verdict"]);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["--format", "json", "cm", &data("corank.json")];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["command"], "cm");
    assert_eq!(v["monomial_order"], "grlex-desc/v1");
}

#[test]
fn betti_numbers() {
    let o = run(&["--format", "json", "--max-degree", "4", "betti", &data("susp_w711.json")]);
    assert_eq!(json(&o)["result"]["betti"], serde_json::json!([1, 0, 0, 1, 1]));
    let o = run(&["--format", "json", "--max-degree", "8", "betti", &data("rp2_join_w7.json")]);
    assert_eq!(json(&o)["result"]["betti"], serde_json::json!([1, 0, 0, 0, 2, 0, 1, 0, 3]));
    let o = run(&["--format", "json", "betti", "--homogeneous", "--classify", &data("su3_s1.json")]);
    assert_eq!(json(&o)["result"]["betti"], serde_json::json!([1, 0, 1, 0, 0, 1, 0, 1]));
}

#[test]
fn catalog_lists_fibers() {
    let o = run(&["--format", "json", "catalog", "--classify"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let fibers = v["result"]["fibers"].as_array().unwrap();
    assert_eq!(fibers.len(), 15);
    assert!(fibers.iter().any(|f| f["name"] == "W7"));
}
