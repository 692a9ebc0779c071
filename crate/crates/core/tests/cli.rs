use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_ostrowski")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn dense(a: &str, b: &str, dim: usize) -> String {
    format!(r#"{{"space": {{"kind": "dense", "dim": {dim}}}, "a": {a}, "b": {b}, "mode": "real"}}"#)
}

#[test]
fn bound_command() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", &dense("[1, 0]", "[1, 1]", 2));
    let out = run(&["bound", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["bound"], 1.0);
    assert_eq!(v["gram"]["det"], 1.0);
    assert_eq!(v["gram"]["inner_ab"], 1.0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with(r#"{"bound":1.0000000000000000e0,"gram":{"norm_a_sq""#), "{text}");
}

#[test]
fn bound_with_zero_a_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", &dense("[0, 0]", "[1, 1]", 2));
    let out = run(&["bound", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("zero vector a"));
    assert!(out.stdout.is_empty());
}

#[test]
fn quadrature_bound_matches_one_twelfth() {
    let n = 201;
    let nodes: Vec<f64> = (0..n).map(|i| i as f64 / (n - 1) as f64).collect();
    let text = format!(
        r#"{{"space": {{"kind": "quadrature", "dim": {n}, "nodes": {nodes:?}}}, "a": {:?}, "b": {nodes:?}, "mode": "real"}}"#,
        vec![1.0; n]
    );
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "q.json", &text);
    let out = run(&["bound", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let bound = json(&out)["bound"].as_f64().unwrap();
    assert!((bound - 1.0 / 12.0).abs() < 2e-4, "{bound}");
}

#[test]
fn extremize_command() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", &dense("[1, 0]", "[1, 1]", 2));
    let v = json(&run(&["extremize", p.to_str().unwrap()]));
    assert_eq!(v["x"], serde_json::json!([0.0, 1.0]));
    assert_eq!(v["attained"], 1.0);

    let p = write(dir.path(), "j.json", &dense("[1, 1, 1]", "[1, 2, 3]", 3));
    let v = json(&run(&["extremize", p.to_str().unwrap()]));
    assert!((v["attained"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    assert!(v["residual_orth"].as_f64().unwrap() < 1e-12);
    assert!(v["residual_norm"].as_f64().unwrap() < 1e-12);

    let p = write(dir.path(), "k.json", &dense("[1, 2]", "[2, 4]", 2));
    let out = run(&["extremize", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn extremize_complex_output_pairs() {
    let dir = tempfile::tempdir().unwrap();
    let text = r#"{"space": {"kind": "dense", "dim": 2}, "a": [[1, 0], [0, 0]], "b": [[0, 1], [1, 0]], "mode": "complex"}"#;
    let p = write(dir.path(), "c.json", text);
    let v = json(&run(&["extremize", p.to_str().unwrap()]));
    assert_eq!(v["x"], serde_json::json!([[0.0, 0.0], [1.0, 0.0]]));
}

#[test]
fn minnorm_command() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", &dense("[1, 1, 1]", "[1, 2, 3]", 3));
    let v = json(&run(&["minnorm", p.to_str().unwrap()]));
    assert!((v["value"].as_f64().unwrap() - 0.5).abs() < 1e-15);
    assert!(v["residual_one"].as_f64().unwrap() < 1e-15);

    let p = write(dir.path(), "j.json", &dense("[1, 0]", "[0, 1]", 2));
    let v = json(&run(&["minnorm", p.to_str().unwrap()]));
    assert_eq!(v["x"], serde_json::json!([0.0, 1.0]));
    assert_eq!(v["value"], 1.0);

    let p = write(dir.path(), "k.json", &dense("[2]", "[3]", 1));
    assert_eq!(run(&["minnorm", p.to_str().unwrap()]).status.code(), Some(4));
}

#[test]
fn verify_command() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", &dense("[1, 1, 1, 0.5]", "[1, 2, 3, -1]", 4));
    let out = run(&["verify", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = out
        .stdout
        .split(|&b| b == b'\n')
        .filter(|l| !l.is_empty())
        .map(|l| serde_json::from_slice(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 5);
    for l in &lines {
        assert_eq!(l["status"], "passed");
        assert_eq!(l["seed"], 1);
        assert_eq!(l["trials_requested"], 1000);
        assert_eq!(l["tol"], 1e-9);
    }
    assert_eq!(lines[0]["check"], "bound");
    assert_eq!(lines[0]["trials"], 1001);

    let out = run(&["verify", p.to_str().unwrap(), "--trials", "0", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let first: Value = serde_json::from_slice(out.stdout.split(|&b| b == b'\n').next().unwrap()).unwrap();
    assert_eq!(first["trials"], 1);
}

#[test]
fn verify_negative_control() {
    let dir = tempfile::tempdir().unwrap();
    let good = r#"{"space": {"kind": "dense", "dim": 3}, "a": [1, 1, 1], "b": [1, 2, 3], "mode": "real", "replay": {"bound": 2.0, "value": 0.5}}"#;
    let bad = r#"{"space": {"kind": "dense", "dim": 3}, "a": [1, 1, 1], "b": [1, 2, 3], "mode": "real", "replay": {"bound": 2.5}}"#;
    let p = write(dir.path(), "good.json", good);
    assert_eq!(run(&["verify", p.to_str().unwrap(), "--trials", "50"]).status.code(), Some(0));
    let p = write(dir.path(), "bad.json", bad);
    let out = run(&["verify", p.to_str().unwrap(), "--trials", "50"]);
    assert_eq!(out.status.code(), Some(5));
    let last = out.stdout.split(|&b| b == b'\n').rfind(|l| !l.is_empty()).unwrap();
    let v: Value = serde_json::from_slice(last).unwrap();
    assert_eq!((v["check"].as_str(), v["status"].as_str()), (Some("replay"), Some("failed")));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "i.json", r#"{"space": {"kind": "dense", "dim": 2}, "a": [1, 0], "b": [[0, 1], 1], "mode": "real"}"#);
    let out = run(&["bound", p.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("b[0]"));

    let p = write(dir.path(), "j.json", "{not json");
    assert_eq!(run(&["bound", p.to_str().unwrap()]).status.code(), Some(2));

    let p = write(dir.path(), "k.json", &dense("[1, 0]", "[1, 1]", 2));
    assert_eq!(run(&["verify", p.to_str().unwrap(), "--seed", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", p.to_str().unwrap(), "--tol", "0"]).status.code(), Some(2));
}
