use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/corpus").join(format!("{name}.sgp"))
}

fn regsem(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regsem"))
        .args(args)
        .env_remove("REGSEM_CAP_STEPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut v = vec!["--format", "json"];
    v.extend_from_slice(args);
    let o = regsem(&v);
    (serde_json::from_slice(&o.stdout).expect("json output"), o.status.code().unwrap())
}

#[test]
fn reduce_left_zero_example() {
    let f = corpus("lz2");
    let o = regsem(&["reduce", f.to_str().unwrap(), "-w", "b' b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a' a\n");
    let (v, code) = json(&["reduce", f.to_str().unwrap(), "-w", "b' b", "--trace"]);
    assert_eq!(code, 0);
    assert_eq!(v["normal_form"], "a' a");
    assert_eq!(v["trace"][0]["rule"], "2.3");
    assert_eq!(v["authoritative"], true);
}

#[test]
fn analyze_reports_ambiguity_witness() {
    let f = corpus("sl3");
    let (v, code) = json(&["analyze", f.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(v["unambiguous"], false);
    assert_eq!(v["witness"], "(a, ab, b) [L]");
    let o = regsem(&["analyze", f.to_str().unwrap()]);
    let text = stdout(&o);
    assert!(text.contains("unambiguous: false\nwitness: (a, ab, b) [L]\n"), "{text}");
}

#[test]
fn ambiguous_input_needs_force() {
    let f = corpus("sl3");
    let o = regsem(&["reduce", f.to_str().unwrap(), "-w", "a b'"]);
    assert_eq!(o.status.code(), Some(2));
    let (v, code) = json(&["--force", "reduce", f.to_str().unwrap(), "-w", "a b'"]);
    assert_eq!(code, 0);
    assert_eq!(v["authoritative"], false);
}

#[test]
fn enumerate_left_zero() {
    let f = corpus("lz2");
    let o = regsem(&["enumerate", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("# |S_reg| = 10\n"));
    let (v, _) = json(&["enumerate", f.to_str().unwrap()]);
    assert_eq!(v["elements"], 10);
    assert_eq!(v["axioms"], "pass");
}

#[test]
fn enumerate_output_loads_again() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["lz2", "z2", "b2"] {
        let o = regsem(&["enumerate", corpus(name).to_str().unwrap()]);
        let path = dir.path().join(format!("{name}_reg.sgp"));
        std::fs::write(&path, &o.stdout).unwrap();
        let (v, code) = json(&["--max-order", "1000", "analyze", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(v["zero"], "x0", "{name}");
    }
}

#[test]
fn identical_runs_are_byte_identical() {
    let f = corpus("b2");
    for args in [
        vec!["verify", f.to_str().unwrap(), "--maxlen", "3", "--words", "50"],
        vec!["enumerate", f.to_str().unwrap()],
        vec!["reduce", f.to_str().unwrap(), "-w", "e12 e21' e11 e22'", "--strategy", "random:4", "--trace"],
    ] {
        let a = regsem(&args);
        let b = regsem(&args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), Some(0));
    }
}

#[test]
fn verify_passes_on_a_group() {
    let (v, code) = json(&["verify", corpus("z2").to_str().unwrap(), "--lemmas", "3.2,3.9"]);
    assert_eq!(code, 0);
    assert_eq!(v["passed"], true);
    assert_eq!(v["lemmas"]["counts"].as_array().unwrap().len(), 2);
}

#[test]
fn multiply_words() {
    let (v, code) = json(&["multiply", corpus("z2").to_str().unwrap(), "-a", "e e'", "-b", "e e'"]);
    assert_eq!(code, 0);
    assert_eq!(v["product"], "e e'");
}

#[test]
fn input_errors_exit_2() {
    let f = corpus("lz2");
    assert_eq!(regsem(&["reduce", f.to_str().unwrap(), "-w", "q"]).status.code(), Some(2));
    assert_eq!(regsem(&["analyze", "/nonexistent.sgp"]).status.code(), Some(2));
    assert_eq!(
        regsem(&["verify", f.to_str().unwrap(), "--lemmas", "3.40"]).status.code(),
        Some(2)
    );
}

#[test]
fn step_cap_exit_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_regsem"))
        .args(["reduce", corpus("lz2").to_str().unwrap(), "-w", "a a a a a"])
        .env("REGSEM_CAP_STEPS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumeration_cap_exit_3() {
    let o = regsem(&["enumerate", corpus("b2").to_str().unwrap(), "--max-elements", "4"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn rep_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.reps");
    std::fs::write(&bad, "R e11 e12\n").unwrap();
    let f = corpus("b2");
    let o = regsem(&["--reps", bad.to_str().unwrap(), "reduce", f.to_str().unwrap(), "-w", "e11"]);
    assert_eq!(o.status.code(), Some(2));
    let (v, code) = json(&["--force", "--reps", bad.to_str().unwrap(), "reduce", f.to_str().unwrap(), "-w", "e11"]);
    assert_eq!(code, 0);
    assert_eq!(v["authoritative"], false);
    let (v, _) = json(&["--reps", bad.to_str().unwrap(), "analyze", f.to_str().unwrap()]);
    assert_eq!(v["representatives_valid"], false);
}
