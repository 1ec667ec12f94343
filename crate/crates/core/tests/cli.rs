use std::process::{Command, Output};

use sphnil::catalog::{CaseReport, Status, BUILTIN};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sphnil")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains(" 0 failed"), "{s}");
    assert!(s.contains("non-normal computed [12.2]"));
}

#[test]
fn normality_witness_line() {
    let o = run(&["case", "12.2", "--sections", "normality"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("NOT NORMAL; witness γ = α; D_p − α = D1 + D3"));
}

#[test]
fn case_a_covering_and_sigma_generators() {
    let s = stdout(&run(&["case", "A", "--sections", "covering"]));
    assert!(s.contains("matches the 7 expected covering differences"));
    let s = stdout(&run(&["case", "7.12", "--sections", "semigroup"]));
    assert!(s.contains("matches the 3 expected generators"), "{s}");
}

#[test]
fn hermitian() {
    assert!(stdout(&run(&["hermitian", "E6", "a1"])).contains("m = 3"));
    assert!(stdout(&run(&["hermitian", "E7", "a7"])).contains("m = 2"));
    let o = run(&["hermitian", "E7", "a1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("coefficient 2"));
}

#[test]
fn unknown_case_lists_ids() {
    let o = run(&["case", "13.1"]);
    assert_eq!(o.status.code(), Some(2));
    let e = String::from_utf8_lossy(&o.stderr).to_string();
    assert!(e.contains("valid ids") && e.contains("12.2"));
}

#[test]
fn corrupted_triple_fails_with_case_id() {
    let dir = std::env::temp_dir().join(format!("sphnil-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    let bad = BUILTIN.replacen(
        "f = \"y_1122210+y_1122111+y_1112221+x_0100000\"",
        "f = \"y_1122210+y_1122111+x_0100000\"",
        1,
    );
    assert_ne!(bad, BUILTIN);
    std::fs::write(&path, bad).unwrap();
    let o = run(&["--catalog", path.to_str().unwrap(), "verify-all"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    let block = s.split("== case ").find(|b| b.starts_with("5.8 ")).unwrap();
    assert!(block.contains("[FAIL] triples"));

    std::fs::write(&path, "version = 1\n[[case]]\nid = \"x\"\nalias_of = \"y\"\n").unwrap();
    let o = run(&["--catalog", path.to_str().unwrap(), "verify-all"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("case x"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn structured_is_deterministic_and_typed() {
    let a = run(&["--format", "structured", "verify-all"]);
    let b = run(&["--format", "structured", "verify-all"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let cases: Vec<CaseReport> = serde_json::from_value(v["cases"].clone()).unwrap();
    assert_eq!(v["summary"]["failed"], 0);
    assert!(cases.iter().any(|c| c.id == "12.2" && c.computed_normal == Some(false)));
}

#[test]
fn gap_case_runs_chevalley_only() {
    let o = run(&["--format", "structured", "case", "2.2"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let c: Vec<CaseReport> = serde_json::from_value(v["cases"].clone()).unwrap();
    let status = |n: &str| c[0].sections.iter().find(|s| s.name == n).map(|s| s.status);
    assert_eq!(status("triples"), Some(Status::Pass));
    assert_eq!(status("normality"), Some(Status::Skipped));
    assert_eq!(status("semigroup"), None);
}
