use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use schurweyl::werner::{dual_trace, table5, table_from_json, IntPolynomial, WernerWeights};
use schurweyl::Partition;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_schurweyl"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("schurweyl-cli-{}-{name}", std::process::id()))
}

#[test]
fn table5_matches_golden_file() {
    let golden = include_str!("golden/table5.txt");
    let first = stdout(&["table5"]);
    assert_eq!(first, golden);
    assert_eq!(stdout(&["table5"]), first);
}

#[test]
fn table5_json_round_trips() {
    let v = json(&["table5"]);
    let rows = table_from_json(&v).unwrap();
    assert_eq!(rows, table5().unwrap());
    assert_eq!(rows[3].polynomial, IntPolynomial::from_i64(&[0, 24, -20, 20, -40, 16]));
}

#[test]
fn chi_poly_examples() {
    assert_eq!(
        stdout(&["chi-poly", "[5]", "[5]"]).lines().next().unwrap(),
        "q^5+10q^4+35q^3+50q^2+24q; integral roots -4..0"
    );
    let v = json(&["chi-poly", "[5]", "[1,1,1,1,1]"]);
    assert_eq!(v["roots"], serde_json::json!([0, 1, 2, 3, 4]));
    let v = json(&["chi-poly", "[2]", "[1,1]"]);
    let poly = IntPolynomial::from_json(&v["polynomial"]).unwrap();
    assert_eq!(poly.eval_i64(1), 0.into());
    assert_eq!(v["roots"], serde_json::json!([0, 1]));
}

#[test]
fn trace_examples() {
    let out = stdout(&["trace", "[2]", "dual", "2", "3"]);
    assert!(out.contains("[2]\t6/7\t"), "{out}");
    assert!(out.contains("[1,1]\t1/7\t"), "{out}");
    assert!(out.contains("total\t1\t1\n"), "{out}");

    let v = json(&["trace", "[2,1]", "dual", "2", "3"]);
    let w = WernerWeights::from_json(&v).unwrap();
    assert_eq!(w, dual_trace(&Partition::new(vec![2, 1]).unwrap(), 2, 3).unwrap());

    let out = stdout(&["trace", "[3,1]", "sym", "4", "2"]);
    assert!(out.starts_with("[4]\t0\t0\n[3,1]\t1\t1\n[2,2]\t0\t0\n"), "{out}");
}

#[test]
fn bound_examples() {
    assert!(stdout(&["bound", "dual", "1", "7"]).starts_with("0 (0)\n"));
    assert!(stdout(&["bound", "dual", "2", "2"]).starts_with("3/2 (1.5)\n"));
    assert_eq!(stdout(&["bound", "sym", "1", "9"]), "0 (0)\n");
    let v = json(&["bound", "dual", "2", "1000"]);
    let exact = v["value"]["float"].as_f64().unwrap();
    assert!((exact - 0.003998).abs() < 1e-6);
}

#[test]
fn small_commands() {
    assert_eq!(stdout(&["lr", "[2,1]", "[1]", "[1,1]"]), "1\n");
    assert_eq!(stdout(&["kron", "[2,1]", "[2,1]", "[3]"]), "1\n");
    assert_eq!(stdout(&["dof", "2", "2"]), "werner\t1\nsymmetric\t9\n");
    assert_eq!(stdout(&["qplus", "[2,1]", "[2,1]"]), "q+ = 1\nq- = -1\n");
    assert!(stdout(&["horn", "[3,1]", "[2,2]"]).starts_with("none"));
    let dt = stdout(&["dual-twirl", "[2,1]", "3"]);
    assert!(dt.contains("[1,1,1]\t-1/27\t"));
    assert!(dt.contains("total\t1/3\t"));
    let tw = stdout(&["twirl", "[\"1/2\", 0.5]", "2"]);
    assert!(tw.starts_with("[2]\t3/4\t"), "{tw}");
    let csv = stdout(&["--format", "csv", "chartable", "3"]);
    assert_eq!(csv.lines().nth(2).unwrap(), "\"[2,1]\",-1,0,2");
}

#[test]
fn outputs_are_deterministic() {
    for args in [&["verify", "formulas"][..], &["chartable", "6"], &["trace", "[3,2]", "dual", "2", "2"]] {
        assert_eq!(stdout(args), stdout(args));
    }
}

#[test]
fn verify_passes_and_reports_json() {
    let v = json(&["verify", "all"]);
    assert_eq!(v["pass"], Value::Bool(true));
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["pass"] == Value::Bool(true)));
    assert!(checks.iter().any(|c| c["check"].as_str().unwrap().starts_with("dual_bound.measured")));
    assert!(checks.iter().any(|c| c["check"].as_str().unwrap().starts_with("oracle.dual_twirl")));
}

#[test]
fn verify_bounds_runs_dual_sweep() {
    let v = json(&["--size-cap", "8192", "verify", "bounds"]);
    assert_eq!(v["pass"], Value::Bool(true));
    assert!(v["skipped"].as_array().unwrap().is_empty());
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["check"].as_str().unwrap()).collect();
    assert!(names.contains(&"dual_bound.measured [1,1,1] p=3 q=6"));
    assert!(names.contains(&"dual_bound.young_state [[1,2],[3]] p=2 q=3"));
}

#[test]
fn mutated_character_fails_named_check() {
    let out = bin().args(["--format", "json", "verify", "formulas", "--mutate", "[3,2]", "[2,2,1]"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["pass"] == Value::Bool(false))
        .map(|c| c["check"].as_str().unwrap())
        .collect();
    assert_eq!(failed, vec!["characters.orthogonality n=5"]);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["chi-poly", "[2,3]", "[5]"]).status.code(), Some(2));
    assert_eq!(run(&["chi-poly", "[2]", "[3]"]).status.code(), Some(2));
    assert_eq!(run(&["bound", "dual", "3", "2"]).status.code(), Some(2));
    assert_eq!(run(&["--size-cap", "10", "table5"]).status.code(), Some(2));
    assert_eq!(run(&["young-dual", "[[1,2],[3]]", "3", "6"]).status.code(), Some(3));
    assert_eq!(run(&["young-dual", "[[1,2],[3]]", "2", "3"]).status.code(), Some(0));
    assert_eq!(run(&["young-dual", "[[2,1],[3]]", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn out_file_and_config_file() {
    let out_path = scratch("table.csv");
    let status = bin().args(["--format", "csv", "--out"]).arg(&out_path).arg("table5").output().unwrap().status;
    assert!(status.success());
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert!(written.starts_with("pairs,polynomial,roots\n"));
    std::fs::remove_file(&out_path).unwrap();

    let cfg = scratch("run.cfg");
    std::fs::write(&cfg, "# run settings\noutput_format = json\nsize_cap = 8192\nseed = 3\n").unwrap();
    let out = bin().arg("--config").arg(&cfg).args(["young-dual", "[[1,2],[3]]", "3", "6"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pass"], Value::Bool(true));
    std::fs::write(&cfg, "size_cap = 12\n").unwrap();
    assert_eq!(bin().arg("--config").arg(&cfg).arg("table5").output().unwrap().status.code(), Some(2));
    std::fs::remove_file(&cfg).unwrap();
}
