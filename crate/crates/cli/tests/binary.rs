//! Exit codes and report output of the `solvrad` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use solvrad_cli::{SuiteReport, VerificationReport};

fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn solvrad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_solvrad"))
        .args(args)
        .current_dir(fixtures())
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> VerificationReport {
    serde_json::from_slice(&out.stdout).expect("stdout is one report")
}

#[test]
fn info_sz8_from_file() {
    let out = solvrad(&["info", "file:sz8.json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.group.unwrap().order, 29120u32.into());
    assert_eq!(r.classes.unwrap().len(), 11);
}

#[test]
fn verify_writes_out_file_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = solvrad(&["verify", "pairs", "A(5)", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let written: VerificationReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written, report(&out));
    assert!(written.witnesses_regenerate().unwrap());
    assert!(written.group_verdict.unwrap().class_witness.is_some());
}

#[test]
fn budget_exceeded_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = solvrad(&["verify", "four", "S(5)", "--budget", "100", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    // the report is written even on failure
    let written: VerificationReport = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written.exit_code, 3);
    assert!(written.message.contains("budget"));
}

#[test]
fn usage_errors_exit_code() {
    assert_eq!(solvrad(&["sharpness", "4"]).status.code(), Some(4));
    assert_eq!(solvrad(&["info", "S(0)"]).status.code(), Some(4));
    assert_eq!(solvrad(&["info", "nonsense"]).status.code(), Some(4));
    assert_eq!(solvrad(&["verify", "five", "S(3)"]).status.code(), Some(4));
    assert_eq!(solvrad(&["info"]).status.code(), Some(4));
    assert_eq!(
        solvrad(&["verify", "bs", "S(3)", "--exhaustive", "--randomized"]).status.code(),
        Some(4)
    );
    assert_eq!(solvrad(&["--help"]).status.code(), Some(0));
}

#[test]
fn sharpness_six() {
    let out = solvrad(&["sharpness", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let s = report(&out).sharpness.unwrap();
    assert_eq!(s.triples_checked, 455);
    assert!(s.all_solvable);
    assert_eq!(s.four_conjugate_witness.unwrap().conjugators.len(), 3);
}

#[test]
fn suites() {
    let out = solvrad(&["suite", "empty_suite.json"]);
    assert_eq!(out.status.code(), Some(0));
    let r: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r.entries.is_empty() && r.passed);

    let out = solvrad(&["suite", "bad_order_suite.json"]);
    assert_ne!(out.status.code(), Some(0));
    let r: SuiteReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(!r.passed);
    assert_eq!(r.entries[0].exit_code, 0);
    assert!(r.entries[1].report.as_ref().unwrap().message.contains("claimed order 100"));

    assert_eq!(solvrad(&["suite", "missing.json"]).status.code(), Some(4));
}

#[test]
fn randomized_reports_repeat_with_same_seed() {
    let args = ["verify", "two", "A(6)", "--randomized", "--seed", "9", "--budget", "50"];
    let mut a = report(&solvrad(&args));
    let mut b = report(&solvrad(&[&args[..], &["--threads", "3"]].concat()));
    assert_eq!(a.exit_code, 0, "{}", a.message);
    a.timing_ms = 0;
    b.timing_ms = 0;
    assert_eq!(a, b);
    assert!(a.per_element_results.iter().all(|v| !v.in_radical_claimed));
}
