//! End-to-end tests driving the compiled binary.

use std::path::Path;
use std::process::{Command, Output};

fn srb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_srb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_passes_and_prints_series_witness() {
    let out = srb(&["verify", "--suite", "hilbert", "--n", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 + q + z"), "witness missing: {text}");
    assert!(text.trim_end().ends_with("ok: 1 checks passed"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = srb(&["verify", "--suite", "nonsense", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn over_bound_n_is_refused() {
    let out = srb(&["verify", "--suite", "identity", "--n", "9"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exceeds"), "message missing: {err}");

    // the heavy suites unlock n = 4 only behind --long
    let out = srb(&["verify", "--suite", "colon", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_report_shape() {
    let out = srb(&[
        "verify", "--suite", "identity", "--n", "3", "--format", "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    assert_eq!(doc["suite"], "identity");
    assert_eq!(doc["n"], 3);
    assert_eq!(doc["ok"], true);
    let checks = doc["checks"].as_array().expect("checks array");
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["name"].is_string());
        assert!(c["status"] == "pass" || c["status"] == "info");
        assert!(c["witness"].is_string());
        assert!(c["ms"].is_number());
    }
}

#[test]
fn reports_are_deterministic_apart_from_timings() {
    let args = [
        "verify", "--suite", "identity", "--n", "4", "--format", "json", "--seed", "7",
    ];
    let strip_ms = |raw: &str| -> serde_json::Value {
        let mut doc: serde_json::Value = serde_json::from_str(raw).unwrap();
        for c in doc["checks"].as_array_mut().unwrap() {
            c["ms"] = 0.into();
        }
        doc
    };
    let a = strip_ms(&stdout(&srb(&args)));
    let b = strip_ms(&stdout(&srb(&args)));
    assert_eq!(a, b);
}

#[test]
fn seed_flag_reaches_the_spot_checks() {
    let out = srb(&["verify", "--suite", "identity", "--n", "2", "--seed", "99"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("seed 99"));
}

#[test]
fn out_flag_writes_the_report_to_a_file() {
    let dir = std::env::temp_dir().join("srb-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = srb(&[
        "verify", "--suite", "identity", "--n", "2", "--format", "json",
        "--out", path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["ok"], true);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn unwritable_out_path_reports_and_exits_2() {
    let out = srb(&[
        "verify", "--suite", "identity", "--n", "1",
        "--out", "/nonexistent-dir/report.txt",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn hilbert_text_shows_both_series() {
    let out = srb(&["hilbert", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("closed form:"));
    assert!(text.contains("brute force:"));
    assert!(text.contains("match: yes"));
}

#[test]
fn hilbert_json_uses_bidegree_keys() {
    let out = srb(&["hilbert", "--n", "2", "--format", "json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["n"], 2);
    assert_eq!(doc["match"], true);
    let closed = doc["closed"].as_object().unwrap();
    assert_eq!(closed["0,0"], 1);
    assert_eq!(closed["1,1"], 3);
    assert_eq!(doc["closed"], doc["bruteforce"]);
    // every key is a "d,k" pair
    for key in closed.keys() {
        let (d, k) = key.split_once(',').expect("d,k key");
        d.parse::<u32>().unwrap();
        k.parse::<u32>().unwrap();
    }
}

#[test]
fn hilbert_skips_brute_force_at_4_without_long() {
    let out = srb(&["hilbert", "--n", "4"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("skipped"));
    assert!(!text.contains("match:"));

    let out = srb(&["hilbert", "--n", "5"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn jobs_flag_is_accepted() {
    let out = srb(&["verify", "--suite", "hilbert", "--n", "2", "--jobs", "2"]);
    assert!(out.status.success());
}

#[test]
fn full_acceptance_sweep_at_n2() {
    let out = srb(&["verify", "--suite", "all", "--n", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(!text.contains("FAIL"), "unexpected failure:\n{text}");
    assert!(Path::new(env!("CARGO_BIN_EXE_srb")).exists());
}
