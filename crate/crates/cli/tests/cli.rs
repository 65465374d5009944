use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_monocurve"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn analyze_json(args: &[&str]) -> Value {
    let mut all = vec!["analyze"];
    all.extend_from_slice(args);
    all.push("--json");
    let o = run(&all);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn tmp(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn analyze_gorenstein_example() {
    let doc = analyze_json(&["1199", "2051", "2352", "3032"]);
    let r = &doc["report"];
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["toric"]["case"], "1");
    assert_eq!(r["gorenstein"]["case"], "1b");
    assert_eq!(r["cm"]["is_cm"], true);
    assert_eq!(r["cm"]["oracle"], "completed");
    assert_eq!(r["cm"]["fast_path"]["method"]["kind"], "closed_form");
    assert_eq!(r["toric"]["minimal_generators"].as_array().unwrap().len(), 5);
    assert!(doc["timings"]["cm_ms"].is_number());
}

#[test]
fn analyze_non_cm_has_certificate() {
    let doc = analyze_json(&["9", "11", "34", "35"]);
    let cm = &doc["report"]["cm"];
    assert_eq!(cm["is_cm"], false);
    let cert = &cm["verdict"]["certificate"];
    assert_eq!(cert["kind"], "violation");
    assert_eq!(cert["v"].as_array().unwrap().len(), 3);
}

#[test]
fn unsorted_input_reports_the_permutation() {
    let doc = analyze_json(&["35", "9", "34", "11"]);
    assert_eq!(doc["report"]["generators"], serde_json::json!([9, 11, 34, 35]));
    assert_eq!(doc["report"]["input"], serde_json::json!([35, 9, 34, 11]));
    assert_eq!(doc["report"]["original_order"], serde_json::json!([3, 0, 2, 1]));
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["analyze", "10", "10", "22", "28"][..],
        &["analyze", "16", "26", "28", "40"],
        &["analyze", "0", "3", "4", "5"],
        &["analyze", "3", "4", "5"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn oracle_timeout_without_fast_route_exits_3() {
    // 2019 = 1009 + 1010 makes the tuple degenerate, so only the oracle applies
    let o = run(&["analyze", "1009", "1010", "2019", "3030", "--timeout-secs", "0"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn oracle_timeout_falls_back_to_closed_form() {
    let doc = analyze_json(&["1199", "2051", "2352", "3032", "--timeout-secs", "0"]);
    assert_eq!(doc["report"]["cm"]["oracle"], "timed_out");
    assert_eq!(doc["report"]["cm"]["is_cm"], true);
    assert_eq!(doc["report"]["cm"]["verdict"]["method"]["kind"], "closed_form");
}

#[test]
fn skip_oracle() {
    let doc = analyze_json(&["813", "1032", "1240", "1835", "--skip-oracle"]);
    assert_eq!(doc["report"]["cm"]["oracle"], "skipped");
    assert_eq!(doc["report"]["cm"]["is_cm"], true);
}

#[test]
fn table_cap_exits_3() {
    let o = run(&["analyze", "1199", "2051", "2352", "3032", "--max-table-bytes", "1000"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn report_is_deterministic_and_round_trips() {
    let a = analyze_json(&["49", "63", "65", "78", "--horizon", "12"]);
    let b = analyze_json(&["49", "63", "65", "78", "--horizon", "12"]);
    assert_eq!(a["report"], b["report"]);
    assert_eq!(a["report"]["hilbert"]["hf_values"].as_array().unwrap().len(), 13);

    let typed: monocurve::report::AnalysisReport = serde_json::from_value(a["report"].clone()).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), a["report"]);

    let mut extra = a["report"].clone();
    extra["unexpected"] = Value::Bool(true);
    assert!(serde_json::from_value::<monocurve::report::AnalysisReport>(extra).is_err());
}

#[test]
fn published_schema_is_current() {
    let o = run(&["schema"]);
    assert_eq!(o.status.code(), Some(0));
    let generated: Value = serde_json::from_slice(&o.stdout).unwrap();
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/schema/analyze.schema.json");
    let published: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(generated, published, "regenerate with `monocurve schema > {path}`");
}

#[test]
fn text_output() {
    let o = run(&["analyze", "627", "1546", "1662", "3377"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("a2 + a12 <= a1 + a23 - a13 + a24: 28 <= 29 holds"), "{s}");
    assert!(s.contains("case 2a"));
}

#[test]
fn sweep_gorenstein_only() {
    let path = tmp("gor.csv");
    let o = run(&["sweep", "--min", "10", "--max", "28", "--gorenstein-only", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n1,n2,n3,n4,case,mu,num_mingens,symmetric,gorenstein_case,complete_intersection,cm,cm_method,nondecreasing,numerator"
    );
    let rows: Vec<&str> = lines.collect();
    assert!(rows.iter().any(|r| r.starts_with("10,17,22,28,")));
    assert!(rows.iter().all(|r| r.split(',').nth(8).is_some_and(|g| !g.is_empty())));
}

#[test]
fn sweep_non_cm_nondecreasing() {
    let path = tmp("noncm.csv");
    let run_with = |jobs: &str| {
        let o = run(&[
            "sweep",
            "--min",
            "9",
            "--max",
            "35",
            "--non-cm-only",
            "--nondecreasing-only",
            "--jobs",
            jobs,
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0));
        std::fs::read_to_string(&path).unwrap()
    };
    let seq = run_with("1");
    assert!(seq.lines().any(|r| r.starts_with("9,11,34,35,")));
    assert!(seq.lines().skip(1).all(|r| r.contains(",false,") && r.contains(",true,")));
    assert_eq!(run_with("3"), seq);
}

#[test]
fn sweep_empty_range_has_header_only() {
    let path = tmp("empty.csv");
    let o = run(&["sweep", "--min", "7", "--max", "9", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("n1,n2,n3,n4,"));
}

#[test]
fn sweep_unwritable_path() {
    let o = run(&["sweep", "--min", "1", "--max", "8", "-o", "/nonexistent-dir/out.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_cap() {
    let o = run(&["sweep", "--min", "1", "--max", "100000", "-o", tmp("cap.csv").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn family_e43() {
    let o = run(&["family", "e43", "--m", "4..6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 3);
    for r in reports {
        assert_eq!(r["status"], "verified");
        assert!(r["checks"].as_array().unwrap().iter().all(|c| c["ok"] == true));
    }
}

#[test]
fn family_gi_rejection_is_not_a_failure() {
    let o = run(&["family", "gi", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("rejected") && s.contains("is 2"), "{s}");
}

#[test]
fn family_e41() {
    let o = run(&["family", "e41", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("(10, 17, 22, 28) verified"));
    assert!(s.contains("cohen-macaulay tangent cone: true"));
}

#[test]
fn family_argument_errors() {
    assert_eq!(run(&["family", "gi", "--m", "2"]).status.code(), Some(2));
    assert_eq!(run(&["family", "e43", "--m", "3"]).status.code(), Some(2));
    assert_eq!(run(&["family", "e99", "--m", "3"]).status.code(), Some(2));
    assert_eq!(run(&["family", "e43", "--m", "6..4"]).status.code(), Some(2));
}

