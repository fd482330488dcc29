use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicircular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON document")
}

fn verdict<'a>(report: &'a Value, claim: &str) -> &'a Value {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["claim"] == claim)
        .unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("bicircular-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn analyze_petersen() {
    let out = run(&["analyze", "--gen", "petersen", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stderr.is_empty());
    let report = json(&out);
    assert_eq!(report["schema"], 1);
    assert_eq!(report["girth"], 5);
    assert_eq!(report["census"]["positive_count"], 0);
    assert_eq!(report["census"]["total"], 220);
    assert_eq!(
        verdict(&report, "girth5_implies_no_positive")["status"],
        "pass"
    );
    assert_eq!(verdict(&report, "duality_check")["status"], "skipped");
}

#[test]
fn analyze_k4() {
    let out = run(&["analyze", "--gen", "complete", "-n", "4", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["girth"], 3);
    assert_eq!(
        verdict(&report, "girth5_implies_no_positive")["status"],
        "not_applicable"
    );
    assert_eq!(report["census"]["degree_histogram"]["6"], 1);
    assert_eq!(report["census"]["positive_count"], 1);
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["analyze", "missing.graph"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("missing.graph"));
    assert!(out.stdout.is_empty());

    let bad = scratch("bad.graph");
    std::fs::write(&bad, "p 2 1\ne 0 5\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["kind"], "parse");
    assert!(err["error"].as_str().unwrap().contains("line 2"));

    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "random", "-n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "theta", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn generated_graphs_round_trip() {
    let args = [
        "gen",
        "random",
        "-n",
        "12",
        "-m",
        "16",
        "--seed",
        "7",
        "--min-girth",
        "5",
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, run(&args).stdout);

    let file = scratch("random.graph");
    std::fs::write(&file, &first.stdout).unwrap();
    let out = run(&["analyze", file.to_str().unwrap(), "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["graph"]["m"], 16);
    assert!(report["girth"].as_u64().is_none_or(|g| g >= 5));
}

#[test]
fn exhausted_generation_is_an_input_error() {
    // girth-5 graphs with 12 vertices and 18 edges are about one in 2 million
    // uniform draws
    let out = run(&[
        "gen",
        "random",
        "-n",
        "12",
        "-m",
        "18",
        "--seed",
        "7",
        "--min-girth",
        "5",
        "--max-tries",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["kind"], "generator");
}

#[test]
fn closed_stdout_keeps_the_exit_status() {
    use std::process::Stdio;
    let mut child = Command::new(env!("CARGO_BIN_EXE_bicircular"))
        .args(["gen", "petersen"])
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    drop(child.stdout.take());
    assert_eq!(child.wait().unwrap().code(), Some(0));
}

#[test]
fn reports_are_byte_stable() {
    let args = ["analyze", "--gen", "theta", "--params", "2,2,1", "--quiet"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
    let s = [
        "search",
        "--min-girth",
        "4",
        "--count",
        "10",
        "-n",
        "8",
        "-m",
        "9",
        "--seed",
        "5",
        "--quiet",
    ];
    assert_eq!(run(&s).stdout, run(&s).stdout);
}

#[test]
fn search_sweeps() {
    let out = run(&[
        "search",
        "--min-girth",
        "5",
        "--count",
        "100",
        "-n",
        "12",
        "-m",
        "16",
        "--seed",
        "1",
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    assert_eq!(report["graphs_checked"], 100);
    assert_eq!(report["positives_found"], 0);

    let out = run(&[
        "search",
        "--min-girth",
        "3",
        "--count",
        "100",
        "-n",
        "6",
        "-m",
        "9",
        "--seed",
        "1",
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let findings = report["findings"].as_array().unwrap();
    assert!(!findings.is_empty());
    assert!(!findings[0]["witness"]["edges"]
        .as_array()
        .unwrap()
        .is_empty());

    let out = run(&["search", "--count", "0", "-n", "5", "-m", "5", "--quiet"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["findings"].as_array().unwrap().len(), 0);
}

#[test]
fn failure_witnesses_reverify() {
    let out = run(&[
        "analyze",
        "--gen",
        "complete",
        "-n",
        "4",
        "--inject-fault",
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let failed = verdict(&report, "duality_check");
    assert_eq!(failed["status"], "fail");
    let edges: Vec<String> = failed["witness"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.to_string())
        .collect();
    let edges = edges.join(",");

    let again = run(&[
        "analyze",
        "--gen",
        "complete",
        "-n",
        "4",
        "--witness",
        &edges,
        "--inject-fault",
        "--quiet",
    ]);
    assert_eq!(again.status.code(), Some(1));
    assert_eq!(verdict(&json(&again), "duality_check")["status"], "fail");

    let clean = run(&[
        "analyze",
        "--gen",
        "complete",
        "-n",
        "4",
        "--witness",
        &edges,
        "--quiet",
    ]);
    assert_eq!(clean.status.code(), Some(0));
}

#[test]
fn fixtures_record_then_compare() {
    let path = scratch("fixture.json");
    let _ = std::fs::remove_file(&path);
    let p = path.to_str().unwrap();
    let first = run(&[
        "analyze",
        "--gen",
        "banana",
        "-n",
        "4",
        "--fixture",
        p,
        "--quiet",
    ]);
    assert_eq!(first.status.code(), Some(0));
    let stored: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(stored["banana(4)"], 1);

    assert_eq!(
        run(&[
            "analyze",
            "--gen",
            "banana",
            "-n",
            "4",
            "--fixture",
            p,
            "--quiet"
        ])
        .status
        .code(),
        Some(0)
    );

    std::fs::write(&path, r#"{"banana(4)": 2}"#).unwrap();
    let out = run(&[
        "analyze",
        "--gen",
        "banana",
        "-n",
        "4",
        "--fixture",
        p,
        "--quiet",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(verdict(&json(&out), "regression_fixture")["status"], "fail");
}

#[test]
fn verify_paper_suite() {
    let out = run(&["verify-paper"]);
    assert_eq!(out.status.code(), Some(0));
    let report = json(&out);
    let claims = report["claims"].as_array().unwrap();
    assert_eq!(claims.len(), 10);
    assert!(claims
        .iter()
        .all(|c| c["status"] == "pass" && c["tag"].is_string()));
    let progress = String::from_utf8(out.stderr).unwrap();
    assert_eq!(
        progress.lines().filter(|l| l.starts_with("PASS")).count(),
        10
    );

    let out = run(&["verify-paper", "--inject-fault", "--quiet"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let duality = report["claims"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["claim"] == "coline_duality")
        .unwrap();
    assert_eq!(duality["status"], "fail");
    assert!(duality["witness"]["edges"].is_array());
}
