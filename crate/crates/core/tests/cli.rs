use std::process::{Command, Output};

use serde_json::Value;
use subword_count::closed_form::count_single;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subword-count"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout)
        .unwrap_or_else(|e| panic!("bad json ({e}): {}", String::from_utf8_lossy(&out.stdout)))
}

fn write_doc(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn count_inline_binary() {
    let out = run(&["count", "--q", "2", "--t", "4", "--pattern", "ab=1"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout_json(&out);
    assert_eq!(body["count"], "10");
    assert_eq!(body["method"], "closed_form");
    assert!(body.get("terms").is_none());
}

#[test]
fn count_dna_document_is_exact() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(
        &dir,
        "atg.json",
        r#"{"alphabet": {"symbols": ["A","C","G","T"]}, "length": 100,
            "patterns": [{"pattern": "ATG", "count": 5}]}"#,
    );
    let out = run(&["count", "--input", &path, "--breakdown"]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout_json(&out);
    let expected = count_single(4, 100, 3, 5).unwrap();
    assert_eq!(body["count"], expected.total.to_string());
    let terms = body["terms"].as_array().unwrap();
    assert_eq!(terms.len(), expected.terms.len());
    assert_eq!(terms[0]["indices"], serde_json::json!([5]));
    assert!(terms[1]["value"].as_str().unwrap().starts_with('-'));
}

#[test]
fn count_rejects_self_intersection() {
    let out = run(&["count", "--q", "2", "--t", "4", "--pattern", "aa=1"]);
    assert_eq!(out.status.code(), Some(2));
    let report: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(
        report["per_pattern_self_intersection"],
        serde_json::json!([true])
    );
    assert_eq!(report["is_formula_applicable"], false);
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(&dir, "bad.json", "{ not json");
    assert_eq!(run(&["count", "--input", &path]).status.code(), Some(1));
    assert_eq!(
        run(&["count", "--q", "2", "--pattern", "ab=1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["count", "--q", "2", "--t", "4", "--pattern", "ax=1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        run(&["count", "--input", "/nonexistent/doc.json"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn verify_both_oracles_agree() {
    let out = run(&[
        "verify",
        "--q",
        "3",
        "--t",
        "4",
        "--pattern",
        "ab=1",
        "--pattern",
        "cb=1",
        "--oracle",
        "both",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout_json(&out);
    assert_eq!(body["closed_form"], "2");
    assert_eq!(body["enum"], "2");
    assert_eq!(body["automaton"], "2");
    assert_eq!(body["agree"], true);
}

#[test]
fn verify_two_motifs_with_automaton() {
    let out = run(&[
        "verify",
        "--alphabet",
        "ACGT",
        "--t",
        "200",
        "--pattern",
        "ATG=10",
        "--pattern",
        "CGT=8",
        "--oracle",
        "automaton",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = stdout_json(&out);
    assert_eq!(body["agree"], true);
    assert_eq!(body["closed_form"], body["automaton"]);
}

#[test]
fn verify_enumeration_refuses_large_instances() {
    let out = run(&[
        "verify",
        "--alphabet",
        "ACGT",
        "--t",
        "200",
        "--pattern",
        "ATG=10",
        "--oracle",
        "enum",
    ]);
    assert_eq!(out.status.code(), Some(4));
    let body = stdout_json(&out);
    assert_eq!(body["enum"], Value::Null);
    assert_eq!(body["refused"], serde_json::json!(["enum"]));
}

#[test]
fn verify_respects_guard_flag() {
    let args = [
        "verify",
        "--q",
        "2",
        "--t",
        "10",
        "--pattern",
        "ab=2",
        "--oracle",
        "enum",
    ];
    assert_eq!(run(&args).status.code(), Some(0));
    let mut tight = args.to_vec();
    tight.extend(["--guard", "1000"]);
    assert_eq!(run(&tight).status.code(), Some(4));
}

#[test]
fn validate_reports() {
    let out = run(&[
        "validate",
        "--alphabet",
        "ACGT",
        "--t",
        "10",
        "--pattern",
        "ATG=1",
        "--pattern",
        "CGT=1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["is_formula_applicable"], true);

    let out = run(&[
        "validate",
        "--q",
        "3",
        "--t",
        "5",
        "--pattern",
        "ab=1",
        "--pattern",
        "ca=1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        stdout_json(&out)["cross_overlap_pairs"],
        serde_json::json!([[0, 1]])
    );

    let out = run(&["validate", "--q", "2", "--t", "5", "--pattern", "aba=1"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(
        stdout_json(&out)["per_pattern_self_intersection"],
        serde_json::json!([true])
    );
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.json");
    let out = run(&[
        "count",
        "--q",
        "2",
        "--t",
        "4",
        "--pattern",
        "[0,1]=1",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body: Value = serde_json::from_str(&std::fs::read_to_string(target).unwrap()).unwrap();
    assert_eq!(body["count"], "10");
}

#[test]
fn bench_csv_rows_agree() {
    let out = run(&[
        "bench",
        "--q",
        "4",
        "--t",
        "6,8",
        "--lengths",
        "3",
        "--counts",
        "1",
        "--method",
        "closed-form",
        "--method",
        "enum",
        "--method",
        "automaton",
        "--reps",
        "1",
        "--csv",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "method,q,t,pattern_lengths,required_counts,wall_seconds,count_digits"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 6);
    for pair in rows.chunks(3) {
        assert!(pair.iter().all(|r| r[6] == pair[0][6]));
    }
}

#[test]
fn bench_json_with_explicit_patterns() {
    let out = run(&[
        "bench",
        "--q",
        "4",
        "--alphabet",
        "ACGT",
        "--t",
        "100",
        "--pattern",
        "ATG",
        "--counts",
        "5",
        "--method",
        "closed-form",
        "--method",
        "automaton",
        "--reps",
        "1",
        "--json",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let body = stdout_json(&out);
    let rows = body["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["method"], "closed_form");
    assert_eq!(rows[1]["method"], "automaton");
    assert_eq!(rows[0]["count_digits"], rows[1]["count_digits"]);
}

#[test]
fn bench_refusal_of_every_instance_exits_four() {
    let out = run(&[
        "bench", "--q", "4", "--t", "20,30", "--method", "enum", "--reps", "1",
    ]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
