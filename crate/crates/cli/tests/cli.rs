use std::process::{Command, Output};

use serde_json::Value;

fn treeratio(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_treeratio")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn gen_caterpillar_code_and_bad_order() {
    let out = treeratio(&["gen", "caterpillar", "--n", "8", "--format", "codes"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().count(), 1);

    let out = treeratio(&["gen", "caterpillar", "--n", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("order must be even ≥ 4"), "{}", stderr(&out));
}

#[test]
fn gen_three_way_edge_list() {
    let out = treeratio(&["gen", "three-way", "--branches", "3,3,1"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.starts_with("n=8\n"));
    assert_eq!(text.lines().count(), 8);

    let out = treeratio(&["gen", "three-way", "--branches", "3,2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn invariants_of_the_star() {
    let out = treeratio(&["invariants", "--code", "(()()())"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["centroid"], serde_json::json!([0]));
    assert_eq!(v["core"], serde_json::json!([0]));
    assert_eq!(v["wiener"], 9);
    assert_eq!(v["total_subtrees"], "11");
    assert_eq!(v["subtrees"][0], "8");
}

#[test]
fn invariants_from_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c8.txt");
    let edges = stdout(&treeratio(&["gen", "caterpillar", "--n", "8"]));
    std::fs::write(&path, edges).unwrap();
    let v = json(&treeratio(&["invariants", "--file", path.to_str().unwrap()]));
    let centroid = v["centroid"][0].as_u64().unwrap() as usize;
    assert_eq!(v["sigma"][centroid], 11);
}

#[test]
fn malformed_code_is_a_usage_error() {
    let out = treeratio(&["invariants", "--code", "(()"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enum_counts_and_parity() {
    let out = treeratio(&["enum", "--n", "10", "--count-only"]);
    assert_eq!(stdout(&out).trim(), "2");
    let out = treeratio(&["enum", "--n", "4"]);
    assert_eq!(stdout(&out).lines().count(), 1);
    assert_eq!(treeratio(&["enum", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn enum_output_does_not_depend_on_jobs() {
    let one = stdout(&treeratio(&["enum", "--n", "16", "--jobs", "1"]));
    let many = stdout(&treeratio(&["enum", "--n", "16", "--jobs", "5"]));
    assert_eq!(one, many);
    assert_eq!(one.lines().count(), 6);
}

#[test]
fn verify_props_and_subtree_theorem_pass() {
    let out = treeratio(&["verify", "props", "--n-max", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let out = treeratio(&["verify", "theorem-sub", "--n-max", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["orders"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_distance_theorem_reports_counterexample() {
    let out = treeratio(&["verify", "theorem-dis", "--n-max", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("counterexample"));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    assert_eq!(v["orders"][0]["best_ratio"], "5/3");
}

#[test]
fn verify_over_cap_is_a_usage_error() {
    let out = treeratio(&["verify", "theorem-sub", "--n-max", "30"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_records() {
    let out = treeratio(&["search", "--ratio", "dis", "--mode", "min", "--n", "12"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["best_ratio"], "33/23");
    assert_eq!(v["formula_value"], "34/23");

    let out = treeratio(&["search", "--ratio", "sub", "--mode", "max", "--n", "12"]);
    let v: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert!(v.get("formula_value").is_none());

    let out = treeratio(&["search", "--ratio", "dis", "--mode", "min", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn search_appends_jsonl_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("out.jsonl");
    let csv = dir.path().join("out.csv");
    for (path, format) in [(&jsonl, "json"), (&csv, "csv")] {
        for n in ["8", "10"] {
            let out = treeratio(&[
                "search",
                "--ratio",
                "sub",
                "--mode",
                "min",
                "--n",
                n,
                "--out",
                path.to_str().unwrap(),
                "--format",
                format,
            ]);
            assert!(out.status.success(), "{}", stderr(&out));
            assert!(stdout(&out).contains("formula"));
        }
    }
    let lines: Vec<Value> =
        std::fs::read_to_string(&jsonl).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1]["best_ratio"], "55/28");

    let text = std::fs::read_to_string(&csv).unwrap();
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[0].starts_with("schema,n,ratio_kind"));
    assert_eq!(rows.iter().filter(|r| r.starts_with("schema")).count(), 1);
}

#[test]
fn failed_search_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.jsonl");
    let out = treeratio(&[
        "search",
        "--ratio",
        "dis",
        "--mode",
        "min",
        "--n",
        "4",
        "--n-max",
        "30",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!path.exists());
}
