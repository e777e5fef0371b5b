use std::process::Command;

use cliffcox::cli::{run, Outcome};
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("cliffcox").chain(args.iter().copied()))
}

fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn json(args: &[&str]) -> Value {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn roots_csv_matches_golden() {
    let out = cli(&["roots", "H3", "--format", "csv"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("roots_h3.csv"));
    assert_eq!(out.stdout.lines().count(), 31);
}

#[test]
fn induce_identifies_h4() {
    let out = cli(&["induce", "H3", "--identify"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, golden("induce_h3.json"));
    let doc: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(doc["data"]["identified"], "H4");
    assert_eq!(doc["data"]["count"], 120);
    assert_eq!(doc["data"]["roots"].as_array().unwrap().len(), 120);
    assert_eq!(doc["meta"]["input"], "H3");
    assert_eq!(doc["meta"]["diagram"], "rank=3; edges: 1-2:3, 2-3:5");

    let text = cli(&["induce", "H3", "--identify", "--format", "text"]);
    assert_eq!(text.stdout, golden("induce_h3.txt"));
}

#[test]
fn unknown_diagram_is_a_usage_error() {
    let out = cli(&["roots", "Z9"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr, golden("roots_z9.stderr"));
    assert!(out.stderr.contains("unknown diagram"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["roots"],
        vec!["frobnicate", "H3"],
        vec!["roots", "H3", "--bogus"],
        vec!["--precision", "8", "roots", "A2"],
        vec!["group", "H3", "--pin", "--spin"],
        vec!["rep", "H3", "--kind", "adjoint"],
        vec!["fold-e8", "--format", "csv"],
        vec!["roots", "H3", "--format", "dot"],
        vec!["roots", "1 -- 2 [0]"],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        vec!["roots", "A3", "--ceiling", "5"],
        vec!["induce", "E8"],
        vec!["roots", "G2"],
        vec!["mckay", "E8"],
        vec!["group", "H3", "--ceiling", "100"],
    ] {
        let out = cli(&args);
        assert_eq!(out.code, 1, "{args:?}: {}", out.stderr);
        assert!(out.stderr.starts_with("error: "), "{args:?}");
    }
}

#[test]
fn help_and_version_succeed() {
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("fold-e8"));
    assert_eq!(cli(&["--version"]).code, 0);
}

#[test]
fn json_has_meta_and_exact_scalars() {
    let doc = json(&["roots", "A1^3"]);
    assert_eq!(doc["data"]["count"], 6);
    assert_eq!(doc["meta"]["field_basis"], serde_json::json!(["1", "√2", "τ", "√2τ"]));
    assert_eq!(doc["meta"]["command"], "roots");
    let first = &doc["data"]["roots"][0][0];
    assert_eq!(first["coeffs"].as_array().unwrap().len(), 4);
    assert!(first["decimal"].is_string());
}

#[test]
fn precision_controls_decimal_digits() {
    let doc = json(&["--precision", "16", "roots", "H3"]);
    let decimal = doc["data"]["roots"][1][0]["decimal"].as_str().unwrap();
    assert_eq!(decimal, "0.8090");
}

#[test]
fn subcommand_summaries() {
    assert_eq!(json(&["group", "H3", "--pin"])["data"]["order"], 240);
    assert_eq!(json(&["group", "H3"])["data"]["order"], 120);
    assert_eq!(json(&["group", "H3", "--chiral"])["data"]["order"], 60);
    assert_eq!(json(&["classes", "H3"])["data"]["classes"].as_array().unwrap().len(), 9);
    assert_eq!(cli(&["aut", "induced:A3", "--format", "text"]).stdout, "1152\n");
    assert_eq!(cli(&["aut", "B3", "--format", "text"]).stdout, "48\n");
    let rep = json(&["rep", "H3", "--kind", "leftmult"]);
    assert_eq!(rep["data"]["type"], "quaternionic");
    assert_eq!(rep["data"]["degree"], 4);
    let table = json(&["chartable", "H3"]);
    assert_eq!(table["data"]["degree_sum"], 16);
    assert_eq!(table["data"]["all_exact"], true);
    let mckay = json(&["mckay", "B3"]);
    assert_eq!(mckay["data"]["affine_type"], "affine E7");
    let dot = cli(&["mckay", "A3", "--format", "dot"]);
    assert!(dot.stdout.starts_with("graph mckay {"));
    assert!(dot.stdout.contains("label=\"2s\", style=bold"));
    let fold = json(&["fold-e8"]);
    assert_eq!(fold["data"]["relations"]["matches_h4"], true);
    assert_eq!(fold["data"]["coxeter"]["coxeter_number"], 30);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let commands: [&[&str]; 10] = [
        &["roots", "E8", "--format", "csv"],
        &["group", "B3", "--pin"],
        &["classes", "H3", "--chiral"],
        &["induce", "B3", "--identify"],
        &["aut", "H3"],
        &["rep", "H3", "--kind", "so3"],
        &["chartable", "H3", "--binary"],
        &["mckay", "H3", "--format", "dot"],
        &["fold-e8", "--relations"],
        &["roots", "A1^3", "--format", "text"],
    ];
    for args in commands {
        let a = cli(args);
        let b = cli(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn binary_matches_in_process_run() {
    let exe = env!("CARGO_BIN_EXE_cliffcox");
    let out = Command::new(exe)
        .args(["roots", "H3", "--format", "csv"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("roots_h3.csv"));

    let bad = Command::new(exe).args(["roots", "Z9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("unknown diagram"));
}
