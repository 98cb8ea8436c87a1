use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_garside")).args(args).env_remove("GARSIDE_BUDGET").output().unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn documented_examples() {
    let nf = run(&["braid", "nf", "--group", "A2", "--word", "2.1.2"]);
    assert_eq!(String::from_utf8_lossy(&nf.stdout).trim(), r#"{"factors":[[1,2,1]]}"#);

    let coeff = run(&["hecke", "coeff", "--group", "A2", "--v", "1.2.1", "--t", "1.2", "--at", "1.2.1"]);
    assert_eq!(String::from_utf8_lossy(&coeff.stdout).trim(), r#"{"coeffs":[[0,1],[1,-2],[2,1]]}"#);

    let roots = stdout_json(&run(&["dcat", "roots", "--group", "D4", "--d", "4"]));
    assert_eq!(roots["count"], 12);
    assert_eq!(roots["roots"].as_array().unwrap().len(), 12);
}

#[test]
fn queries() {
    let g = stdout_json(&run(&["group", "--group", "B2"]));
    assert_eq!(g["order"], "8");
    assert_eq!(g["degrees"], json!([2, 4]));

    let signed = stdout_json(&run(&["braid", "group", "--group", "A2", "--word", "1.-2"]));
    assert_eq!(signed["delta_power"], -1);

    let root = stdout_json(&run(&["braid", "root", "--group", "A2", "--word", "1.2", "--d", "3"]));
    assert_eq!(root["is_root"], true);

    let path = stdout_json(&run(&["dcat", "path", "--group", "A2", "--from", "1.2", "--to", "2.1"]));
    assert_eq!(path["path"], json!([[1]]));

    let chain = stdout_json(&run(&["dcat", "chain", "--group", "D4", "--word", "2.3.1.3.4.3", "--conj", "1,4"]));
    assert_eq!(chain["closes"], true);

    let test = stdout_json(&run(&["conj", "test", "--group", "A2", "--word", "1", "--other", "2"]));
    assert_eq!(test["conjugate"], true);
    let not = stdout_json(&run(&["conj", "test", "--group", "A2", "--word", "1", "--other", "1.2"]));
    assert_eq!(not["conjugate"], false);

    let cent = stdout_json(&run(&["conj", "centralizer", "--group", "A2", "--word", "1.2"]));
    assert!(!cent["generators"].as_array().unwrap().is_empty());

    let eset = stdout_json(&run(&["hecke", "eset", "--group", "D4", "--word", "3.1.3.4.3", "--set", "1,3,4"]));
    assert_eq!(eset["elements"], json!([[], [1], [3], [4]]));

    let trace = stdout_json(&run(&["hecke", "trace", "--group", "A3", "--word", "1.3", "--f", "3,2,1"]));
    assert_eq!(trace["coeffs"].as_array().unwrap().last().unwrap()[0], 2);

    let irr = stdout_json(&run(&["hecke", "irr", "--group", "A3", "--word", "2", "--f", "3,2,1"]));
    assert_eq!(irr["irreducible"], false);

    let table = stdout_json(&run(&["chars", "table", "--type", "A", "--n", "3"]));
    assert_eq!(table["values"].as_array().unwrap().len(), 3);

    let span = stdout_json(&run(&["chars", "span", "--n", "4", "--d", "2"]));
    assert_eq!(span["intersection_dimension"], 0);
}

#[test]
fn verify_reports() {
    let out = run(&["verify", "d4"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["suite"], "d4");
    assert_eq!(report["passed"], true);
    for claim in report["claims"].as_array().unwrap() {
        assert_eq!(claim["status"], "pass");
        assert!(!claim["anchor"].as_str().unwrap().is_empty());
    }

    let span = run(&["verify", "span-A", "--n", "4"]);
    assert!(span.status.success());
}

#[test]
fn budget_exhaustion_is_reported_as_skipped() {
    let out = Command::new(env!("CARGO_BIN_EXE_garside"))
        .args(["verify", "d4"])
        .env("GARSIDE_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report = stdout_json(&out);
    assert!(report["counts"]["skipped"].as_u64().unwrap() > 0);
    assert_eq!(report["counts"]["fail"], 0);
}

#[test]
fn errors_and_exit_codes() {
    let usage = run(&["braid", "frobnicate"]);
    assert_eq!(usage.status.code(), Some(2));
    let suite = run(&["verify", "no-such-suite"]);
    assert_eq!(suite.status.code(), Some(2));

    let domain = run(&["braid", "nf", "--group", "A2", "--word", "1.7"]);
    assert_eq!(domain.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&domain.stderr).unwrap();
    assert!(err["error"].is_string());

    let bad_group = run(&["group", "--group", "Z9"]);
    assert_eq!(bad_group.status.code(), Some(1));
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "facts-B", "--n", "4"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["conj", "sss", "--group", "B2", "--word", "1.-2.1.2"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}
