use std::process::Command;

use chow_cli::{run, EXIT_BUDGET, EXIT_OK, EXIT_USAGE};
use serde_json::Value;

fn chow(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("chow").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = chow(&full);
    assert_eq!(code, EXIT_OK, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn decompose_quartic_cubics() {
    let v = json(&["decompose", "--space", "sym-sym", "--k", "4", "--d", "3"]);
    let modules = v["result"]["modules"].as_array().unwrap();
    assert_eq!(modules.len(), 12);
    assert!(modules.iter().all(|m| m["multiplicity"] == 1));
    assert_eq!(modules[0]["partition"], serde_json::json!([12]));
    assert_eq!(modules[11]["partition"], serde_json::json!([4, 4, 4]));
    assert_eq!(v["version"], chow_core::VERSION);
    assert_eq!(v["config"]["weight_cap"], 200_000);
}

#[test]
fn json_output_is_byte_identical() {
    let a = chow(&["--format", "json", "fh-kernel", "--delta", "4", "--d", "3"]);
    let b = chow(&["--format", "json", "fh-kernel", "--delta", "4", "--d", "3"]);
    let strip = |s: &str| s.lines().filter(|l| !l.contains("elapsed_ms")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&a.1), strip(&b.1));
}

#[test]
fn hwv_of_42() {
    let v = json(&["hwv", "--k", "3", "--d", "2", "--lambda", "4,2"]);
    let vecs = v["result"]["vectors"].as_array().unwrap();
    assert_eq!(vecs.len(), 1);
    assert_eq!(vecs[0]["terms"].as_array().unwrap().len(), 2);
    assert_eq!(vecs[0]["text"], "(e1^2)^2*(e2^2) - (e1^2)*(e1*e2)^2");
}

#[test]
fn fh_kernel_text() {
    let (code, out, _) = chow(&["fh-kernel", "--delta", "4", "--d", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("S(7,3,2) + S(6,2,2,2) + S(5,4,2,1)"), "{out}");
}

#[test]
fn prolong_once() {
    let v = json(&["prolong", "--ideal", "ch3-deg4", "--p", "1", "--n", "5"]);
    let parts: Vec<Value> = v["result"]["modules"].as_array().unwrap().iter().map(|m| m["partition"].clone()).collect();
    assert_eq!(parts, vec![serde_json::json!([7, 2, 2, 2, 2]), serde_json::json!([6, 4, 2, 2, 1]), serde_json::json!([5, 5, 3, 1, 1])]);
}

#[test]
fn secant_candidate() {
    let v = json(&["secant", "--d", "3", "--r", "2", "--degree", "8", "--candidate", "5,5,5,5,3,1"]);
    assert_eq!(v["result"]["certified"], true);
    let v = json(&["secant", "--d", "3", "--r", "2", "--degree", "8", "--candidate", "24"]);
    assert_eq!(v["result"]["certified"], false);
}

#[test]
fn secant_of_conics() {
    let v = json(&["secant", "--d", "2", "--r", "1", "--n", "3"]);
    assert_eq!(v["result"]["degree"], 3);
    assert_eq!(v["result"]["modules"][0]["partition"], serde_json::json!([2, 2, 2]));
}

#[test]
fn balanced_split_diagnostic() {
    let v = json(&["secant", "--d", "2", "--r", "2", "--degree", "5", "--n", "5", "--check-conjecture"]);
    let r = &v["result"];
    assert_eq!(r["balanced_split"], serde_json::json!([3, 2]));
    assert_eq!(r["agrees"], true);
    let kept: Vec<_> = r["modules"].as_array().unwrap().iter().filter(|m| m["all_splits"] != 0).map(|m| m["partition"].clone()).collect();
    assert_eq!(kept, [serde_json::json!([2, 2, 2, 2, 2])]);
    let (code, _, _) = chow(&["secant", "--d", "2", "--r", "2", "--n", "5", "--check-conjecture"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn check_reports() {
    let v = json(&["check", "--theorem", "3.16"]);
    assert_eq!(v["theorem"], "3.16");
    assert_eq!(v["status"], "PASS");
    assert!(v["witnesses"].as_array().unwrap().len() >= 5);
    assert!(v["elapsed_ms"].is_number());
    let (code, out, _) = chow(&["check", "--theorem", "3.12"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("PASS 3.12"));
}

#[test]
fn usage_errors() {
    assert_eq!(chow(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(chow(&["hwv", "--k", "3", "--d", "2", "--lambda", "2,4"]).0, EXIT_USAGE);
    assert_eq!(chow(&["check", "--theorem", "0.0"]).0, EXIT_USAGE);
    assert_eq!(chow(&["prolong", "--ideal", "cubic", "--p", "1"]).0, EXIT_USAGE);
    assert_eq!(chow(&["--weight-cap", "0", "decompose", "--k", "2", "--d", "2"]).0, EXIT_USAGE);
    assert_eq!(chow(&["--help"]).0, EXIT_OK);
}

#[test]
fn budget_exit() {
    let (code, _, err) = chow(&["--weight-cap", "5", "hwv", "--k", "4", "--d", "3", "--lambda", "7,3,2"]);
    assert_eq!(code, EXIT_BUDGET);
    assert!(err.contains("budget"), "{err}");
}

#[test]
fn binary_exit_codes_and_env_cap() {
    let bin = env!("CARGO_BIN_EXE_chow");
    let st = Command::new(bin).args(["decompose", "--k", "2", "--d", "2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&st.stdout).lines().next(), Some("S(4) + S(2,2)"));
    let st = Command::new(bin).env("CHOW_WEIGHT_CAP", "3").args(["hwv", "--k", "4", "--d", "3", "--lambda", "7,3,2"]).output().unwrap();
    assert_eq!(st.status.code(), Some(3));
    let st = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(st.status.code(), Some(2));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("chow-report-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = chow(&["--format", "json", "--output", p, "decompose", "--k", "2", "--d", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["result"]["modules"].as_array().unwrap().len(), 2);
    std::fs::remove_file(path).unwrap();
}
