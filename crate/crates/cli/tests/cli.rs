use std::process::Command;

use serde_json::Value;
use sl2swc::run;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("sl2swc").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn error(args: &[&str]) -> (i32, Value) {
    let (code, out, err) = invoke(args);
    assert!(out.is_empty());
    (code, serde_json::from_str(err.trim()).unwrap())
}

#[test]
fn swc_of_regular_rep_of_sl2_3() {
    let v = json(&["--no-cache", "swc", "--q", "3", "--rep", "reg"]);
    assert_eq!(v["total_string"], "1 + e + e^2 + e^3");
    assert_eq!(v["r_or_m"], 3);
    assert_eq!(v["degree"], 24);
    assert_eq!(v["parity"], "odd");
    assert_eq!(v["image_exponent"]["residue"].as_u64().unwrap() % 4, 3);
}

#[test]
fn swc_of_trivial_is_one() {
    let v = json(&["--no-cache", "swc", "--q", "5", "--rep", "X1"]);
    assert_eq!(v["total_string"], "1");
    assert_eq!(v["obstruction_degree"], "infinity");
}

#[test]
fn dickson_rank_two() {
    let v = json(&["dickson", "--rank", "2"]);
    let inv = v["invariants"].as_array().unwrap();
    assert_eq!(inv.len(), 2);
    assert_eq!(inv[0]["name"], "d1");
    assert_eq!(inv[0]["degree"], 2);
    assert_eq!(inv[0]["value"], "v1^2 + v1*v2 + v2^2");
    assert_eq!(inv[1]["degree"], 3);
}

#[test]
fn verify_gow_passes() {
    let v = json(&["--no-cache", "verify", "--q", "5", "--suite", "gow"]);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["cases"], v["passes"]);
}

#[test]
fn table_and_cohomology_documents() {
    let t = json(&["--no-cache", "table", "--q", "3"]);
    assert_eq!(t["order"], 24);
    assert_eq!(t["characters"].as_array().unwrap().len(), 7);
    let g = json(&["--no-cache", "table", "--q", "3", "--group", "gl2"]);
    assert_eq!(g["order"], 48);
    let c = json(&["cohomology", "--group", "Q8", "--max-degree", "8"]);
    assert_eq!(c["dims"], serde_json::json!([1, 2, 2, 1, 1, 2, 2, 1, 1]));
    let e = json(&["cohomology", "--group", "c2:3", "--max-degree", "2"]);
    assert_eq!(e["dims"], serde_json::json!([1, 3, 6]));
}

#[test]
fn output_is_deterministic() {
    let args = ["--no-cache", "verify", "--q", "7", "--suite", "theorem", "--trials", "20", "--seed", "9"];
    assert_eq!(invoke(&args), invoke(&args));
    let args = ["--no-cache", "swc", "--q", "4", "--rep", "2*X3 - X1"];
    assert_eq!(invoke(&args), invoke(&args));
}

#[test]
fn errors_are_json_on_stderr() {
    let (code, v) = error(&["frobnicate"]);
    assert_eq!((code, v["error"].as_str().unwrap()), (2, "usage"));
    let (code, v) = error(&["--no-cache", "swc", "--q", "5", "--rep", "2**X1"]);
    assert_eq!((code, v["error"].as_str().unwrap()), (2, "expression"));
    let (code, v) = error(&["--no-cache", "swc", "--q", "6", "--rep", "X1"]);
    assert_eq!((code, v["error"].as_str().unwrap()), (2, "table"));
    let (code, v) = error(&["dickson", "--rank", "0"]);
    assert_eq!((code, v["error"].as_str().unwrap()), (2, "usage"));
    let (code, v) = error(&["cohomology", "--group", "Q7", "--max-degree", "3"]);
    assert_eq!((code, v["error"].as_str().unwrap()), (2, "usage"));
    assert!(v["detail"].as_str().unwrap().contains("Q7"));
}

#[test]
fn help_and_version_exit_zero() {
    let (code, out, err) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("swc") && err.is_empty());
    let (code, out, _) = invoke(&["--version"]);
    assert_eq!(code, 0);
    assert!(out.contains(env!("CARGO_PKG_VERSION")));
}

#[test]
fn binary_uses_cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_sl2swc"))
        .args(["swc", "--q", "5", "--rep", "reg"])
        .env("SL2SWC_CACHE_DIR", dir.path())
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(dir.path().join("sl2-5-v1.json").exists());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], 5);

    let bad = Command::new(env!("CARGO_BIN_EXE_sl2swc")).args(["swc", "--q", "5"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    let e: Value = serde_json::from_slice(&bad.stderr).unwrap();
    assert_eq!(e["error"], "usage");
}
