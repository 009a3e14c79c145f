use std::process::Command;

use serde_json::Value;

fn wps(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wps")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn degree_of_a_fixture() {
    let (code, out, _) = wps(&["degree", "--ideal", &fixture("example211.json")]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap(), "11/30");
}

#[test]
fn scroll_table_is_tsv_by_default() {
    let (code, out, _) = wps(&["scrolls", "--weights", "1,1,3,3,6,6,6", "--min-codim", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 16);
    assert!(out.starts_with("dim\tprofile\tdegree"));
    let (_, json, _) = wps(&["--format", "json", "scrolls", "--weights", "1,1,3,3,6,6,6"]);
    assert_eq!(serde_json::from_str::<Value>(&json).unwrap().as_array().unwrap().len(), 15);
}

#[test]
fn betti_from_a_profile() {
    let (code, out, _) = wps(&["--format", "tsv", "betti", "--weights", "1,1,3,3,6,6,6", "--profile", "3,3,6,6,6"]);
    assert_eq!(code, 0);
    assert!(out.contains("20:"));
}

#[test]
fn threefold_search() {
    let (code, out, _) = wps(&["threefold", "search", "--weights", "1,3,4,7", "--cap", "4/7"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["numeric_survivors"].as_array().unwrap().len(), 2);
    assert!(v["final_survivors"].as_array().unwrap().is_empty());
}

#[test]
fn param_from_blocks() {
    let (code, out, _) = wps(&["param", "--blocks", &fixture("example417_blocks.json")]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verification"]["passed"], true);
    assert_eq!(v["entries"].as_object().unwrap().len(), 9);
}

#[test]
fn errors_are_structured() {
    let (code, _, err) = wps(&["degree", "--ideal", "/nonexistent.json"]);
    assert_eq!(code, 2);
    let v: Value = serde_json::from_str(err.trim()).unwrap();
    assert_eq!(v["error"], "parse");
    let (code, _, _) = wps(&["minimal-profile", "--weights", "1,1,2", "--dim", "5"]);
    assert_eq!(code, 1);
    let (code, _, _) = wps(&["scrolls"]);
    assert_eq!(code, 2);
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_wps"))
        .args(["degree", "--ideal", &fixture("example211.json")])
        .env("WPS_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}
