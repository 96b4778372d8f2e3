use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn cmtate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cmtate")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = cmtate(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("cmtate-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn census_json_envelope() {
    let v = json(&["census", "--builtin", "s3c2"]);
    assert_eq!(v["tool"], "cmtate");
    assert_eq!(v["command"], "census");
    assert_eq!(v["datum_hash"].as_str().unwrap().len(), 16);
    assert_eq!(v["group_order"], 12);
    assert_eq!(v["d"], 2);
    assert_eq!(v["t"], 3);
    assert_eq!(v["enumerated"], 27);
    assert_eq!(v["dplus1_pow_t"], 27);
    assert_eq!(v["t_pow_d"], 9);
    assert_eq!(v["isolated_pair_count"], 6);
    assert_eq!(v["isolated_pair_formula"], 6);
}

#[test]
fn census_undefined_formula_is_null() {
    // t = 2, d = 1 puts 0 in the denominator
    let v = json(&["census", "--builtin", "biq-c2c2"]);
    assert_eq!(v["enumerated"], 4);
    assert_eq!(v["t_pow_d"], 2);
    assert!(v["isolated_pair_formula"].is_null());
}

#[test]
fn census_csv_has_header_and_version() {
    let out = cmtate(&["census", "--builtin", "biq-c2c2", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("datum_hash,group_order,d,t,enumerated"));
    assert!(lines[0].ends_with(",version"));
    let cells: Vec<&str> = lines[1].split(',').collect();
    assert_eq!(cells[1..5], ["4", "1", "2", "4"]);
    assert_eq!(*cells.last().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn analyze_single_function() {
    let v = json(&["analyze", "--builtin", "s3c2", "--f", "0,1,2"]);
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 1);
    let r = &reports[0];
    assert_eq!(r["f"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["H_index"], 6);
    assert_eq!(r["s"], 3);
    assert_eq!(r["dim_L"], 4);
    assert_eq!(r["dim_P"], 3);
    assert_eq!(r["exotic"], true);
    assert_eq!(r["kowalski_independent"], false);
}

#[test]
fn analyze_all_lists_every_function() {
    let v = json(&["analyze", "--builtin", "biq-c2c2", "--all"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 4);
    let out = cmtate(&["analyze", "--builtin", "s3c2", "--all", "--format", "csv"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 28);
}

#[test]
fn enumerate_is_lexicographic() {
    let v = json(&["enumerate", "--builtin", "biq-c2c2"]);
    assert_eq!(v["count"], 4);
    let tops: Vec<Value> = v["functions"].as_array().unwrap().iter().map(|f| f["top_values"].clone()).collect();
    assert_eq!(tops, [[0, 0], [0, 1], [1, 0], [1, 1]].map(|t| serde_json::json!(t)));
}

#[test]
fn reduce_lists_every_cm_type() {
    let v = json(&["reduce", "--builtin", "s3c2"]);
    let reductions = v["reductions"].as_array().unwrap();
    assert_eq!(reductions.len(), 64);
    assert_eq!(reductions.iter().filter(|r| r["plus"] == true).count(), 32);
    for r in reductions {
        let sum: u64 = r["values"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).sum();
        assert_eq!(sum, 6);
    }
}

#[test]
fn hazama_from_file() {
    let v = json(&["hazama", "--input", &data("c6.json")]);
    assert_eq!(v["m"], 3);
    assert_eq!(v["dimension"], 4);
    for check in ["homomorphism", "iota_minus_one", "hyperplane_transitive", "faithful"] {
        assert_eq!(v["rho_checks"][check], true, "{check}");
    }
}

#[test]
fn cayley_input_matches_generator_input() {
    let path = temp_file("c2.json", r#"{"group": {"cayley": [[0, 1], [1, 0]]}, "iota": 1}"#);
    let from_file = json(&["census", "--input", path.to_str().unwrap()]);
    let builtin = json(&["census", "--builtin", "ell-c2"]);
    assert_eq!(from_file, builtin);
    std::fs::remove_file(path).ok();
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| cmtate(args).status.code();
    assert_eq!(code(&["--help"]), Some(0));
    assert_eq!(code(&["census"]), Some(1));
    assert_eq!(code(&["census", "--builtin", "nope"]), Some(1));
    assert_eq!(code(&["analyze", "--builtin", "s3c2"]), Some(1));
    assert_eq!(code(&["analyze", "--builtin", "s3c2", "--f", "0,1,2", "--all"]), Some(1));
    assert_eq!(code(&["census", "--input", "/nonexistent/datum.json"]), Some(1));

    let malformed = temp_file("bad.json", "{ not json");
    assert_eq!(code(&["census", "--input", malformed.to_str().unwrap()]), Some(1));
    std::fs::remove_file(malformed).ok();

    // iota = identity is not an involution
    let identity = temp_file("id.json", r#"{"group": {"cayley": [[0, 1], [1, 0]]}, "iota": 0}"#);
    assert_eq!(code(&["census", "--input", identity.to_str().unwrap()]), Some(2));
    std::fs::remove_file(identity).ok();

    // value outside [0, d]
    assert_eq!(code(&["analyze", "--builtin", "s3c2", "--f", "0,1,3"]), Some(2));
    // cap below (d+1)^t
    assert_eq!(code(&["enumerate", "--builtin", "s3c2", "--cap", "26"]), Some(2));
}
