use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_regulus")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).expect("valid json");
    (v, out.status.code().unwrap())
}

#[test]
fn analyze_z12() {
    let (v, code) = json(&["analyze", "Z/12"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["reduced"], false);
    assert_eq!(v["vn_regular"], false);
    assert_eq!(v["spectrum"]["count"], 2);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 4);
}

#[test]
fn analyze_z6_has_witnesses() {
    let (v, _) = json(&["analyze", "Z/6"]);
    assert_eq!(v["vn_regular"], true);
    assert_eq!(v["idempotents"], serde_json::json!(["0", "1", "3", "4"]));
    assert_eq!(v["witness"].as_array().unwrap().len(), 6);
}

#[test]
fn hull_sizes() {
    let (v, code) = json(&["hull", "Z/360"]);
    assert_eq!(code, 0);
    assert_eq!(v["hull_card"], 30);
    assert_eq!(v["kernel"].as_array().unwrap().len(), 12);
    let (v, _) = json(&["hull", "Z/4"]);
    assert_eq!(v["hull"], "Z/2");
    assert!(v["checks"].as_object().unwrap().values().all(|b| b == true));
}

#[test]
fn bool_and_sheaf() {
    let (v, code) = json(&["bool", "Z/30"]);
    assert_eq!(code, 0);
    assert_eq!(v["card"], 8);
    assert_eq!(v["j_is_isomorphism"], true);
    let (v, code) = json(&["sheaf", "Z/12"]);
    assert_eq!(code, 0);
    assert_eq!(v["global_sections_card"], 6);
    assert_eq!(v["checks"]["global_sections_match_hull"], true);
}

#[test]
fn stone_examples() {
    let (v, _) = json(&["stone", "2^0"]);
    assert_eq!(v["stone_space"], serde_json::json!([]));
    assert_eq!(v["ring_card"], 1);
    let (v, _) = json(&["stone", "2^2", "--field", "GF(2)"]);
    assert_eq!(v["ring_card"], 4);
    let (v, _) = json(&["stone", "{x,y}", "--field", "GF(3)"]);
    assert_eq!(v["ring_card"], 9);
    assert_eq!(v["theta_is_isomorphism"], true);
}

#[test]
fn represent_projection() {
    let (v, code) = json(&["represent-hom", "2^2", "2^1", "atom-map{*:a}"]);
    assert_eq!(code, 0);
    assert_eq!(v["square_commutes"], true);
    assert_eq!(v["ring_hom"].as_array().unwrap().len(), 4);
    let dot = run(&["represent-hom", "2^2", "2^1", "atom-map{*:a}", "--format", "dot"]);
    assert!(String::from_utf8(dot.stdout).unwrap().starts_with("digraph"));
}

#[test]
fn check_suite_passes() {
    let (v, code) = json(&["check", "--suite", "all", "--max-card", "36"]);
    assert_eq!(code, 0);
    assert_eq!(v["failures"], 0);
    let (v, code) = json(&["check", "Z/9"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["vn_regular"], false);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["analyze", "Z/"]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "Z/6", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(run(&["stone", "2^2", "--field", "Z/4"]).status.code(), Some(2));
    assert_eq!(run(&["represent-hom", "2^1", "2^1", "atom-map{a:q}"]).status.code(), Some(2));
    assert_eq!(run(&["check"]).status.code(), Some(2));
    assert_eq!(run(&["hull", "Z/100000", "--max-card", "50"]).status.code(), Some(2));
}

#[test]
fn text_is_default() {
    let out = run(&["hull", "Z/4"]);
    let s = String::from_utf8(out.stdout).unwrap();
    assert!(s.starts_with("hull Z/4\n"));
    assert!(s.contains("hull: Z/2"));
}

#[test]
fn small_examples() {
    let (v, _) = json(&["analyze", "GF(4)"]);
    assert_eq!(v["vn_regular"], true);
    assert_eq!(v["spectrum"]["count"], 1);
    let (v, _) = json(&["hull", "Z/6"]);
    assert_eq!(v["eta_is_isomorphism"], true);
    let (v, code) = json(&["check", "Z/1"]);
    assert_eq!(code, 0);
    assert_eq!(v["failures"], 0);
}

#[test]
fn json_is_deterministic() {
    for args in [["sheaf", "Z/30"], ["bool", "Z/2 x GF(4)"]] {
        let a = run(&[args[0], args[1], "--format", "json"]).stdout;
        let b = run(&[args[0], args[1], "--format", "json"]).stdout;
        assert_eq!(a, b);
    }
}
