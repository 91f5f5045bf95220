use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakajima-fock"))
        .args(args)
        .env_remove("NAKAJIMA_FOCK_CAP")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn schubert_rank_four_has_fifteen_cases() {
    let v = json(&["verify-schubert", "--rank", "4", "--format", "json"]);
    assert_eq!(v["summary"]["total"], 15);
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn json_output_is_deterministic() {
    let args = ["verify-pairing", "--rank", "1..3", "--pairing", "2", "--order", "6", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn csv_has_a_header_row() {
    let out = run(&["solve-constants", "--rank", "2", "--pairing", "3", "--order", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("suite,id,identity,expected,observed,pass,status"));
    // four constants plus the q-independence row
    assert_eq!(lines.count(), 5);
}

#[test]
fn solved_constants_are_reported() {
    let v = json(&["solve-constants", "--rank", "3", "--pairing", "1", "--order", "3", "--format", "json"]);
    let expected: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["id"].as_str().unwrap().contains("/n="))
        .map(|c| c["observed"].as_str().unwrap())
        .collect();
    assert_eq!(expected, ["3", "-6", "9"]);
}

#[test]
fn zero_pairing_is_a_degenerate_pass() {
    let v = json(&["verify-commutators", "--rank", "1", "--pairing", "0", "--degree-cap", "5", "--format", "json"]);
    let statuses: Vec<&str> = v["cases"].as_array().unwrap().iter().map(|c| c["status"].as_str().unwrap()).collect();
    assert!(statuses.iter().all(|s| *s == "degenerate-pass"));
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("nakajima-fock-cli-{}.txt", std::process::id()));
    let out = run(&["verify-numerology", "--rank", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("== numerology"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["verify-genfun", "--order", "ten"]).status.code(), Some(2));
    assert_eq!(run(&["verify-everything"]).status.code(), Some(2));
    assert_eq!(run(&["verify-genfun", "--format", "yaml"]).status.code(), Some(2));
}

#[test]
fn out_of_range_requests_exit_with_three() {
    assert_eq!(run(&["verify-genfun", "--order", "0"]).status.code(), Some(3));
    assert_eq!(run(&["verify-genfun", "--order", "25"]).status.code(), Some(3));
    assert_eq!(run(&["verify-schubert", "--rank", "9"]).status.code(), Some(3));
    assert_eq!(run(&["solve-constants", "--pairing", "0"]).status.code(), Some(3));
}

#[test]
fn cap_can_be_raised_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_nakajima-fock"))
        .args(["verify-pairing", "--rank", "1", "--pairing", "1", "--order", "22"])
        .env("NAKAJIMA_FOCK_CAP", "30")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
}
