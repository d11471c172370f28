use std::process::{Command, Output};

use serde_json::Value;

fn bmw(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bmw")).args(args).env_remove("BMW_MAX_N").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

const DELTA: &str = "(a^2*v^2 + v^4 - 1 - a^-2*v^2) / (v^4 - 1)";

#[test]
fn qdim_of_one_cell_is_the_loop_value() {
    let o = bmw(&["qdim", "-p", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), DELTA);
}

#[test]
fn qdim_specialized_json() {
    let o = bmw(&["qdim", "-p", "2,1", "--spec", "B:2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["spec"], "B:2");
    assert_eq!(v["closed_form_agrees"], true);
    assert_eq!(v["wen"], v["closed_form"]);
}

#[test]
fn qdim_both_forms_agree() {
    let o = bmw(&["qdim", "-p", "2", "--form", "both", "--json"]);
    let v = json_of(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["wen"], v["wenzltwo"]);
}

#[test]
fn kauffman_examples() {
    assert_eq!(stdout(&bmw(&["kauffman", "-n", "1", "-w", ""])), DELTA);
    // A single kink multiplies the unknot by α.
    let kink = stdout(&bmw(&["kauffman", "-n", "2", "-w", "e1"]));
    assert_eq!(kink, "(a^4*v^2 + a^2*v^4 - a^2 - v^2) / (v^4 - 1)");
    let a = bmw(&["kauffman", "-n", "2", "-w", "e1 e1 e1", "--json"]);
    let b = bmw(&["kauffman", "-n", "2", "-w", "e1 e1 e1", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_of(&a)["word"], "e1 e1 e1");
}

#[test]
fn verify_suites_pass() {
    let o = bmw(&["verify", "--suite", "relations", "--max-size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_of(&o)["passed"], true);
    let o = bmw(&["verify", "--suite", "brauer", "--N", "3", "--max-size", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let traces: Vec<String> =
        json_of(&o)["suites"][0]["values"].as_array().unwrap().iter().map(|v| v["trace"].as_str().unwrap().to_string()).collect();
    assert_eq!(traces, ["3", "5", "3", "7", "5", "5", "1"]);
}

#[test]
fn feasibility_reports_witness() {
    let o = bmw(&["feasibility", "-p", "2,1", "--spec", "root:8:3", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["passed"], false);
    assert_eq!(v["bullets"][0]["witness"], "[2] vanishes");
    let o = bmw(&["feasibility", "-p", "3,1"]);
    assert!(stdout(&o).ends_with("feasible"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["qdim", "-p", "x"][..],
        &["kauffman", "-n", "2", "-w", "e3"],
        &["verify", "--suite", "bogus"],
        &["frobnicate"],
        &["feasibility", "-p", "1", "--spec", "Q:1"],
    ] {
        assert_eq!(bmw(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn strand_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_bmw")).args(["units", "-n", "3"]).env("BMW_MAX_N", "2").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(bmw(&["kauffman", "-n", "6", "-w", ""]).status.code(), Some(2));
}

#[test]
fn units_and_idempotents() {
    let v = json_of(&bmw(&["units", "-n", "2", "--json"]));
    let units = v["levels"][2]["units"].as_object().unwrap();
    assert_eq!(units.keys().collect::<Vec<_>>(), ["1>0", "1>1,1", "1>2"]);
    let y = json_of(&bmw(&["idem", "-p", "2", "--json"]));
    let q = json_of(&bmw(&["idem", "--path", "1>2", "--json"]));
    assert_eq!(y["qtrace"], q["qtrace"]);
    assert_eq!(bmw(&["idem", "--path", "2>1"]).status.code(), Some(2));
}
