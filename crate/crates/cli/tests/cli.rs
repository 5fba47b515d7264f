use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbwdegen")).args(args).current_dir(dir).output().expect("binary runs")
}

fn json(args: &[&str], dir: &Path) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = run(&full, dir);
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap(), v)
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn weights_check_reports_membership() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "zero.json", r#"{"n": 3, "a": {"1,2": 0, "1,3": 0, "2,3": 0}}"#);
    let (code, v) = json(&["weights", "check", "--file", "zero.json"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["member"], true);
    assert_eq!(v["result"]["interior"], false);

    write(dir.path(), "out.txt", "0 0\n5\n");
    let (code, v) = json(&["weights", "check", "--file", "out.txt"], dir.path());
    assert_eq!(code, 1);
    assert_eq!(v["result"]["member"], false);
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "broken.json", "{\"n\": 3, \"a\": ");
    assert_eq!(run(&["weights", "check", "--file", "broken.json"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["weights", "check", "--file", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"], dir.path()).status.code(), Some(2));
    write(dir.path(), "a.txt", "1 1 1 1\n1 1 1\n1 1\n1\n");
    let out = run(&["ideal", "check-quadratic", "--weights", "a.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2), "n = 5 needs --allow-large");
}

#[test]
fn suite_at_small_scale_passes() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = json(&["suite", "--n", "3", "--jobs", "2"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"].as_array().unwrap().len(), 13);
    assert!(v["manifest"]["verdicts"].as_object().unwrap().values().all(|x| x == true));
}

#[test]
fn witness_for_a_point_outside_the_cone() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "bad.json", r#"{"1": 0, "2": 0, "3": "1", "1,2": 0, "1,3": 0, "2,3": "1"}"#);
    let (code, v) = json(&["trop", "witness", "--point", "bad.json"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["violation"], "[iv] i=1");
    assert_eq!(v["result"]["initial"].as_array().unwrap().len(), 1);
    let (code, v) = json(&["trop", "check", "--point", "bad.json", "--degree-bound", "2"], dir.path());
    assert_eq!(code, 1);
    assert_eq!(v["result"]["no_monomial_found"], false);
}

#[test]
fn map_then_check_stays_in_the_cone() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "toric.txt", "2 0\n0\n");
    let (code, v) = json(&["trop", "map", "--weights", "toric.txt"], dir.path());
    assert_eq!(code, 0);
    write(dir.path(), "point.json", &v["result"].to_string());
    let (code, v) = json(&["trop", "check", "--point", "point.json"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["cone_member"], true);
    assert_eq!(v["result"]["no_monomial_found"], true);
}

#[test]
fn generated_relations_pass_the_substitution_check() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = json(&["ideal", "gen", "--n", "4"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["count"], 10);
    write(dir.path(), "rels.json", &v["result"].to_string());
    let (code, v) = json(&["rep", "psi-check", "--relations", "rels.json"], dir.path());
    assert_eq!(code, 0);
    assert!(v["result"].as_array().unwrap().iter().all(|r| r["vanishes"] == true));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "ab.txt", "1 1 1\n1 1\n1\n");
    let args = ["ideal", "initial", "--weights", "ab.txt", "--mu", "1,1,0"];
    let (c1, a) = json(&args, dir.path());
    let (c2, b) = json(&args, dir.path());
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["manifest"]["verdicts"], b["manifest"]["verdicts"]);
    assert_eq!(a["manifest"]["inputs"], b["manifest"]["inputs"]);
}

#[test]
fn face_degeneration_checks_the_face_order() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "zero.txt", "0 0\n0\n");
    write(dir.path(), "ab.txt", "1 1\n1\n");
    let (code, _) = json(&["ideal", "check-face-degeneration", "--weights", "zero.txt", "--weights-b", "ab.txt", "--degree-bound", "2"], dir.path());
    assert_eq!(code, 0);
    let out = run(&["ideal", "check-face-degeneration", "--weights", "ab.txt", "--weights-b", "zero.txt"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tableau_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "y.json", r#"{"shape": [1, 1], "columns": [[3, 2], [3]]}"#);
    let (code, v) = json(&["tableaux", "tau", "--tableau", "y.json"], dir.path());
    assert_eq!(code, 0);
    write(dir.path(), "t.json", &v["result"].to_string());
    let (code, v) = json(&["tableaux", "zeta", "--pattern", "t.json", "--lambda", "1,1"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["columns"], serde_json::json!([[3, 2], [3]]));
    let (code, _) = json(&["tableaux", "round-trip", "--lambda", "1,1,1"], dir.path());
    assert_eq!(code, 0);
}

#[test]
fn representation_commands() {
    let dir = tempfile::tempdir().unwrap();
    write(dir.path(), "toric.txt", "2 0\n0\n");
    let (code, v) = json(&["rep", "dim", "--weights", "toric.txt", "--lambda", "1,1"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 8);
    assert_eq!(json(&["rep", "fflv-check", "--weights", "toric.txt", "--lambda", "1,1"], dir.path()).0, 0);
    assert_eq!(json(&["rep", "annihilator-check", "--weights", "toric.txt", "--lambda", "1,1"], dir.path()).0, 0);
    let (code, v) = json(&["fflv", "count", "--lambda", "1,0,1"], dir.path());
    assert_eq!(code, 0);
    assert_eq!(v["result"]["patterns"], 15);
}
