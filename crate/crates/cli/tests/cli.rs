//! Runs the built binary and checks output and exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn arlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arlab")).args(args).output().unwrap()
}

fn arlab_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_arlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn stars_union_forces_the_matching() {
    let o = arlab(&["verify", "stars-union", "--k", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("FORCES M3, 6 edges"), "{}", stdout(&o));
}

#[test]
fn small_exact_values() {
    let o = arlab(&["compute", "ar-ff", "--pattern", "M2"]);
    assert_eq!((code(&o), stdout(&o).trim()), (0, "3"));
    let o = arlab(&["--json", "compute", "ar-s", "--pattern", "M2"]);
    assert_eq!(code(&o), 0);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["value"]["value"], 3);
}

#[test]
fn tiny_budget_gives_an_interval_and_exit_2() {
    let o = arlab(&["compute", "ar-s", "--pattern", "M3", "--max-nodes", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains('?'), "{}", stdout(&o));
}

#[test]
fn refuted_host_reports_refuted() {
    let o = arlab(&["compute", "forces", "--pattern", "K4", "--host", "K6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("REFUTED"));
}

#[test]
fn first_fit_on_cliques_is_violated() {
    assert_eq!(code(&arlab(&["verify", "kn-ff", "--n", "6"])), 1);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&arlab(&["frob"])), 64);
    assert_eq!(code(&arlab(&["compute", "ar-s", "--pattern", "Q3"])), 64);
    assert_eq!(code(&arlab(&["verify", "cycle-chain", "--k", "3"])), 64);
    assert_eq!(code(&arlab(&["compute", "ar-s", "--pattern", "M2", "--time-limit", "-1"])), 64);
    assert_eq!(code(&arlab(&["--help"])), 0);
}

#[test]
fn bounds_flag_violated_values() {
    let o = arlab(&["bounds", "--pattern", "M2", "--value", "AR_FF=9"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("violation:"));
    let o = arlab(&["bounds", "--pattern", "M2", "--value", "AR_FF=3", "--value", "AR_s=3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(!stdout(&o).contains("violation:"));
}

#[test]
fn convert_round_trips() {
    let g6 = stdout(&arlab(&["convert", "P4", "--to", "g6"]));
    let json = stdout(&arlab(&["convert", g6.trim(), "--to", "json"]));
    let back = stdout(&arlab(&["convert", json.trim(), "--to", "key"]));
    let direct = stdout(&arlab(&["convert", "P4", "--to", "key"]));
    assert_eq!(back, direct);
    let piped = arlab_with_input(&["convert", "-", "--to", "key"], &json);
    assert_eq!(stdout(&piped), direct);
}

#[test]
fn table_json_has_a_row_per_pattern() {
    let o = arlab(&["--json", "table", "--k-max", "3", "--n-max", "4"]);
    assert_eq!(code(&o), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(rows.as_array().unwrap().len() >= 8);
}

#[test]
fn seeded_play_is_deterministic() {
    let args = ["--json", "play", "--pattern", "C4", "--painter", "random", "--seed", "7"];
    let a = arlab(&args);
    let b = arlab(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(stdout(&a), stdout(&b));
    let last = stdout(&a).lines().last().unwrap().to_string();
    let summary: serde_json::Value = serde_json::from_str(&last).unwrap();
    assert_eq!(summary["summary"]["result"], true);
}

#[test]
fn cycle_builder_refuses_other_patterns() {
    assert_eq!(code(&arlab(&["play", "--pattern", "P3", "--builder", "cycle-ff"])), 64);
}

#[test]
fn human_painter_is_reprompted_on_a_clash() {
    // Generic builder for M2 opens with two disjoint edges, then joins them.
    let o = arlab_with_input(&["play", "--pattern", "M2", "--role", "painter"], "1\nx\n1\n2\n3\n4\n");
    let out = stdout(&o);
    assert!(out.contains("rejected:"), "{out}");
    assert!(out.contains("WON M2"), "{out}");
    assert_eq!(code(&o), 0);
}

#[test]
fn human_builder_illegal_edge_is_rejected() {
    let o = arlab_with_input(&["play", "--pattern", "M2", "--role", "builder"], "new new\n0 0\n5 new\nnew new\n0 new\n");
    let out = stdout(&o);
    assert_eq!(out.matches("rejected:").count(), 2, "{out}");
    assert!(out.contains("WON M2"), "{out}");
}

#[test]
fn human_quit_stops_cleanly() {
    let o = arlab_with_input(&["play", "--pattern", "M3", "--role", "builder"], "new new\nquit\n");
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("STOPPED at the prompt after 1 edges"));
}
