use std::process::{Command, Output};

use genocchi::connect::genocchi_matrix;
use genocchi::format;
use genocchi::rational::{frac, int};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genocchi")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn sequences() {
    let out = run(&["sequence", "genocchi", "-n", "8"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 1 3 17 155 2073 38227 929569\n");
    assert_eq!(stdout(&run(&["sequence", "bernoulli", "--rows", "1", "--format", "csv"])), "1\n");
    assert_eq!(stdout(&run(&["sequence", "median-genocchi", "-n", "6"])), "1 1 2 8 56 608\n");
    let json = stdout(&run(&["sequence", "bernoulli", "-n", "3", "--format", "json"]));
    let (name, terms) = format::sequence_from_json(json.trim()).unwrap();
    assert_eq!(name, "bernoulli");
    assert_eq!(terms, vec![int(1), frac(-1, 2), frac(1, 6)]);
}

#[test]
fn sequence_default_length() {
    let out = stdout(&run(&["sequence", "tangent"]));
    assert_eq!(out.split_whitespace().count(), 10);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["sequence", "fibonacci"]).status.code(), Some(2));
    assert_eq!(run(&["sequence", "genocchi", "-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "stirling", "--kind", "third"]).status.code(), Some(2));
    assert_eq!(run(&["seidel", "euler"]).status.code(), Some(2));
    assert_eq!(run(&["at", "--seed", "squares"]).status.code(), Some(2));
    assert_eq!(run(&["at", "--weights", "stirling"]).status.code(), Some(2));
    let bad = run(&["verify", "9.99"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("4.16"));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn triangles() {
    let out = stdout(&run(&["triangle", "central-factorial", "-n", "7"]));
    let last: Vec<&str> = out.lines().last().unwrap().split_whitespace().collect();
    assert_eq!(last, ["0", "1", "341", "1408", "627", "55", "1"]);
    let first = stdout(&run(&["triangle", "legendre-stirling", "-n", "4", "--kind", "first"]));
    assert_eq!(first.lines().last().unwrap().split_whitespace().collect::<Vec<_>>(), ["0", "12", "-8", "1"]);
    let scaled = stdout(&run(&["triangle", "u-half-odd", "-n", "7", "--scale", "4", "--format", "csv"]));
    assert_eq!(scaled.lines().last().unwrap(), "1,66430,631631,273988,18447,286,1");
    assert_eq!(stdout(&run(&["triangle", "stirling"])).lines().count(), 8);
}

#[test]
fn triangle_json_round_trip() {
    let json = stdout(&run(&["triangle", "genocchi-matrix", "-n", "5", "--format", "json"]));
    let (name, m) = format::triangle_from_json(json.trim()).unwrap();
    assert_eq!(name, "genocchi-matrix");
    assert_eq!(m, genocchi_matrix(5).unwrap());
    let csv = stdout(&run(&["triangle", "genocchi-matrix", "-n", "5", "--format", "csv"]));
    assert_eq!(format::triangle_from_csv(&csv).unwrap(), m);
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "4.16", "--depth", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("PASS"));
    let all = run(&["verify", "all", "--depth", "8"]);
    assert_eq!(all.status.code(), Some(0));
    assert!(!stdout(&all).contains("FAIL"));
    let json = stdout(&run(&["verify", "4.17", "6.11", "--depth", "5", "--format", "json"]));
    assert!(json.contains("\"id\": \"4.17\"") && json.contains("\"pass\": true"));
}

#[test]
fn verify_output_is_in_catalog_order() {
    let out = stdout(&run(&["verify", "6.11", "2.1", "--depth", "3"]));
    let ids: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(ids, ["6.11", "2.1"]);
    let listed = stdout(&run(&["verify", "--list"]));
    assert!(listed.lines().next().unwrap().starts_with("1.10"));
}

#[test]
fn seidel_marks_diagonal() {
    let out = stdout(&run(&["seidel", "genocchi", "-n", "10"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[8].split_whitespace().collect::<Vec<_>>(), ["0", "17", "34", "48", "[56]"]);
    let ls = stdout(&run(&["seidel", "ls-from-T", "-k", "2", "-n", "9"]));
    assert_eq!(ls.lines().nth(6).unwrap().split_whitespace().collect::<Vec<_>>(), ["14", "11", "9", "[8]"]);
    let csv = stdout(&run(&["seidel", "v-from-U", "-k", "1", "-n", "7", "--format", "csv"]));
    assert_eq!(csv.lines().nth(4).unwrap(), "5/2,1,1/2");
}

#[test]
fn akiyama_tanigawa() {
    let out = stdout(&run(&["at", "--format", "csv"]));
    assert_eq!(out.lines().nth(3).unwrap(), "-17,-172,-729,-2096,-4825,-9612");
    let rec = stdout(&run(&["at", "--seed", "reciprocal", "-n", "2", "--cols", "2"]));
    assert_eq!(rec.lines().nth(1).unwrap().split_whitespace().collect::<Vec<_>>(), ["1/2", "2/3"]);
}
