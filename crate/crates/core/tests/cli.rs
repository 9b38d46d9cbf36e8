use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;
use steiner_core::tree::parse_tree;

fn steiner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_steiner")).args(args).output().unwrap()
}

fn tree_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn record(out: &Output) -> Value {
    let text = String::from_utf8(out.stdout.clone()).unwrap();
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

const PATH4: &str = "# path 0-1-2-3\n4\n0 1\n1 2\n2 3\n";
const STAR5: &str = "5\n0 1\n0 2\n0 3\n0 4\n";

#[test]
fn dist_on_path() {
    let f = tree_file(PATH4);
    let out = steiner(&["dist", "--tree", f.path().to_str().unwrap(), "--set", "0,3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = record(&out);
    assert_eq!(r["cmd"], "dist");
    assert_eq!(r["result"]["value"], "3");
    assert_eq!(r["input"]["set"], serde_json::json!([0, 3]));
    assert_eq!(r["input"]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn wiener_on_star() {
    let f = tree_file(STAR5);
    let out = steiner(&["wiener", "--tree", f.path().to_str().unwrap(), "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(record(&out)["result"]["value"], "24");
}

#[test]
fn vertex_index_all_vertices() {
    let f = tree_file(STAR5);
    let p = f.path().to_str().unwrap();
    let out = steiner(&["vertex-index", "--tree", p, "--k", "3", "--all-vertices"]);
    let r = record(&out);
    assert_eq!(r["result"]["values"], serde_json::json!(["12", "15", "15", "15", "15"]));
    assert_eq!(r["result"]["argmin"], serde_json::json!([0]));
    let out = steiner(&["vertex-index", "--tree", p, "--k", "3", "--v", "1", "--mode", "leaf"]);
    assert_eq!(record(&out)["result"]["value"], "15");
}

#[test]
fn median_record() {
    let f = tree_file(PATH4);
    let out = steiner(&["median", "--tree", f.path().to_str().unwrap(), "--k", "2"]);
    let r = record(&out);
    assert_eq!(r["result"]["median_all"], serde_json::json!([1, 2]));
    assert_eq!(r["result"]["median_leaf"], serde_json::json!([0, 1, 2, 3]));
    assert_eq!(r["result"]["gap_bounds"]["leaf_internal"]["holds"], true);
}

#[test]
fn comet_round_trip() {
    let out = steiner(&["comet", "--n", "6", "--r", "3"]);
    let r = record(&out);
    let edges: Vec<(usize, usize)> = r["result"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap() as usize, e[1].as_u64().unwrap() as usize))
        .collect();
    let raw = steiner(&["comet", "--n", "6", "--r", "3", "--edge-list"]);
    let parsed = parse_tree(&String::from_utf8(raw.stdout).unwrap()).unwrap();
    let mut a = edges.clone();
    let mut b = parsed.edges().to_vec();
    a.sort_unstable();
    b.sort_unstable();
    assert_eq!(a, b);
}

#[test]
fn bounds_and_closed_forms() {
    let r = record(&steiner(&["bounds", "internal-pair", "--n", "6", "--k", "2"]));
    assert_eq!(r["result"]["value"], "4/3");
    let r = record(&steiner(&["bounds", "leaf-centroid", "--n", "5", "--k", "4"]));
    assert_eq!(r["result"]["value"], "15/14");
    let r = record(&steiner(&["bounds", "global-local", "--n", "5", "--k", "3"]));
    assert_eq!(r["result"]["upper"]["value"], "2/1");
    assert_eq!(r["result"]["lower"]["value"], "5/3");
    let r = record(&steiner(&["closed-form", "pendant", "--a", "2", "--b", "2", "--k", "3"]));
    assert_eq!(r["result"]["value"], "26");
}

#[test]
fn input_errors_exit_one() {
    let f = tree_file("4\n0 1\n1 2\n2 0\n");
    let out = steiner(&["wiener", "--tree", f.path().to_str().unwrap(), "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let f = tree_file(PATH4);
    let out = steiner(&["wiener", "--tree", f.path().to_str().unwrap(), "--k", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let out = steiner(&["verify", "--nmax", "20"]);
    assert_eq!(out.status.code(), Some(1));
    let out = steiner(&["verify", "--nmax", "5", "--checks", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    let out = steiner(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_writes_deterministic_report() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    let run = |p: &std::path::Path| steiner(&["verify", "--nmax", "7", "--checks", "concavity_all,leaf_pair_ratio", "--report", p.to_str().unwrap()]);
    let (x, y) = (run(&a), run(&b));
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let report: Value = serde_json::from_slice(&std::fs::read(&a).unwrap()).unwrap();
    let witness = report["checks"][1]["tightness"]
        .as_array()
        .unwrap()
        .iter()
        .find(|w| w["n"] == 5 && w["k"] == 3)
        .unwrap();
    assert_eq!(witness["value"], "18/17");
    assert_eq!(String::from_utf8(x.stdout).unwrap().lines().count(), 2);
}

#[test]
fn verify_exits_two_on_violation() {
    let out = steiner(&["verify", "--nmax", "6", "--checks", "gap_leaf_internal", "--k", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
