use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typegraph")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn decompose_examples() {
    assert!(stdout(&["decompose", "--type", "1121112121212222"]).contains("11 211121 212122 22"));
    assert!(stdout(&["decompose", "--type", "12132"]).contains("factors: 12 | 132; b*=3"));
    assert!(stdout(&["decompose", "--type", "3"]).contains("trivial; blocks: 3; b=1"));
    let secondary = stdout(&["decompose", "--type", "2331"]);
    assert!(secondary.contains("2331: secondary; blocks: 2 3 3 1; b=4"), "{secondary}");
}

#[test]
fn build_examples() {
    let g = stdout(&["build", "typegraph", "--n", "4", "--type", "132"]);
    assert!(g.lines().any(|l| l == "p edge 6 4"));
    assert_eq!(g.lines().filter(|l| l.starts_with("e ")).count(), 4);
    let v = json(&["build", "gb", "--b", "2", "--n", "2", "--format", "json"]);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    assert_eq!(v["edges"].as_array().unwrap().len(), 0);
    let k3 = stdout(&["build", "typegraph", "--n", "3", "--type", "12"]);
    assert!(k3.contains("p edge 3 3"));
}

#[test]
fn color_examples() {
    let v = json(&["color", "typegraph", "--n", "16", "--type", "132"]);
    assert_eq!(v["proper"], true);
    assert!(v["palette_size"].as_u64().unwrap() <= 7);
    let v = json(&["color", "gb", "--b", "1", "--n", "5"]);
    assert_eq!(v["palette_size"], 5);
    let v = json(&["color", "typegraph", "--n", "8", "--type", "12132"]);
    assert_eq!(v["proper"], true);
    let v = json(&["color", "shift", "--n", "17"]);
    assert_eq!(v["palette_size"], 5);
}

#[test]
fn verify_hom_examples() {
    for args in [
        ["verify-hom", "lower", "--type", "132", "--n", "6"],
        ["verify-hom", "upper", "--type", "132", "--n", "8"],
        ["verify-hom", "reducible", "--type", "12132", "--n", "5"],
        ["verify-hom", "project", "--type", "12132", "--n", "6"],
    ] {
        let v = json(&args);
        assert_eq!(v["violations"].as_array().unwrap().len(), 0, "{args:?}");
        assert!(v["edges_checked"].as_u64().unwrap() > 0);
    }
}

#[test]
fn chi_reports_json() {
    let v = json(&["chi", "typegraph", "--type", "132", "--n", "8"]);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["colors"].as_array().unwrap().len(), 28);
    assert!(v.get("nodes_explored").is_some() && v.get("elapsed_ms").is_some());
    let v = json(&["chi", "gb", "--b", "1", "--n", "4"]);
    assert_eq!(v["chi"], 4);
}

#[test]
fn table_examples() {
    let csv = stdout(&["table", "--type", "132", "--n", "2..20"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("type,n,paper_colors,chi_exact,greedy"));
    for (line, n) in lines.zip(2u64..) {
        let cols: Vec<&str> = line.split(',').collect();
        let log = 64 - (n - 1).leading_zeros();
        assert_eq!(cols[1], n.to_string());
        assert_eq!(cols[3], log.to_string(), "{line}");
    }
    let csv = stdout(&["table", "--type", "12", "--n", "2..8"]);
    for line in csv.lines().skip(1) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[1], cols[3]);
    }
    let seeded = stdout(&["table", "--type", "132", "--n", "9", "--seed", "7"]);
    assert_eq!(seeded, stdout(&["table", "--type", "132", "--n", "9", "--seed", "7"]));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.col");
    let out = run(&["build", "typegraph", "--n", "5", "--type", "132", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("p edge 10 10"));
}

#[test]
fn exit_codes() {
    // validation errors
    assert_eq!(run(&["decompose", "--type", "1213"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "--type", "14"]).status.code(), Some(2));
    assert_eq!(run(&["build", "typegraph", "--n", "1", "--type", "132"]).status.code(), Some(2));
    assert_eq!(run(&["build", "gb", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["build", "typegraph", "--n", "4", "--type", "132", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["table", "--type", "132", "--n", "9..2"]).status.code(), Some(2));
    assert_eq!(run(&["verify-hom", "lower", "--type", "1212", "--n", "4"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    // budget exhausted
    let out = run(&["chi", "typegraph", "--type", "1122", "--n", "12", "--budget-nodes", "1"]);
    assert_eq!(out.status.code(), Some(0), "clique bound equals the heuristic here");
    let out = run(&["chi", "gb", "--b", "2", "--n", "16", "--budget-nodes", "10"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("<= chi <="));
}

#[test]
fn identical_inputs_give_identical_outputs() {
    let args = ["color", "typegraph", "--n", "9", "--type", "13332"];
    assert_eq!(stdout(&args), stdout(&args));
}
