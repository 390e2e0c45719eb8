use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_charpoly"))
        .args(args)
        .env_remove("CHARPOLY_WORKERS")
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn temp_file(name: &str, text: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("charpoly-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn k4_star_tree_is_reflexive() {
    let v = json(&["reflexive", "--graph", "k4", "--tree", "3,4,5"]);
    assert_eq!(v[0]["reflexive"], Value::Bool(true));
    assert_eq!(v[0]["vertex_count"], 15);
}

#[test]
fn k4_path_tree_has_one_bad_vertex() {
    let v = json(&["reflexive", "--graph", "k4", "--tree", "1,3,5"]);
    assert_eq!(v[0]["reflexive"], Value::Bool(false));
    assert_eq!(v[0]["vertex_count"], 16);
    let bad = v[0]["non_lattice_vertices"].as_array().unwrap();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0], serde_json::json!(["1", "1", "1", "-2", "1", "1"]));
}

#[test]
fn all_trees_of_k4() {
    let v = json(&["reflexive", "--graph", "k4", "--tree", "all"]);
    assert_eq!(v.as_array().unwrap().len(), 16);
}

#[test]
fn dumbbell_vertices_table() {
    let out = run(&["vertices", "--graph", "dumbbell", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "5 vertices");
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[3].split_whitespace().collect::<Vec<_>>(),
        ["-2", "-2", "-2", "-2", "4"]
    );
}

#[test]
fn dumbbell_lattice_points_of_p() {
    let v = json(&["lattice-points", "--graph", "dumbbell", "--polytope", "P"]);
    assert_eq!(v["count"], 5);
}

#[test]
fn build_q_lists_labelled_rows() {
    let v = json(&["build", "--graph", "dumbbell"]);
    assert_eq!(v["dim"], 3);
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);
}

#[test]
fn classify_genus_three_table() {
    let out = run(&["classify", "--genus", "3", "--format", "table"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    let reflexive = rows
        .iter()
        .filter(|r| r.split_whitespace().nth(2) == Some("yes"))
        .count();
    assert_eq!(reflexive, 3);
}

#[test]
fn classify_output_does_not_depend_on_workers() {
    let one = run(&[
        "classify",
        "--genus",
        "3",
        "--idp",
        "--k-max",
        "2",
        "--workers",
        "1",
    ]);
    let many = run(&[
        "classify",
        "--genus",
        "3",
        "--idp",
        "--k-max",
        "2",
        "--workers",
        "4",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
    let env = Command::new(env!("CARGO_BIN_EXE_charpoly"))
        .args(["classify", "--genus", "3", "--idp", "--k-max", "2"])
        .env("CHARPOLY_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, one.stdout);
}

#[test]
fn timing_is_opt_in() {
    let plain = json(&["classify", "--genus", "2"]);
    assert!(plain[0].get("elapsed_ms").is_none());
    let timed = json(&["classify", "--genus", "2", "--timing"]);
    assert!(timed[0].get("elapsed_ms").is_some());
}

#[test]
fn idp_on_the_dumbbell() {
    let v = json(&["idp", "--graph", "dumbbell", "--k-max", "3"]);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(v["indeterminate"].is_null());
}

#[test]
fn tiny_point_cap_is_indeterminate() {
    let v = json(&["idp", "--graph", "star3", "--point-cap", "3"]);
    assert!(v["indeterminate"].is_string());
}

#[test]
fn rays_of_the_dumbbell() {
    let v = json(&["rays", "--graph", "dumbbell"]);
    assert_eq!(v["anticanonical"].as_array().unwrap().len(), 5);
}

#[test]
fn verify_paper_passes() {
    let out = run(&["verify-paper", "--format", "table"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().all(|l| l.starts_with("[PASS]")));
}

#[test]
fn broken_loop_convention_fails_verification() {
    let out = run(&[
        "verify-paper",
        "--loop-convention",
        "omit",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("[FAIL] dumbbell vertex matrix"));
}

#[test]
fn graph_files_and_tree_polytopes() {
    let lt = temp_file(
        "lt.txt",
        "vertices 2\nedge 0 0\nedge 1 1\nedge 0 1\ntree 2\n",
    );
    let v = json(&["reflexive", "--graph", lt.to_str().unwrap()]);
    assert_eq!(v[0]["reflexive"], Value::Bool(true));

    let star = temp_file("star.txt", "vertices 4\nedge 0 1\nedge 0 2\nedge 0 3\n");
    let bounded = json(&[
        "vertices",
        "--graph",
        star.to_str().unwrap(),
        "--polytope",
        "delta",
    ]);
    assert!(bounded["rays"].as_array().unwrap().is_empty());
    // triangle rows at the centre already force every coordinate up from 0
    let implied = json(&[
        "vertices",
        "--graph",
        star.to_str().unwrap(),
        "--polytope",
        "delta",
        "--no-leaf-nonneg",
    ]);
    assert_eq!(implied["vertices"], bounded["vertices"]);
    let edge = temp_file("edge.txt", "vertices 2\nedge 0 1\n");
    let open = json(&[
        "vertices",
        "--graph",
        edge.to_str().unwrap(),
        "--polytope",
        "delta",
        "--no-leaf-nonneg",
    ]);
    assert!(!open["rays"].as_array().unwrap().is_empty());

    // the tree of a graph, taken from its loop-tree
    let via_graph = json(&["vertices", "--graph", "star3", "--polytope", "delta"]);
    assert_eq!(via_graph, bounded);
}

#[test]
fn output_flag_writes_the_artifact() {
    let path = std::env::temp_dir().join(format!("charpoly-cli-{}-out.json", std::process::id()));
    let out = run(&[
        "build",
        "--graph",
        "theta",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dim"], 3);
}

#[test]
fn usage_errors_exit_with_two_and_name_the_field() {
    let cases: [(&[&str], &str); 6] = [
        (&["reflexive", "--graph", "k4", "--tree", "0,x"], "--tree"),
        (&["reflexive", "--graph", "k4", "--tree", "0,1,2"], "--tree"),
        (&["reflexive", "--graph", "no-such-graph"], "--graph"),
        (&["reflexive"], "--graph"),
        (&["classify", "--genus", "9"], "--genus"),
        (&["idp", "--graph", "k4", "--point-cap", "0"], "--point-cap"),
    ];
    for (args, field) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(stderr(&out).contains(field), "{args:?}: {}", stderr(&out));
    }
    let bad = temp_file("bad.txt", "vertices 2\nedge 0 7\n");
    let out = run(&["build", "--graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--graph"));
    assert_eq!(run(&["build", "--polytope", "R"]).status.code(), Some(2));
}

#[test]
fn genus_five_needs_the_stretch_flag() {
    let out = run(&["classify", "--genus", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--stretch"));
}

#[test]
fn capped_lattice_points_are_indeterminate() {
    let v = json(&[
        "lattice-points",
        "--graph",
        "k4",
        "--polytope",
        "P",
        "--point-cap",
        "2",
    ]);
    assert!(v["count"].is_null());
    assert!(v["indeterminate"].is_string());
}
