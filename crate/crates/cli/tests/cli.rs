use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use antimagic::graph::Graph;

const C4O3_MATRIX: &str = "\
* * * 8 1 6 * * * 35 28 33
* * * 3 5 7 * * * 30 32 34
* * * 4 9 2 * * * 31 36 29
8 3 4 * * * 17 10 15 * * *
1 5 9 * * * 12 14 16 * * *
6 7 2 * * * 13 18 11 * * *
* * * 17 12 13 * * * 26 19 24
* * * 10 14 18 * * * 21 23 25
* * * 15 16 11 * * * 22 27 20
35 30 31 * * * 26 21 22 * * *
28 32 36 * * * 19 23 27 * * *
33 34 29 * * * 24 25 20 * * *
";

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_antimagic")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn gen_cycle() {
    let o = run(&["gen", "--family", "cycle", "--n", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{\"p\":4,\"edges\":[[0,1],[0,3],[1,2],[2,3]]}\n");
    let g = Graph::from_json(&stdout(&o)).unwrap();
    assert_eq!(g.size(), 4);
}

#[test]
fn gen_products_and_dot() {
    let o = run(&["gen", "--family", "cycle", "--n", "4", "--blowup", "3"]);
    assert_eq!(Graph::from_json(&stdout(&o)).unwrap().size(), 36);
    let o = run(&["gen", "--family", "torus", "--a", "4", "--b", "6"]);
    assert_eq!(Graph::from_json(&stdout(&o)).unwrap().regular_degree(), Some(4));
    let o = run(&["gen", "--family", "g_mn", "--m", "2", "--n", "2", "--copies", "2"]);
    assert_eq!(Graph::from_json(&stdout(&o)).unwrap().order(), 16);
    let o = run(&["gen", "--family", "wheel", "--n", "4", "--format", "dot"]);
    assert!(stdout(&o).starts_with("graph G {"));
}

#[test]
fn lex_block_matrix_is_byte_exact() {
    let base = data("cycle4-paperM.json");
    let o = run(&["label", "lex", "--base", base.to_str().unwrap(), "--n", "3", "--emit-matrix"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o), C4O3_MATRIX);
}

#[test]
fn matrix_output_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let base = data("cycle4-paperM.json");
    let o = run(&["label", "lex", "--base", base.to_str().unwrap(), "--n", "3", "--emit-matrix", "-o", path.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["verify", "--matrix", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["colors"], serde_json::json!([57, 111, 165]));
}

#[test]
fn tripartite_instances() {
    for (graph, parts, colors) in
        [("bowtie.json", "bowtie-parts.json", [6, 7, 16]), ("pentagon.json", "pentagon-parts.json", [5, 6, 8])]
    {
        let (g, p) = (data(graph), data(parts));
        let o = run(&["label", "tripartite", g.to_str().unwrap(), "--parts", p.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        let v = json(&o);
        assert_eq!(v["labeling"]["colors"], serde_json::json!(colors));
        assert_eq!(v["labeling"]["proper"], true);
    }
}

#[test]
fn label_round_trips_through_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c7.json");
    let o = run(&["label", "cycle", "--n", "7", "-o", out.to_str().unwrap()]);
    assert!(o.status.success());
    let o = run(&["verify", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(json(&o)["color_count"], 3);

    let comp = dir.path().join("c7c.json");
    run(&["label", "complement", out.to_str().unwrap(), "-o", comp.to_str().unwrap()]);
    let o = run(&["verify", comp.to_str().unwrap()]);
    assert!(o.status.success());
}

#[test]
fn verify_reports_improper_labelings() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.json");
    let f = dir.path().join("f.json");
    std::fs::write(&g, r#"{"p":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#).unwrap();
    std::fs::write(&f, r#"{"labels":[3,1,6,2,5,4]}"#).unwrap();
    let o = run(&["verify", g.to_str().unwrap(), "--labeling", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["violations"], serde_json::json!([[0, 1]]));
}

#[test]
fn malformed_input_reports_location() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.json");
    std::fs::write(&g, "{\"p\": 3,\n \"edges\": [[0, 1], [1]]}").unwrap();
    let o = run(&["solve", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    let o = run(&["solve", dir.path().join("missing.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "--family", "cycle"]).status.code(), Some(2));
    assert_eq!(run(&["magic", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn solve_and_oracle_agree() {
    let g = data("bowtie.json");
    let s = json(&run(&["solve", g.to_str().unwrap()]));
    let o = json(&run(&["solve", g.to_str().unwrap(), "--oracle"]));
    assert_eq!(s["chi_la"], 3);
    assert_eq!(s["status"], "exact");
    assert_eq!(o["chi_la"], 3);
    assert_eq!(o["permutations"], 720);
    assert_eq!(s["witness"]["labeling"]["proper"], true);
}

#[test]
fn budget_exhaustion_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("star.json");
    std::fs::write(&g, r#"{"p":7,"edges":[[0,1],[0,2],[0,3],[0,4],[0,5],[0,6]]}"#).unwrap();
    let o = run(&["solve", g.to_str().unwrap(), "--budget", "50"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["status"], "budget_exceeded");
    assert_eq!(v["chi_la"], serde_json::Value::Null);
    assert_eq!(v["upper_bound"], 7);
}

#[test]
fn magic_squares_and_blocks() {
    assert_eq!(stdout(&run(&["magic", "--n", "3"])), "8 1 6\n3 5 7\n4 9 2\n");
    assert_eq!(stdout(&run(&["magic", "--n", "3", "--block", "4", "--q", "4"])), "35 28 33\n30 32 34\n31 36 29\n");
}

#[test]
fn delete_extreme_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("c4.json");
    run(&["label", "cycle", "--n", "4", "-o", out.to_str().unwrap()]);
    let o = run(&["label", "delete-extreme", out.to_str().unwrap()]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["construction_failed"], false);
    assert_eq!(v["result"]["labeling"]["proper"], true);
    assert_eq!(v["result"]["graph"]["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn theorem_filter() {
    let o = run(&["theorems", "--filter", "thm2.6"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("12 passed, 0 failed"), "{text}");
    let o = run(&["theorems", "--filter", "solver/K13"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["theorems", "--filter", "nothing"]).status.code(), Some(2));
}
