use std::path::Path;
use std::process::{Command, Output};

use fivesplit::{families, io, EdgeSet, MultiGraph};

fn fivesplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fivesplit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn graph_file(dir: &Path, name: &str, g: &MultiGraph) -> String {
    write(dir, name, &io::write_graph(g, EdgeSet::EMPTY, EdgeSet::EMPTY))
}

#[test]
fn psi_of_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let tri = write(dir.path(), "triangle.g", "3 3\n1 0 1\n2 1 2\n3 2 0\n");
    let o = fivesplit(&["psi", &tri]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1 + x2 + x3\n");
}

#[test]
fn k5_does_not_split() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = graph_file(dir.path(), "k5.g", &families::k5());
    let o = fivesplit(&["split-check", &k5]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.starts_with("splits: false\nnon-split configuration: "), "{text}");
    let o = fivesplit(&["--format", "json", "split-check", &k5]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["configuration"].as_array().unwrap().len(), 5);
}

#[test]
fn protections_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = io::write_graph(&families::complete(4), EdgeSet::from_iter([1, 2, 3, 4, 5]), EdgeSet::from_iter([1, 2, 3, 4, 5]));
    let path = write(dir.path(), "k4-1.g", &k4);
    assert_eq!(fivesplit(&["split-check", &path]).status.code(), Some(1));
    let o = fivesplit(&["split-check", &path, "--config", "0,1,2,3,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witness: "));
}

#[test]
fn width_of_k4() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = graph_file(dir.path(), "k4.g", &families::complete(4));
    let o = fivesplit(&["width", &k4]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    assert!(lines.next().unwrap().starts_with("ordering: "));
}

#[test]
fn dodgson_and_five_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = graph_file(dir.path(), "k4.g", &families::complete(4));
    let o = fivesplit(&["dodgson", &k4, "--i", "0,1", "--j", "2,3", "--method", "trees"]);
    assert_eq!(o.status.code(), Some(0));
    let o = fivesplit(&["five-invariant", &k4, "--edges", "0,1,2,3,4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fivesplit(&["five-invariant", &k4, "--edges", "0,1,2"]).status.code(), Some(2));
}

#[test]
fn minor_check() {
    let dir = tempfile::tempdir().unwrap();
    let cube = graph_file(dir.path(), "cube.g", &families::cube());
    let k4 = graph_file(dir.path(), "k4.g", &families::complete(4));
    let o = fivesplit(&["minor-check", &cube, "--f0"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "F0 minor: C\n"));
    assert_eq!(fivesplit(&["minor-check", &k4, "--f0"]).status.code(), Some(1));
    assert_eq!(fivesplit(&["minor-check", &cube, "--pattern", &k4]).status.code(), Some(0));
}

#[test]
fn errors_exit_two() {
    let missing = fivesplit(&["psi", "/nonexistent/graph.g"]);
    assert_eq!(missing.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&missing.stderr).starts_with("error: "));
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.g", "2 1\n0 0\n");
    assert_eq!(fivesplit(&["psi", &bad]).status.code(), Some(2));
    assert_eq!(fivesplit(&["search-minimal", "--max-edges", "13"]).status.code(), Some(2));
    assert_eq!(fivesplit(&["width"]).status.code(), Some(2));
}

#[test]
fn search_is_deterministic_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let out1 = dir.path().join("a.tsv");
    let out2 = dir.path().join("b.tsv");
    let ckpt = dir.path().join("ckpt");
    let o = fivesplit(&["search-minimal", "--max-edges", "9", "--out", out1.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("(25 enhanced)"));
    let o = fivesplit(&[
        "search-minimal",
        "--max-edges",
        "9",
        "--jobs",
        "2",
        "--checkpoint",
        ckpt.to_str().unwrap(),
        "--out",
        out2.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(std::fs::read(&out1).unwrap(), std::fs::read(&out2).unwrap());
    let o = fivesplit(&["verify-catalog", out1.to_str().unwrap(), "--max-edges", "9"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "catalog matches\n"));
    let o = fivesplit(&["verify-catalog", out1.to_str().unwrap(), "--max-edges", "8"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("omission: "));
}

#[test]
fn golden_catalog_verifies() {
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/data/catalog.tsv");
    let o = fivesplit(&["--format", "json", "verify-catalog", golden]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["matches"], true);
}
