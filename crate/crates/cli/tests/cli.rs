use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qcgirth")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn girth_of_catalog_entry() {
    let o = run(&["girth", "@h2-g8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("girth 12"));
}

#[test]
fn nmin_reports_vanishing_sum() {
    let o = run(&["nmin", "@h3-g8", "--girth", "12"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("NoN: vanishing cycle sum over Z"));
}

#[test]
fn structures_without_all_one() {
    let o = run(&["structures", "@ex35g14"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no 2x3 all-one"));
}

#[test]
fn constructed_file_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.qc");
    let p = path.to_str().unwrap();
    let o = run(&["construct", "--nc", "3", "--nv", "4", "--girth", "8", "--out", p]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["check", p, "--girth", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["girth", p]);
    assert!(stdout(&o).contains("girth"));
}

#[test]
fn expand_writes_alist() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.alist");
    let o = run(&["expand", "@cyclic-7", "--alist", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("21 14\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["girth", "/nonexistent/file.qc"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.qc");
    std::fs::write(&bad, "7 1 2\n0\n").unwrap();
    assert_eq!(run(&["girth", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["check", "@h2-g4", "--girth", "12"]).status.code(), Some(1));
}

#[test]
fn distance_of_small_code() {
    let o = run(&["distance", "@sum-2by3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("distance 48"));
}
