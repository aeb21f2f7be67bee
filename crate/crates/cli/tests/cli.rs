use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const ACCEPTANCE_4X4: &str = "100,1,100,100\n1,1,1,100\n100,1,1,100\n100,100,1,100\n";

fn gridmark(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gridmark"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn solve_two_by_two() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "a.csv", "# 2 2\n1,1\n1,1\n");
    let out = gridmark(&["solve", s(&inst)]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["cost"], "2");
    assert_eq!(doc["category"], "card2");
    assert_eq!(doc["vertices"], serde_json::json!([[1, 1], [1, 2]]));
}

#[test]
fn solve_acceptance_instance_with_svg() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "a.csv", ACCEPTANCE_4X4);
    let svg = dir.path().join("a.svg");
    let out = gridmark(&["solve", s(&inst), "--json", "--emit-svg", s(&svg)]);
    assert!(out.status.success());
    let doc = json(&out);
    assert_eq!(doc["cost"], "4");
    assert_eq!(doc["category"], "zigzag");
    let figure = std::fs::read_to_string(svg).unwrap();
    assert_eq!(figure.matches("<polyline").count(), 2);
}

#[test]
fn report_keeps_the_winner() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "a.csv", ACCEPTANCE_4X4);
    let plain = json(&gridmark(&["solve", s(&inst)]));
    let mut report = json(&gridmark(&["solve", s(&inst), "--report"]));
    assert_eq!(report["report"]["card2"]["cardinality"], 2);
    assert_eq!(report["report"]["zigzag"]["cost"], "4");
    report.as_object_mut().unwrap().remove("report");
    assert_eq!(report, plain);
}

#[test]
fn csv_output() {
    let dir = TempDir::new().unwrap();
    let inst = file(
        &dir,
        "a.json",
        r#"{"m":4,"n":4,"costs":[[100,1,100,100],[1,1,1,100],[100,1,1,100],[100,100,1,100]]}"#,
    );
    let out = gridmark(&["solve", s(&inst), "--csv-out"]);
    assert_eq!(stdout(&out), "1,2\n2,1\n2,3\n4,3\n");
}

#[test]
fn verify_reports_a_counterexample() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "g.csv", &"1,1,1,1,1,1,1\n".repeat(5));
    let set = file(&dir, "s.json", "[[1,3],[5,3]]");
    let out = gridmark(&["verify", s(&inst), s(&set)]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("not a landmark set; pair (1,2),(1,4)\n"));

    let set = file(&dir, "t.json", r#"{"vertices": [[1,1],[1,7]]}"#);
    let out = gridmark(&["verify", s(&inst), s(&set)]);
    assert_eq!(stdout(&out), "landmark set; minimal\ncost 2\n");

    let set = file(&dir, "u.json", "[[1,1],[1,7],[3,3]]");
    assert!(
        stdout(&gridmark(&["verify", s(&inst), s(&set)])).starts_with("landmark set; not minimal")
    );

    let set = file(&dir, "v.json", "[[6,1]]");
    assert_eq!(
        gridmark(&["verify", s(&inst), s(&set)]).status.code(),
        Some(2)
    );
}

#[test]
fn brute_agrees_with_solve() {
    let dir = TempDir::new().unwrap();
    for seed in 0..8 {
        let out = gridmark(&[
            "gen",
            "--m",
            "4",
            "--n",
            "5",
            "--max-cost",
            "9",
            "--seed",
            &seed.to_string(),
        ]);
        let inst = file(&dir, &format!("g{seed}.csv"), &stdout(&out));
        let a = json(&gridmark(&["solve", s(&inst)]));
        let b = json(&gridmark(&["brute", s(&inst)]));
        assert_eq!(a["cost"], b["cost"], "seed {seed}");
    }
}

#[test]
fn gen_is_reproducible() {
    let args = [
        "gen",
        "--m",
        "7",
        "--n",
        "9",
        "--max-cost",
        "50",
        "--seed",
        "17",
    ];
    let a = gridmark(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, gridmark(&args).stdout);
    assert!(stdout(&a).starts_with("# 7 9\n"));

    let dir = TempDir::new().unwrap();
    let path = dir.path().join("g.csv");
    gridmark(&[
        "gen",
        "--m",
        "7",
        "--n",
        "9",
        "--max-cost",
        "50",
        "--seed",
        "17",
        "-o",
        s(&path),
    ]);
    assert_eq!(std::fs::read(path).unwrap(), a.stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let big = file(&dir, "big.csv", &"1,1,1,1,1,1\n".repeat(6));
    assert_eq!(gridmark(&["brute", s(&big)]).status.code(), Some(4));
    let thin = file(&dir, "thin.csv", "1,2,3\n");
    assert_eq!(gridmark(&["solve", s(&thin)]).status.code(), Some(3));
    let bad = file(&dir, "bad.csv", "1,2\n3,x\n");
    let out = gridmark(&["solve", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 3"));
    let negative = file(&dir, "neg.csv", "1,2\n3,-1\n");
    assert_eq!(gridmark(&["solve", s(&negative)]).status.code(), Some(2));
    assert_eq!(
        gridmark(&["solve", "/nonexistent/x.csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn thread_setting() {
    let dir = TempDir::new().unwrap();
    let inst = file(&dir, "a.csv", ACCEPTANCE_4X4);
    let out = Command::new(env!("CARGO_BIN_EXE_gridmark"))
        .args(["solve", s(&inst)])
        .env("GRIDMARK_THREADS", "1")
        .output()
        .unwrap();
    assert!(out.status.success());
    let out = Command::new(env!("CARGO_BIN_EXE_gridmark"))
        .args(["solve", s(&inst)])
        .env("GRIDMARK_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_prints_an_exponent() {
    let out = gridmark(&["bench", "--sizes", "20,40,80"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("scaling exponent"));
}
