use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_inplace-graph"))
}

fn write_graph(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("inplace-graph-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn g1() -> PathBuf {
    write_graph("g1.txt", "H 4 4 0 0\nE 1 2\nE 1 3\nE 2 3\nE 3 4\n")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn lex_dfs_prints_order() {
    let g = g1();
    let o = run(&["traverse", "--algo", "lex-dfs", "--model", "rotate", "--space", "trits", "--source", "1", "--input", g.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1 2 3 4"));
}

#[test]
fn bfs_check_and_stats() {
    let g = g1();
    let o = run(&["traverse", "--algo", "bfs", "--space", "log", "--source", "1", "--check", "--stats", "--target", "4", "--input", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("CHECK ok"));
    assert!(out.contains("TARGET 4 reachable=true distance=2"));
    let stats = out.lines().find_map(|l| l.strip_prefix("STATS ")).unwrap();
    let v: serde_json::Value = serde_json::from_str(stats).unwrap();
    assert!(v["stats"]["peak_workspace_bits"].as_u64().unwrap() <= v["stats"]["budget_bits"].as_u64().unwrap());
    assert_eq!(v["levels"], serde_json::json!([0, 1, 1, 2]));
}

#[test]
fn usage_errors_exit_1() {
    let g = g1();
    let o = run(&["traverse", "--algo", "bfs", "--space", "log", "--input", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["traverse", "--algo", "lex-dfs", "--space", "log", "--source", "1", "--input", g.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--model rotate --space trits"));
    let bad = write_graph("bad.txt", "H 2 1 0 0\nE 1 1\n");
    let o = run(&["traverse", "--algo", "dfs", "--space", "linear", "--source", "1", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn gen_is_deterministic() {
    let a = run(&["gen", "--n", "16", "--min-degree", "3", "--seed", "7"]);
    let b = run(&["gen", "--n", "16", "--min-degree", "3", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).starts_with("H 16 "));
}

#[test]
fn generated_input_is_deterministic() {
    let args = ["traverse", "--algo", "dfs", "--space", "log", "--source", "1", "--seed", "5", "--n", "20", "--check"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, run(&args).stdout);
}

#[test]
fn subset_and_mst() {
    let c4 = write_graph("c4.txt", "H 4 4 0 0\nE 1 2\nE 2 3\nE 3 4\nE 4 1\n");
    let o = run(&["subset", "--problem", "vertex-cover", "--check", "--input", c4.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SIZE 2"));
    let w = write_graph("w.txt", "H 4 5 0 1\nE 1 2 3\nE 2 3 1\nE 3 4 4\nE 4 1 2\nE 1 3 5\n");
    let o = run(&["mst", "--check", "--model", "implicit-array", "--input", w.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("TOTAL 6"));
}

#[test]
fn bench_prints_rows() {
    let o = run(&["bench", "--algo", "dfs", "--space", "log", "--family", "path", "--sizes", "64,128,256"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().nth(1).unwrap().trim_start().starts_with("64"));
}
