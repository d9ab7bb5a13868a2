use std::process::{Command, Output};

use luminous_cli::wire::{CriterionJson, DetJson, SolveReportJson, SweepJson};

fn luminous(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_luminous"))
        .args(args)
        .env_remove("LUMINOUS_SIZE_LIMIT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn matrix_dumps_match_golden_files() {
    for (rows, cols, file) in [("5", "2", "a_5x2.txt"), ("2", "5", "a_2x5.txt"), ("1", "1", "a_1x1.txt")] {
        for field in ["int", "gf2"] {
            let o = luminous(&["matrix", "--rows", rows, "--cols", cols, "--field", field]);
            assert!(o.status.success());
            assert_eq!(stdout(&o), golden(file), "{rows}x{cols} {field}");
        }
    }
}

#[test]
fn matrix_json_format() {
    let o = luminous(&["matrix", "--rows", "1", "--cols", "2", "--format", "json"]);
    assert_eq!(stdout(&o).trim(), r#"{"rows":1,"cols":2,"field":"int","matrix":[[1,1],[1,1]]}"#);
}

#[test]
fn det_subcommand() {
    let o = luminous(&["det", "--rows", "2", "--cols", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let d: DetJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(d.bareiss.as_deref(), Some("5"));
    assert!((d.float.unwrap() - 5.0).abs() < 1e-9);

    let o = luminous(&["det", "--rows", "2", "--cols", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let d: DetJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(d.exact_zero);
    assert_eq!(d.bareiss.as_deref(), Some("0"));

    // beyond the exact cap the bareiss field is null
    let o = luminous(&["det", "--rows", "20", "--cols", "20"]);
    let d: DetJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(d.bareiss.is_none());
}

#[test]
fn singular_subcommand() {
    let o = luminous(&["singular", "--rows", "5", "--cols", "5"]);
    assert_eq!(o.status.code(), Some(3));
    let c: CriterionJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(c.singular);
    assert_eq!(c.conditions, vec!["C1", "C2"]);

    let o = luminous(&["singular", "--rows", "3", "--cols", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), r#"{"m":3,"n":3,"singular":false,"conditions":[]}"#);
}

#[test]
fn solve_subcommand() {
    let o = luminous(&["solve", "--rows", "2", "--cols", "5", "--config", "0101001010"]);
    assert_eq!(o.status.code(), Some(0));
    let r: SolveReportJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.minimal.unwrap().buttons, vec![3, 8]);
    assert!(r.solutions.is_none());

    let o = luminous(&["solve", "--rows", "2", "--cols", "5", "--config", "1000000000"]);
    assert_eq!(o.status.code(), Some(3));
    let r: SolveReportJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.solvable);
    assert_eq!(r.solution_count, "0");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["solve", "--rows", "2", "--cols", "5", "--config", "01010"][..],
        &["solve", "--rows", "2", "--cols", "5", "--config", "01010010a0"],
        &["solve", "--rows", "2", "--cols", "5"],
        &["matrix", "--rows", "0", "--cols", "5"],
        &["matrix", "--rows", "65", "--cols", "5"],
        &["det", "--rows", "x", "--cols", "5"],
        &["frobnicate"],
    ] {
        let o = luminous(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn size_limit_env_override() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_luminous"))
            .args(["singular", "--rows", "2", "--cols", "3"])
            .env("LUMINOUS_SIZE_LIMIT", limit)
            .output()
            .unwrap()
    };
    assert_eq!(run("bogus").status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_luminous"))
        .args(["matrix", "--rows", "70", "--cols", "1", "--field", "gf2"])
        .env("LUMINOUS_SIZE_LIMIT", "80")
        .output()
        .unwrap();
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 70);
    let o = Command::new(env!("CARGO_BIN_EXE_luminous"))
        .args(["board", "--rows", "3", "--cols", "3"])
        .env("LUMINOUS_SIZE_LIMIT", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn board_is_reproducible() {
    let a = luminous(&["board", "--rows", "4", "--cols", "6", "--seed", "99"]);
    let b = luminous(&["board", "--rows", "4", "--cols", "6", "--seed", "99"]);
    assert_eq!(a.stdout, b.stdout);
    let text = luminous(&["board", "--rows", "4", "--cols", "6", "--seed", "99", "--format", "text"]);
    assert_eq!(stdout(&text).lines().count(), 4);
}

#[test]
fn sweep_small() {
    let o = luminous(&["sweep", "--max", "6"]);
    assert!(o.status.success());
    let s: SweepJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(s.table.len(), 36);
    assert!(s.violations.is_empty());
    assert!(s.parity_mismatches.is_empty());
}
