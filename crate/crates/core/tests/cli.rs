//! Runs the `crosscycle` binary end to end.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crosscycle")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_config(dir: &TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

/// Circle center against the ellipse `x² + 2y²`: only the origin solves the
/// crossing system.
const NO_CYCLES: &str = r#"{"schema": 1, "explicit": {
    "center": {"integral": "x^2 + y^2", "field": ["-y", "x"]},
    "saddle": {"integral": "x^2 + 2*y^2", "field": ["-4*y", "2*x"]}}}"#;

#[test]
fn solve_prints_the_csv_table() {
    let out = run(&["solve", "--example", "N2", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<_> = text.lines().collect();
    assert_eq!(lines[0], "k,x,y,residual_PL,residual_Pi,jacobian_det,simple,verified,closure_residual");
    assert_eq!(lines.len(), 5);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        &["solve", "--example", "N31", "--format", "json"][..],
        &["verify", "--example", "N41", "--format", "csv"],
        &["reproduce", "--all", "--format", "json"],
    ] {
        let (a, b) = (run(args), run(args));
        assert_eq!(code(&a), 0, "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn verify_writes_file_and_svg() {
    let dir = TempDir::new().unwrap();
    let csv = dir.path().join("n1.csv");
    let svg = dir.path().join("n1.svg");
    let out = run(&[
        "verify",
        "--example",
        "N1",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
        "--zoom",
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let table = fs::read_to_string(&csv).unwrap();
    assert_eq!(table.lines().filter(|l| l.contains(",true,true,")).count(), 4, "{table}");
    // two panels, each with the four cycles and the switching line
    assert_eq!(fs::read_to_string(&svg).unwrap().matches("<polyline").count(), 10);
}

#[test]
fn config_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let zero_omega = write_config(
        &dir,
        "omega.json",
        r#"{"schema": 1, "center": {"a": 0, "b": 0, "c": 0, "omega": 0, "sign": 1},
            "saddle": {"family": "N1", "params": {"a": 1, "b": "-4/5"}}}"#,
    );
    let unknown = write_config(&dir, "unknown.json", r#"{"schema": 1, "example": "N1", "colour": "red"}"#);
    for args in [
        vec!["solve", "--config", zero_omega.as_str()],
        vec!["solve", "--config", unknown.as_str()],
        vec!["solve", "--config", "/nonexistent/config.json"],
        vec!["solve", "--example", "N7"],
        vec!["solve"],
    ] {
        let out = run(&args);
        assert_eq!(code(&out), 2, "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = run(&["solve", "--config", unknown.as_str()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn common_component_is_a_solver_degeneracy() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        &dir,
        "same.json",
        r#"{"schema": 1, "explicit": {
            "center": {"integral": "x^2 + y^2", "field": ["-y", "x"]},
            "saddle": {"integral": "2*x^2 + 2*y^2", "field": ["-4*y", "4*x"]}}}"#,
    );
    assert_eq!(code(&run(&["solve", "--config", &cfg])), 3);
}

#[test]
fn failed_closure_exits_with_five() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "strict.json", r#"{"schema": 1, "example": "N2", "closure_tol": "1e-30"}"#);
    let out = run(&["verify", "--config", &cfg]);
    assert_eq!(code(&out), 5, "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn no_solutions_is_success_without_svg() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(&dir, "none.json", NO_CYCLES);
    let svg = dir.path().join("none.svg");
    let solve = run(&["solve", "--config", &cfg, "--format", "csv"]);
    assert_eq!(code(&solve), 0);
    assert_eq!(stdout(&solve).lines().count(), 1);
    for cmd in ["verify", "render"] {
        let out = run(&[cmd, "--config", &cfg, "--svg", svg.to_str().unwrap()]);
        assert_eq!(code(&out), 0, "{cmd}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!Path::new(&svg).exists(), "{cmd} wrote an SVG");
    }
}

#[test]
fn check_appendix_reports_each_family() {
    let dir = TempDir::new().unwrap();
    let json = dir.path().join("appendix.json");
    let out = run(&["check-appendix", "--all", "--draws", "5", "--out", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let reports: serde_json::Value = serde_json::from_str(&fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(reports.as_array().unwrap().len(), 10);
}

#[test]
fn reproduce_writes_one_svg_per_example() {
    let dir = TempDir::new().unwrap();
    let out = run(&["reproduce", "--example", "N51", "--example", "N62", "--svg", dir.path().to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    assert!(stdout(&out).contains("8/8 pairs matched"));
    assert!(dir.path().join("N51.svg").exists() && dir.path().join("N62.svg").exists());
}
