//! End-to-end tests of the `trigbasis` binary: flag handling, exit codes,
//! output schemas, and the file/stdout split.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trigbasis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn grid_subcommand_lists_nodes() {
    let csv = stdout_of(&["grid", "--grid", "0", "--n", "9"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("j,t"));
    assert_eq!(lines.next(), Some("1,0.0000000000000000e0"));
    let second = lines.next().unwrap();
    assert!(second.starts_with("2,6.98131700797731"), "{second}");
    assert_eq!(csv.lines().count(), 10);
}

#[test]
fn rejects_even_grid_size_with_one_line_diagnostic() {
    let out = run(&["grid", "--grid", "0", "--n", "8"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("odd"), "{err}");
}

#[test]
fn rejects_ls_basis_without_budget() {
    let out = run(&[
        "fit", "--grid", "0", "--n", "9", "--basis", "ls-poly", "--func", "mix",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("--q"), "{err}");
}

#[test]
fn rejects_budget_above_harmonic_order() {
    let out = run(&[
        "fit", "--grid", "0", "--n", "9", "--basis", "ls-poly", "--q", "5", "--func", "mix",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("q = 5"), "{err}");
}

#[test]
fn rejects_unknown_function_name() {
    let out = run(&[
        "fit", "--grid", "0", "--n", "9", "--basis", "interp-poly", "--func", "bogus",
    ]);
    assert!(!out.status.success());
}

#[test]
fn basis_csv_has_requested_columns() {
    let csv = stdout_of(&[
        "basis", "--grid", "0", "--n", "9", "--basis", "interp-poly", "--indices", "1,3,5",
        "--points", "19",
    ]);
    assert!(csv.starts_with("t,b_1,b_3,b_5\n"));
    assert_eq!(csv.lines().count(), 20);
}

#[test]
fn json_output_mirrors_csv_columns() {
    let json = stdout_of(&[
        "basis", "--grid", "1", "--n", "9", "--basis", "ls-poly", "--q", "2", "--indices", "5",
        "--points", "19", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["t"].as_array().unwrap().len(), 19);
    assert_eq!(v["b_5"].as_array().unwrap().len(), 19);
}

#[test]
fn out_flag_writes_data_and_frees_stdout_for_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fit.csv");
    let out = run(&[
        "fit", "--grid", "0", "--n", "9", "--basis", "interp-poly", "--func", "sin2", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let report = String::from_utf8(out.stdout).unwrap();
    assert!(report.contains("node_sse = "), "{report}");
    let data = std::fs::read_to_string(&path).unwrap();
    assert!(data.starts_with("t,f,approx\n"));

    // same config straight to stdout produces the same bytes
    let direct = stdout_of(&[
        "fit", "--grid", "0", "--n", "9", "--basis", "interp-poly", "--func", "sin2",
    ]);
    assert_eq!(data, direct);
}

#[test]
fn identical_configs_are_byte_identical() {
    let args = [
        "basis", "--grid", "0", "--n", "9", "--basis", "interp-spline", "--r", "2", "--trunc",
        "200", "--indices", "5", "--points", "181",
    ];
    let a = stdout_of(&args);
    let b = stdout_of(&args);
    assert_eq!(a, b);
}

#[test]
fn gram_report_goes_to_stderr() {
    let out = run(&[
        "gram", "--grid", "0", "--n", "9", "--basis", "interp-poly", "--kind", "discrete",
    ]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("max_off_diagonal = "), "{err}");
    let data = String::from_utf8(out.stdout).unwrap();
    assert!(data.starts_with("i,j,value\n"));
    assert_eq!(data.lines().count(), 82);
}

#[test]
fn fit_summary_reports_coefficients_for_ls() {
    let out = run(&[
        "fit", "--grid", "1", "--n", "9", "--basis", "ls-poly", "--q", "2", "--func", "square",
    ]);
    assert!(out.status.success());
    let report = String::from_utf8(out.stderr).unwrap();
    assert!(report.contains("a0 = "));
    assert!(report.contains("b_2 = "));
    assert!(!report.contains("b_3 = "), "only q harmonics reported");
}
