mod common;

use std::fs;
use std::path::PathBuf;

use common::{keynes, scenario_path};
use keynes_core::io::parse_csv;

fn example() -> String {
    scenario_path("example.toml").to_string_lossy().into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("cli-{}-{name}", std::process::id()))
}

fn stderr(out: &std::process::Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Asserts a failing run with the given exit code and a single-line
/// `error[CODE]: ...` diagnostic.
fn assert_failure(out: &std::process::Output, exit: i32, code: &str) {
    let err = stderr(out);
    assert_eq!(out.status.code(), Some(exit), "stderr: {err}");
    assert!(err.starts_with(&format!("error[{code}]: ")), "stderr: {err}");
    assert_eq!(err.trim_end().lines().count(), 1, "stderr: {err}");
}

fn write_variant(name: &str, from: &str, to: &str) -> PathBuf {
    let text = fs::read_to_string(scenario_path("liquidity_trap.toml")).unwrap();
    assert!(text.contains(from));
    let path = scratch(name);
    fs::write(&path, text.replace(from, to)).unwrap();
    path
}

#[test]
fn equilibrium_report_succeeds() {
    let out = keynes(&["equilibrium", &example()]);
    assert!(out.status.success(), "{}", stderr(&out));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("converged") && l.ends_with("true")));
    assert!(text.lines().any(|l| l.starts_with("at_full_employment") && l.ends_with("false")));
}

#[test]
fn equilibrium_csv_has_unit_headers() {
    let out = keynes(&["equilibrium", &example(), "--csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(!text.contains('\r'));
    assert!(text.starts_with("Y* (wage units),N* (employment units),r* (rate),I* (wage units),converged (flag)\n"));
    let table = parse_csv(&text).unwrap();
    assert_eq!(table.len(), 1);
}

#[test]
fn missing_scenario_is_an_input_error() {
    let out = keynes(&["equilibrium", "/nonexistent/scenario.toml"]);
    assert_failure(&out, 2, "E_IO");
}

#[test]
fn malformed_scenario_is_a_parse_error() {
    let path = write_variant("malformed.toml", "mpc = 0.75", "mpc = \"three quarters\"");
    let out = keynes(&["equilibrium", path.to_str().unwrap()]);
    assert_failure(&out, 2, "E_PARSE");
    assert!(stderr(&out).contains("line "));
}

#[test]
fn unknown_key_is_rejected() {
    let path = write_variant("unknown.toml", "mpc = 0.75", "mpc = 0.75\nmarginal = 0.2");
    assert_failure(&keynes(&["equilibrium", path.to_str().unwrap()]), 2, "E_PARSE");
}

#[test]
fn propensity_above_one_names_the_law() {
    let path = write_variant("mpc.toml", "mpc = 0.75", "mpc = 1.05");
    let out = keynes(&["equilibrium", path.to_str().unwrap()]);
    assert_failure(&out, 2, "E_VALIDATION");
    assert!(stderr(&out).contains("fundamental psychological law"));
}

#[test]
fn iteration_limit_reports_partial_result() {
    let out = keynes(&["--max-iter", "3", "equilibrium", &example()]);
    assert_failure(&out, 3, "E_NOT_CONVERGED");
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.starts_with("converged") && l.ends_with("false")));
}

#[test]
fn policy_needs_exactly_one_shock() {
    assert_failure(&keynes(&["policy", &example()]), 2, "E_USAGE");
    assert_failure(
        &keynes(&["policy", &example(), "--fiscal", "1", "--monetary", "1"]),
        2,
        "E_USAGE",
    );
    let out = keynes(&["policy", &example(), "--monetary", "-10"]);
    assert!(out.status.success(), "{}", stderr(&out));
}

#[test]
fn capped_multiplier_is_a_solver_failure() {
    let out = keynes(&["multiplier", &example(), "--i1", "20", "--i2", "500"]);
    assert_failure(&out, 3, "E_FULL_EMPLOYMENT");
}

#[test]
fn sweep_marks_failed_points_and_continues() {
    let out = keynes(&[
        "sweep",
        &example(),
        "--param",
        "economy.money_supply",
        "--from",
        "1",
        "--to",
        "150",
        "--steps",
        "4",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let table = parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(table.len(), 4);
    let status = table.values("status").unwrap();
    assert_eq!(status, vec![3.0, 0.0, 0.0, 0.0]);
    // the failed point has no solution values
    assert_eq!(table.column("Y*").unwrap()[0], None);
}

#[test]
fn sweep_rejects_unknown_parameter() {
    let out = keynes(&["sweep", &example(), "--param", "economy.nope", "--from", "1", "--to", "2", "--steps", "2"]);
    assert_failure(&out, 2, "E_VALIDATION");
}

#[test]
fn out_flag_writes_file_instead_of_stdout() {
    let path = scratch("eq.csv");
    let out = keynes(&["--out", path.to_str().unwrap(), "equilibrium", &example(), "--csv"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let direct = keynes(&["equilibrium", &example(), "--csv"]);
    assert_eq!(fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn fig3_writes_expansion_path() {
    let path = scratch("fig3-path.csv");
    let out = keynes(&[
        "curves",
        &example(),
        "--figure",
        "fig3",
        "--steps",
        "11",
        "--path-out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let curves = parse_csv(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(curves.len(), 11);
    let rounds = parse_csv(&fs::read_to_string(&path).unwrap()).unwrap();
    assert!(rounds.len() > 2);
}

#[test]
fn unknown_figure_is_rejected() {
    assert_failure(&keynes(&["curves", &example(), "--figure", "fig9"]), 2, "E_VALIDATION");
}
