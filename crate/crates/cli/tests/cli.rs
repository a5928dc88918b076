use std::fs;
use std::process::{Command, Output};

use polyweyl_cli::report::{
    GrassmannReport, GrowthReport, MeasureReport, RepCheckReport, SchwarzReport, SpectrumReport, StateReport,
    TruncateReport,
};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyweyl"))
        .args(args)
        .env_remove("POLYWEYL_TAIL_TOL")
        .env_remove("POLYWEYL_MAX_TERMS")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Parses the JSON into `T` and checks that re-serializing reproduces it byte for byte.
fn round_trip<T: Serialize + DeserializeOwned>(json: &str) -> T {
    let report: T = serde_json::from_str(json).expect("report parses");
    let again = serde_json::to_string_pretty(&report).unwrap() + "\n";
    assert_eq!(again, json);
    report
}

#[test]
fn spectrum_finite_case() {
    let report: SpectrumReport = round_trip(&ok(&["spectrum", "--kappa", "-1/3", "--nmax", "6"]));
    assert_eq!(report.params.dimension, Some(4));
    assert_eq!(report.rows.len(), 7);
    assert_eq!(report.rows[4].f, "0");
    assert_eq!(report.rows[2].f, "4/3");
    assert_eq!(report.rows[3].g, "-1");
}

#[test]
fn spectrum_csv() {
    let csv = ok(&["spectrum", "--kappa", "-1/3", "--nmax", "6", "--format", "csv"]);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,f,f_value,g,g_value");
    assert_eq!(lines[5], "4,0,0.0,-5/3,-1.6666666666666667");
}

#[test]
fn bg_state_report() {
    let report: StateReport =
        round_trip(&ok(&["cs-bg", "--kappa", "1/2", "--z", "1+0.5i", "--phi", "0.3", "--normalize"]));
    assert!(report.normalized);
    assert!((report.norm - 1.0).abs() < 1e-12);
    assert!(report.eigen_residual.unwrap() < 1e-10);
    let n = report.normalization.unwrap();
    assert!((report.coeffs[0].modulus - 1.0 / n).abs() < 1e-12);
}

#[test]
fn perelomov_reports_exponential_agreement() {
    let report: StateReport =
        round_trip(&ok(&["cs-perelomov", "--kappa", "-1/5,1/2", "--z", "0.7-1.2i", "--phi", "1.1"]));
    assert_eq!(report.terms, 6);
    assert!(report.exponential_deviation.unwrap() < 1e-10);
}

#[test]
fn growth_matches_closed_form() {
    let report: GrowthReport = round_trip(&ok(&["bargmann-growth", "--ell", "1,1", "--nmax", "5000"]));
    assert!((report.rho.unwrap() - 2.0 / 3.0).abs() < 1e-15);
    assert!((report.sigma.unwrap() - 1.5).abs() < 1e-15);
    assert!(report.rho_rel_error.unwrap() < 0.05 && report.sigma_rel_error.unwrap() < 0.10);
    let csv = ok(&["bargmann-growth", "--ell", "1,1", "--nmax", "300", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("n,log_modulus"));
    assert_eq!(csv.lines().count(), 302);
}

#[test]
fn growth_without_closed_form() {
    let report: GrowthReport = round_trip(&ok(&["bargmann-growth", "--kappa", "2/3", "--nmax", "2000"]));
    assert_eq!(report.rho, None);
    assert!(report.rho_hat > 0.9 && report.rho_hat < 1.1, "{}", report.rho_hat);
}

#[test]
fn remaining_commands_round_trip() {
    let rep: RepCheckReport = round_trip(&ok(&["rep-check", "--kappa", "-1/4,2", "--phi", "0.5"]));
    assert_eq!(rep.nilpotent, Some(true));
    assert!(rep.commutator_deviation < 1e-12 && rep.raise_lower_deviation < 1e-12);

    let rep: RepCheckReport = round_trip(&ok(&["rep-check", "--ell", "3", "--window", "20"]));
    assert_eq!(rep.nilpotent, None);
    assert_eq!(rep.rows.last().unwrap().expected_commutator, None);

    let t: TruncateReport = round_trip(&ok(&["truncate", "--ell", "2", "--s", "4", "--window", "7"]));
    assert!(t.commutator_deviation < 1e-12);

    let g: GrassmannReport = round_trip(&ok(&["cs-grassmann", "--kappa", "-1/3", "--phi", "0.2", "--z", "1"]));
    assert_eq!(g.dim, 4);
    assert!(g.eigen_residual < 1e-12);
    assert!(g.substitution.unwrap().residual > 1e-3);

    let m: MeasureReport = round_trip(&ok(&["measure", "--ell", "1", "--kind", "bg", "--levels", "8"]));
    assert_eq!(m.moments[3].exact, "36");
    assert!(m.identity_deviation < 1e-8);

    let s: SchwarzReport = round_trip(&ok(&["schwarz", "--ell", "2", "--f", "1,i,-0.5", "--radius", "2.5"]));
    assert!(s.max_excess <= 1e-10);
    assert_eq!(s.points.len(), 1 + 8 * 16);
}

#[test]
fn output_is_deterministic() {
    let args = ["schwarz", "--ell", "1,3", "--phi", "-0.4", "--f", "0.3,0.2i,1"];
    assert_eq!(ok(&args), ok(&args));
    let args = ["measure", "--kappa", "-1/6", "--kind", "perelomov", "--format", "csv"];
    assert_eq!(ok(&args), ok(&args));
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["cs-perelomov", "--kappa", "1/2,1/3", "--z", "0.1"][..],
        &["cs-perelomov", "--kappa", "1/4", "--z", "2"],
        &["cs-bg", "--kappa", "-1/3", "--z", "1"],
        &["spectrum", "--kappa", "-0.5"],
        &["spectrum", "--kappa", "-2/3"],
        &["bargmann-growth", "--kappa", "-1/3"],
        &["spectrum"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty());
    }
    let err = String::from_utf8(run(&["cs-perelomov", "--kappa", "1/2,1/3", "--z", "0.1"]).stderr).unwrap();
    assert!(err.contains("requires r = 1"), "{err}");
    let err = String::from_utf8(run(&["cs-bg", "--kappa", "-1/3", "--z", "1"]).stderr).unwrap();
    assert!(err.contains("finite dimension"), "{err}");
}

#[test]
fn io_errors_exit_two() {
    let out = run(&["spectrum", "--ell", "1", "--config", "/nonexistent/polyweyl.conf"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["spectrum", "--ell", "1", "--output", "/nonexistent/dir/out.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let conf = dir.path().join("run.conf");
    fs::write(&conf, "# shared settings\nkappa = -1/3\nnmax = 3\nnormalize = true\nz = 1+i\n").unwrap();
    let conf = conf.to_str().unwrap();

    let report: SpectrumReport = round_trip(&ok(&["spectrum", "--config", conf]));
    assert_eq!(report.rows.len(), 4);
    let report: SpectrumReport = round_trip(&ok(&["spectrum", "--config", conf, "--nmax", "5"]));
    assert_eq!(report.rows.len(), 6);

    let out = dir.path().join("state.json");
    ok(&["cs-perelomov", "--config", conf, "--output", out.to_str().unwrap()]);
    let state: StateReport = round_trip(&fs::read_to_string(&out).unwrap());
    assert!(state.normalized);
    assert_eq!((state.z.re, state.z.im), (1.0, 1.0));

    fs::write(dir.path().join("bad.conf"), "colour = blue\n").unwrap();
    let bad = run(&["spectrum", "--ell", "1", "--config", dir.path().join("bad.conf").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn precision_knobs_from_environment() {
    let loose = Command::new(env!("CARGO_BIN_EXE_polyweyl"))
        .args(["cs-bg", "--ell", "1", "--z", "2"])
        .env("POLYWEYL_TAIL_TOL", "1e-4")
        .output()
        .unwrap();
    let loose: StateReport = serde_json::from_slice(&loose.stdout).unwrap();
    let tight: StateReport = serde_json::from_str(&ok(&["cs-bg", "--ell", "1", "--z", "2"])).unwrap();
    assert!(loose.terms < tight.terms);
    assert!(loose.tail_bound.unwrap() <= 1e-4);
}

#[test]
fn help_exits_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["cs-bg", "--help"]).status.code(), Some(0));
}
