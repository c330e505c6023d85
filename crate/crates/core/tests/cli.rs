//! End-to-end tests of the ntate binary: output shapes, exit codes,
//! and byte-level determinism.

use std::process::{Command, Output};

fn ntate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ntate"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn boundary_prints_divided_power() {
    let out = ntate(&["boundary", "--expr", "3*c^-2 + c"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3*b_1");
}

#[test]
fn boundary_json_shape() {
    let out = ntate(&["--json", "boundary", "--expr", "c^-3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["basis"], "divided");
    assert_eq!(v["coeffs"]["2"], "1");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ntate(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        ntate(&["boundary", "--expr", "3*)("]).status.code(),
        Some(2)
    );
    assert_eq!(
        ntate(&["planck", "--temp", "-5"]).status.code(),
        Some(2),
        "negative temperature is a domain error"
    );
}

#[test]
fn check_small_scale_passes() {
    let out = ntate(&["check", "--window", "4", "--order", "4"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("pass  exactness"));
    assert!(text.contains("pass  stefan-boltzmann"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn planck_csv_is_deterministic() {
    let a = ntate(&["planck", "--temp", "5772", "--units", "si", "--out", "csv"]);
    let b = ntate(&["planck", "--temp", "5772", "--units", "si", "--out", "csv"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    assert!(text.starts_with("nu_hz,spectral_radiance"));
    assert!(text.contains("integral,closed_form,relative_error"));
}

#[test]
fn config_file_is_honored() {
    let dir = std::env::temp_dir().join("ntate-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("constants.json");
    std::fs::write(
        &path,
        r#"{"h": 6.62607015e-34, "k_B": 1.380649e-23, "c_light": 2.99792458e8}"#,
    )
    .unwrap();
    let out = ntate(&[
        "--config",
        path.to_str().unwrap(),
        "check",
        "--window",
        "2",
        "--order",
        "2",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn pair_matches_closed_form() {
    // p = 1, φ = e^{-ε²}: value -√π e^{1/4}
    let out = ntate(&["pair", "--expr", "1"]);
    assert!(out.status.success());
    let v: f64 = String::from_utf8_lossy(&out.stdout).trim().parse().unwrap();
    let expect = -std::f64::consts::PI.sqrt() * (0.25f64).exp();
    assert!((v - expect).abs() < 1e-8, "{v} vs {expect}");
}

#[test]
fn polylog_value() {
    let out = ntate(&["--json", "polylog", "--s", "2", "--x", "0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let value = v["value"].as_f64().unwrap();
    assert!((value - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-10);
}
