//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use ntate::checks::*;
use ntate::divided::DividedPower;
use ntate::formal::{bernoulli, c_from_b_check, one_form_check};
use ntate::parse::parse_laurent;
use ntate::radiation::PhysConstants;
use ntate::rational::rat;
use ntate::tate::{boundary, exactness_check};

fn report(criterion: u32, label: &str, pass: bool, detail: &str) {
    let status = if pass { "pass" } else { "FAIL" };
    println!("criterion {criterion:>2} [{status}] {label}: {detail}");
    assert!(pass, "criterion {criterion} ({label}): {detail}");
}

fn outcome(criterion: u32, o: &CheckOutcome) {
    report(criterion, &o.name, o.pass, &o.detail);
}

#[test]
fn criterion_01_exactness_window() {
    let r = exactness_check(64);
    // diagram rows, verbatim: c^3, c^2, c, 1 die; c^-1, c^-2, c^-3 hit b_0, b_1, b_2
    let rows = [
        ("c^3", DividedPower::zero()),
        ("c^2", DividedPower::zero()),
        ("c", DividedPower::zero()),
        ("1", DividedPower::zero()),
        ("c^-1", DividedPower::basis(0)),
        ("c^-2", DividedPower::basis(1)),
        ("c^-3", DividedPower::basis(2)),
    ];
    let rows_ok = rows
        .iter()
        .all(|(expr, expect)| &boundary(&parse_laurent(expr).unwrap()) == expect);
    report(
        1,
        "exactness",
        r.pass && rows_ok,
        &format!(
            "window 64, {} violations, diagram rows c^3..c^-3: {rows_ok}",
            r.violations.len()
        ),
    );
}

#[test]
fn criterion_02_rota_baxter() {
    outcome(2, &suite_rota_baxter(1, 1000));
}

#[test]
fn criterion_03_divided_powers() {
    outcome(3, &suite_divided_powers(32));
    outcome(3, &suite_rationalize_homomorphism(1, 1000));
}

#[test]
fn criterion_04_generating_identity() {
    outcome(4, &suite_generating_identity(64));
}

#[test]
fn criterion_05_bernoulli() {
    outcome(5, &suite_bernoulli(40));
    let b12_ok = bernoulli(12) == rat(-691, 2730);
    report(5, "bernoulli-b12", b12_ok, "B_12 = -691/2730");
    let of_ok = one_form_check(64).unwrap();
    report(5, "one-form", of_ok, "d(bT) identity at N = 64");
    let c = c_from_b_check(16).unwrap();
    report(
        5,
        "c-from-b",
        c.plus_sign_matches && !c.minus_sign_matches,
        &format!(
            "N = 16, plus sign matches: {}, minus sign matches: {}",
            c.plus_sign_matches, c.minus_sign_matches
        ),
    );
}

#[test]
fn criterion_06_character_law() {
    outcome(6, &suite_character_law());
}

#[test]
fn criterion_07_polylog_boundary_values() {
    outcome(7, &suite_polylog(1e-8));
}

#[test]
fn criterion_08_s1_expansion() {
    outcome(8, &suite_s1_expansion());
}

#[test]
fn criterion_09_stefan_boltzmann() {
    outcome(9, &suite_stefan_boltzmann(&PhysConstants::codata(), 1e-9));
}

#[test]
fn criterion_10_pairing() {
    outcome(10, &suite_pairing(1, 1e-10));
}
