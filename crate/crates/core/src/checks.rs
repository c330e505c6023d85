//! Named verification suites, shared by the CLI `check` subcommand and the
//! acceptance tests. Randomized suites are seeded and reproducible.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::divided::DividedPower;
use crate::error::KernelError;
use crate::fgl::{fgl_character_check, FormalGroupLaw};
use crate::formal::{c_from_b_check, exp_bt, one_form_check, qc};
use crate::laurent::{LaurentPoly, RingTag, Var};
use crate::polylog::{gamma_convolve, li_s, s1_expansion_check, zeta_neg, ConvolveWith};
use crate::quad::QuadratureSpec;
use crate::radiation::{pairing_eval, stefan_boltzmann, GaussianSpec, PhysConstants, UnitsMode};
use crate::rational::{binomial, factorial, rat, rat_int, ExactRational};
use crate::series::PowerSeries;
use crate::tate::{exactness_check, rota_baxter_check};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            pass: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            pass: false,
            detail: detail.into(),
        }
    }

    fn from_bool(name: &str, pass: bool, detail: impl Into<String>) -> Self {
        if pass {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

/// Random Z[c^{±1}] element with exponents in [-8, 8], coefficients in [-9, 9].
pub fn random_tate(rng: &mut impl Rng) -> LaurentPoly {
    let n_terms = rng.gen_range(0..=5);
    let mut p = LaurentPoly::zero(Var::C, RingTag::Integral);
    for _ in 0..n_terms {
        let e = rng.gen_range(-8..=8);
        let c = rng.gen_range(-9..=9i64);
        let m = LaurentPoly::monomial(Var::C, RingTag::Integral, e, rat_int(c)).unwrap();
        p = p.add(&m).unwrap();
    }
    p
}

pub fn suite_exactness(window: u32) -> CheckOutcome {
    let report = exactness_check(window);
    CheckOutcome::from_bool(
        "exactness",
        report.pass,
        format!(
            "window {} ({} violations)",
            report.window,
            report.violations.len()
        ),
    )
}

pub fn suite_rota_baxter(seed: u64, pairs: usize) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0usize;
    for _ in 0..pairs {
        let x = random_tate(&mut rng);
        let y = random_tate(&mut rng);
        if !rota_baxter_check(&x, &y).unwrap() {
            failures += 1;
        }
    }
    CheckOutcome::from_bool(
        "rota-baxter",
        failures == 0,
        format!("{pairs} seeded pairs, {failures} failures"),
    )
}

pub fn suite_divided_powers(max_index: u64) -> CheckOutcome {
    // independent Pascal-triangle oracle
    let n = (2 * max_index + 1) as usize;
    let mut pascal: Vec<Vec<crate::rational::ExactInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = vec![crate::rational::ExactInt::from(1u32)];
        for j in 1..=i {
            let prev: &Vec<crate::rational::ExactInt> = &pascal[i - 1];
            let above = if j < i {
                prev[j].clone()
            } else {
                0u32.into()
            };
            row.push(&prev[j - 1] + above);
        }
        pascal.push(row);
    }
    for i in 0..=max_index {
        for k in 0..=max_index {
            let expect = DividedPower::term(i + k, pascal[(i + k) as usize][i as usize].clone());
            if DividedPower::basis(i).mul(&DividedPower::basis(k)) != expect {
                return CheckOutcome::fail("divided-powers", format!("b_{i} b_{k}"));
            }
        }
    }
    CheckOutcome::pass(
        "divided-powers",
        format!("b_i b_k = C(i+k,i) b_(i+k) for i,k <= {max_index}"),
    )
}

pub fn suite_rationalize_homomorphism(seed: u64, pairs: usize) -> CheckOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..pairs {
        let mut x = DividedPower::zero();
        let mut y = DividedPower::zero();
        for _ in 0..rng.gen_range(0..=4) {
            x = x.add(&DividedPower::term(
                rng.gen_range(0..=10),
                rng.gen_range(-9..=9i64).into(),
            ));
            y = y.add(&DividedPower::term(
                rng.gen_range(0..=10),
                rng.gen_range(-9..=9i64).into(),
            ));
        }
        let lhs = x.mul(&y).rationalize();
        let rhs = x.rationalize().mul(&y.rationalize()).unwrap();
        if lhs != rhs {
            return CheckOutcome::fail("dp-rationalize", format!("x = {x}, y = {y}"));
        }
    }
    CheckOutcome::pass("dp-rationalize", format!("{pairs} seeded pairs"))
}

pub fn suite_generating_identity(order: usize) -> CheckOutcome {
    match exp_bt(order) {
        Ok(e) => {
            for k in 0..=order {
                if e.coeff(k) != &qc(-(k as i64), ExactRational::one()) {
                    return CheckOutcome::fail("exp(bT)", format!("T^{k} coefficient"));
                }
            }
            CheckOutcome::pass("exp(bT)", format!("coefficients c^-k for k <= {order}"))
        }
        Err(e) => CheckOutcome::fail("exp(bT)", e.to_string()),
    }
}

pub fn suite_bernoulli(upto: usize) -> CheckOutcome {
    // independent recurrence oracle: sum_{k<=n} C(n+1,k) B_k = 0
    let mut oracle = vec![ExactRational::one()];
    for n in 1..=upto {
        let mut s = rat_int(0);
        for (k, bk) in oracle.iter().enumerate() {
            s = s + ExactRational::from_integer(binomial(n as u64 + 1, k as u64)) * bk;
        }
        oracle.push(-s / rat_int(n as i64 + 1));
    }
    for (n, expect) in oracle.iter().enumerate() {
        if &crate::formal::bernoulli(n) != expect {
            return CheckOutcome::fail("bernoulli", format!("B_{n}"));
        }
    }
    if crate::formal::bernoulli(12) != rat(-691, 2730) {
        return CheckOutcome::fail("bernoulli", "B_12 != -691/2730");
    }
    CheckOutcome::pass("bernoulli", format!("recurrence oracle to n = {upto}"))
}

pub fn suite_one_form(order: usize) -> CheckOutcome {
    match one_form_check(order) {
        Ok(true) => CheckOutcome::pass("one-form", format!("d(bT) identity to order {order}")),
        Ok(false) => CheckOutcome::fail("one-form", "sides differ"),
        Err(e) => CheckOutcome::fail("one-form", e.to_string()),
    }
}

pub fn suite_c_from_b(order: usize) -> CheckOutcome {
    match c_from_b_check(order) {
        Ok(out) => CheckOutcome::from_bool(
            "c-from-b",
            out.plus_sign_matches && !out.minus_sign_matches,
            format!(
                "plus sign matches: {}, minus sign matches: {}",
                out.plus_sign_matches, out.minus_sign_matches
            ),
        ),
        Err(e) => CheckOutcome::fail("c-from-b", e.to_string()),
    }
}

pub fn suite_character_law() -> CheckOutcome {
    let one_plus_t = |order: usize| {
        let mut coeffs = vec![rat_int(0); order + 1];
        coeffs[0] = rat_int(1);
        coeffs[1] = rat_int(1);
        PowerSeries::from_coeffs(coeffs)
    };
    let exp_t = |order: usize| {
        PowerSeries::from_coeffs(
            (0..=order)
                .map(|k| ExactRational::new(1.into(), factorial(k as u64)))
                .collect(),
        )
    };
    let mult = FormalGroupLaw::multiplicative(8);
    let add = FormalGroupLaw::additive(12);
    let ok_mult = fgl_character_check(&mult, &one_plus_t(8)).unwrap();
    let ok_add_exp = fgl_character_check(&add, &exp_t(12)).unwrap();
    let add4 = FormalGroupLaw::additive(4);
    let neg_control = fgl_character_check(&add4, &one_plus_t(4)).unwrap();
    CheckOutcome::from_bool(
        "character-law",
        ok_mult && ok_add_exp && !neg_control,
        format!("mult/1+T: {ok_mult}, add/exp: {ok_add_exp}, negative control fails: {}", !neg_control),
    )
}

pub fn suite_polylog(tol: f64) -> CheckOutcome {
    let pi = std::f64::consts::PI;
    let z2 = li_s(2.0, 0.0).unwrap();
    let z4 = li_s(4.0, 0.0).unwrap();
    let ok2 = (z2 - pi * pi / 6.0).abs() < 1e-10;
    let ok4 = (z4 - pi.powi(4) / 90.0).abs() < 1e-10;
    let spec = QuadratureSpec::with_tol(tol.min(1e-8));
    let moment = gamma_convolve(4, ConvolveWith::DLi1, 0.0, &spec).unwrap();
    let okm = (moment.value - pi.powi(4) / 90.0).abs() < 1e-6;
    CheckOutcome::from_bool(
        "polylog",
        ok2 && ok4 && okm,
        format!(
            "li_2(0) err {:.2e}, li_4(0) err {:.2e}, divided moment err {:.2e}",
            (z2 - pi * pi / 6.0).abs(),
            (z4 - pi.powi(4) / 90.0).abs(),
            (moment.value - pi.powi(4) / 90.0).abs()
        ),
    )
}

pub fn suite_s1_expansion() -> CheckOutcome {
    let exact_ok = zeta_neg(1).unwrap() == rat(-1, 2)
        && zeta_neg(2).unwrap() == rat(-1, 12)
        && zeta_neg(3).unwrap() == rat_int(0);
    let mut max_resid = 0.0f64;
    for &x in &[-1.0, -0.5, -0.1] {
        let r = s1_expansion_check(x, 12, 1e-6).unwrap();
        if !r.pass {
            return CheckOutcome::fail("s1-expansion", format!("x = {x}"));
        }
        max_resid = max_resid
            .max(r.residual_closed_form)
            .max(r.residual_series);
    }
    CheckOutcome::from_bool(
        "s1-expansion",
        exact_ok,
        format!("max residual {max_resid:.2e}, exact zeta values: {exact_ok}"),
    )
}

pub fn suite_stefan_boltzmann(consts: &PhysConstants, tol: f64) -> CheckOutcome {
    let pi = std::f64::consts::PI;
    let spec = QuadratureSpec::with_tol(tol.min(1e-9));
    let (core, _) = match crate::radiation::planck_core_integral(&spec) {
        Ok(v) => v,
        Err(e) => return CheckOutcome::fail("stefan-boltzmann", e.to_string()),
    };
    let core_ok = (core - pi.powi(4) / 15.0).abs() < 1e-8;
    let mut rel_ok = true;
    for units in [UnitsMode::Si, UnitsMode::Natural] {
        let c = consts.with_units(units);
        for temp in [1.0, 300.0, 5772.0, 1e4] {
            let r = stefan_boltzmann(temp, &c, &spec).unwrap();
            if r.relative_error >= 1e-6 {
                rel_ok = false;
            }
        }
    }
    let kappa_ok = (consts.kappa() - 20.836e9).abs() / 20.836e9 < 5e-5;
    CheckOutcome::from_bool(
        "stefan-boltzmann",
        core_ok && rel_ok && kappa_ok,
        format!(
            "core err {:.2e}, closed-form agreement: {rel_ok}, kappa: {kappa_ok}",
            (core - pi.powi(4) / 15.0).abs()
        ),
    )
}

pub fn suite_pairing(seed: u64, tol: f64) -> CheckOutcome {
    let pi = std::f64::consts::PI;
    let spec = QuadratureSpec::with_tol(tol.min(1e-10));
    let norm = [GaussianSpec {
        center: 0.0,
        width: 1.0,
        amplitude: 1.0 / pi.sqrt(),
    }];
    let c_inv = crate::parse::parse_laurent("c^-1").unwrap();
    let r1 = pairing_eval(&norm, &c_inv, &spec).unwrap();
    let ok1 = (r1.value + 1.0).abs() < 1e-8;

    let plain = [GaussianSpec {
        center: 0.0,
        width: 1.0,
        amplitude: 1.0,
    }];
    let one = crate::parse::parse_laurent("1").unwrap();
    let r2 = pairing_eval(&plain, &one, &spec).unwrap();
    let ok2 = (r2.value + pi.sqrt() * (0.25f64).exp()).abs() < 1e-8;

    // bilinearity on seeded random inputs
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bilinear_ok = true;
    for _ in 0..5 {
        let p = LaurentPoly::from_terms(
            Var::C,
            RingTag::Integral,
            (0..3).map(|_| (rng.gen_range(-2..=2), rat_int(rng.gen_range(-3..=3i64)))),
        )
        .unwrap();
        let q = LaurentPoly::from_terms(
            Var::C,
            RingTag::Integral,
            (0..3).map(|_| (rng.gen_range(-2..=2), rat_int(rng.gen_range(-3..=3i64)))),
        )
        .unwrap();
        let g = GaussianSpec {
            center: rng.gen_range(-1.0..1.0),
            width: rng.gen_range(0.5..1.5),
            amplitude: rng.gen_range(-2.0..2.0),
        };
        let both = p.add(&q).unwrap();
        let lhs = pairing_eval(&[g], &both, &spec).unwrap().value;
        let rhs = pairing_eval(&[g], &p, &spec).unwrap().value
            + pairing_eval(&[g], &q, &spec).unwrap().value;
        if (lhs - rhs).abs() > 1e-7 * (1.0 + rhs.abs()) {
            bilinear_ok = false;
        }
        // linearity in the amplitudes
        let g2 = GaussianSpec {
            amplitude: 2.0 * g.amplitude,
            ..g
        };
        let doubled = pairing_eval(&[g2], &p, &spec).unwrap().value;
        let single = pairing_eval(&[g], &p, &spec).unwrap().value;
        if (doubled - 2.0 * single).abs() > 1e-7 * (1.0 + doubled.abs()) {
            bilinear_ok = false;
        }
    }
    CheckOutcome::from_bool(
        "pairing",
        ok1 && ok2 && bilinear_ok,
        format!("gaussian closed forms: {}, bilinearity: {bilinear_ok}", ok1 && ok2),
    )
}

#[derive(Debug, Clone, Copy)]
pub struct CheckConfig {
    pub window: u32,
    pub order: usize,
    pub seed: u64,
    pub tol: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            window: 64,
            order: 64,
            seed: 1,
            tol: 1e-8,
        }
    }
}

/// Runs every suite in a fixed order.
pub fn run_all(cfg: &CheckConfig, consts: &PhysConstants) -> Result<Vec<CheckOutcome>, KernelError> {
    Ok(vec![
        suite_exactness(cfg.window),
        suite_rota_baxter(cfg.seed, 1000),
        suite_divided_powers(32),
        suite_rationalize_homomorphism(cfg.seed, 1000),
        suite_bernoulli(40),
        suite_generating_identity(cfg.order),
        suite_one_form(cfg.order),
        suite_c_from_b(16),
        suite_character_law(),
        suite_polylog(cfg.tol),
        suite_s1_expansion(),
        suite_stefan_boltzmann(consts, cfg.tol),
        suite_pairing(cfg.seed, cfg.tol),
    ])
}
