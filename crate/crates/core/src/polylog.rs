//! Polylogarithms on the negative real line, the fractional-integration
//! convolutions, and the exact zeta values at non-positive integers.

use serde::{Deserialize, Serialize};

use crate::error::KernelError;
use crate::formal::bernoulli_plus;
use crate::quad::{integrate, QuadCertificate, QuadratureSpec};
use crate::rational::{factorial, to_f64, ExactRational};

/// li_0(x) = -(1 - e^{-x})^{-1} = sum_{n>=1} e^{nx}, for x < 0.
pub fn li0(x: f64) -> Result<f64, KernelError> {
    if x >= 0.0 {
        return Err(KernelError::Domain(format!("li0 requires x < 0, got {x}")));
    }
    // 1 - e^{-x} = -expm1(-x)
    Ok(1.0 / f64::exp_m1(-x))
}

/// li_1(x) = -log(1 - e^x), for x < 0.
pub fn li1(x: f64) -> Result<f64, KernelError> {
    if x >= 0.0 {
        return Err(KernelError::Domain(format!("li1 requires x < 0, got {x}")));
    }
    Ok(-f64::ln_1p(-x.exp()))
}

/// Riemann zeta for real s > 1 by Euler-Maclaurin, accurate to well below
/// 1e-12 for s >= 2.
fn zeta_euler_maclaurin(s: f64) -> f64 {
    let m = 50u32;
    let mf = m as f64;
    let mut sum: f64 = (1..m).map(|n| (n as f64).powf(-s)).sum();
    sum += mf.powf(1.0 - s) / (s - 1.0);
    sum += 0.5 * mf.powf(-s);
    // correction terms B_2j/(2j)! * s(s+1)...(s+2j-2) * m^{-s-2j+1}
    let mut rising = s;
    for j in 1..=6u32 {
        let b2j = to_f64(&crate::formal::bernoulli(2 * j as usize));
        let fact = to_f64(&ExactRational::from_integer(factorial(2 * j as u64)));
        sum += b2j / fact * rising * mf.powf(-s - 2.0 * j as f64 + 1.0);
        rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
    }
    sum
}

/// li_s(x) = Li_s(e^x) = sum_{n>=1} e^{nx}/n^s, with a rigorous tail bound.
/// Requires x < 0, or x = 0 with s > 1.
pub fn li_s(s: f64, x: f64) -> Result<f64, KernelError> {
    if x > 0.0 {
        return Err(KernelError::Domain(format!("li_s requires x <= 0, got {x}")));
    }
    if x == 0.0 {
        if s <= 1.0 {
            return Err(KernelError::Domain(
                "li_s at x = 0 requires s > 1".into(),
            ));
        }
        return Ok(zeta_euler_maclaurin(s));
    }
    let tol = 1e-14;
    let r = x.exp();
    let mut sum = 0.0;
    let mut n = 1u64;
    loop {
        let term = (n as f64 * x).exp() / (n as f64).powf(s);
        sum += term;
        // ratio of consecutive terms: e^x ((n+1)/n)^{-s} <= e^x e^{|s|/n}
        let ratio = r * ((s.abs()) / n as f64).exp();
        if ratio < 1.0 {
            let tail = term * ratio / (1.0 - ratio);
            if tail < tol {
                return Ok(sum);
            }
        }
        n += 1;
        if n > 100_000_000 {
            return Err(KernelError::QuadratureFailure {
                achieved: term,
                requested: tol,
            });
        }
    }
}

/// Integrand choice for the Gel'fand-Silov convolution. Both convolve the
/// same density (d li_1 = li_0 dx); the distinction gates the x = 0
/// endpoint, where the d li_1 reading needs s >= 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvolveWith {
    Li0,
    DLi1,
}

#[derive(Debug, Clone, Copy)]
pub struct ConvolveResult {
    pub value: f64,
    pub certificate: QuadCertificate,
}

/// Exact incomplete gamma tail for integer s:
/// int_U^inf u^{s-1} e^{-u} du = e^{-U} * sum_{k<s} (s-1)!/k! U^k.
fn gamma_tail(s: u32, u: f64) -> f64 {
    let mut sum = 0.0;
    let mut coeff = 1.0; // (s-1)!/(s-1)! down to (s-1)!/0!
    for k in (0..s).rev() {
        sum += coeff * u.powi(k as i32);
        coeff *= (k as f64).max(1.0);
        if k > 0 {
            // coeff becomes (s-1)!/ (k-1)!
        }
    }
    (-u).exp() * sum
}

fn gamma_int(s: u32) -> f64 {
    to_f64(&ExactRational::from_integer(factorial(s as u64 - 1)))
}

/// (γ^s_+ * f)(x) = int_0^inf u^{s-1}/Γ(s) f(x-u) du by adaptive quadrature
/// with a certified exponential tail cutoff.
pub fn gamma_convolve(
    s: u32,
    f: ConvolveWith,
    x: f64,
    spec: &QuadratureSpec,
) -> Result<ConvolveResult, KernelError> {
    spec.validate()?;
    if s < 1 {
        return Err(KernelError::Precondition("s must be >= 1".into()));
    }
    if x > 0.0 {
        return Err(KernelError::Domain("gamma_convolve requires x <= 0".into()));
    }
    if x == 0.0 {
        match f {
            ConvolveWith::DLi1 if s >= 2 => {}
            ConvolveWith::Li0 if s >= 2 => {}
            _ => {
                return Err(KernelError::Domain(
                    "the convolution at x = 0 needs s >= 2".into(),
                ));
            }
        }
    }
    let gs = gamma_int(s);
    let integrand = move |u: f64| {
        if u == 0.0 {
            // u^{s-1} li0(x-u): finite limits at the endpoint
            if x < 0.0 {
                if s == 1 {
                    return 1.0 / f64::exp_m1(-x) / gs;
                }
                return 0.0;
            }
            // x = 0: u^{s-1}/(e^u - 1) -> u^{s-2}
            if s == 2 {
                return 1.0 / gs;
            }
            return 0.0;
        }
        u.powi(s as i32 - 1) / gs / f64::exp_m1(u - x)
    };
    // tail bound: li0(x-u) <= e^{x-u}/(1 - e^{x-U}) for u >= U
    let mut cutoff = spec.cutoff;
    let tol = spec.abs_tol;
    let mut tail;
    loop {
        let damp = 1.0 / (1.0 - (x - cutoff).exp());
        tail = x.exp() * damp * gamma_tail(s, cutoff) / gs;
        if tail < tol / 2.0 || cutoff > 1e4 {
            break;
        }
        cutoff *= 2.0;
    }
    if tail >= tol / 2.0 {
        return Err(KernelError::QuadratureFailure {
            achieved: tail,
            requested: tol / 2.0,
        });
    }
    let inner = QuadratureSpec {
        abs_tol: tol / 2.0,
        ..*spec
    };
    let q = integrate(integrand, 0.0, cutoff, &inner)?;
    Ok(ConvolveResult {
        value: q.value,
        certificate: QuadCertificate {
            error_estimate: q.certificate.error_estimate,
            tail_bound: tail,
            subdivisions: q.certificate.subdivisions,
        },
    })
}

/// ζ(1-k) = -B+_k / k, exact.
pub fn zeta_neg(k: u32) -> Result<ExactRational, KernelError> {
    if k < 1 {
        return Err(KernelError::Precondition("k must be >= 1".into()));
    }
    Ok(-bernoulli_plus(k as usize) / ExactRational::from_integer(k.into()))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct S1ExpansionReport {
    pub x: f64,
    pub terms: u32,
    /// |li1(x) - (-log(-x) + log|x/(e^x-1)|)|
    pub residual_closed_form: f64,
    /// |log|x/(e^x-1)| - sum_{k<=K} ζ(1-k) x^k/k!|
    pub residual_series: f64,
    pub series_tail_bound: f64,
    pub pass: bool,
}

fn log_x_over_expm1(x: f64) -> f64 {
    // for x < 0: |x| = -x and |e^x - 1| = -expm1(x)
    (-x).ln() - (-f64::exp_m1(x)).ln()
}

/// Verifies the two constant-term identities of the Taylor expansion of
/// li_s at s = 1, with an explicit bound on the truncated series tail.
pub fn s1_expansion_check(x: f64, terms: u32, tol: f64) -> Result<S1ExpansionReport, KernelError> {
    if x >= 0.0 {
        return Err(KernelError::Domain("requires x < 0".into()));
    }
    // coefficient asymptotics |ζ(1-k)/k!| <= 2/(k (2π)^k) bound the tail
    // geometrically with ratio |x|/(2π)
    let ratio = x.abs() / (2.0 * std::f64::consts::PI);
    if ratio >= 1.0 {
        return Err(KernelError::Precondition(
            "|x| must be below the series radius 2π".into(),
        ));
    }
    let k1 = terms as f64 + 1.0;
    let series_tail_bound = 2.0 * ratio.powf(k1) / (k1 * (1.0 - ratio));
    if series_tail_bound >= tol {
        return Err(KernelError::Precondition(format!(
            "truncation tail bound {series_tail_bound:.3e} exceeds tolerance {tol:.3e}"
        )));
    }

    let lhs = li1(x)?;
    let logterm = log_x_over_expm1(x);
    let residual_closed_form = (lhs - (-(-x).ln() + logterm)).abs();

    let mut series = 0.0;
    let mut xpow = 1.0;
    for k in 1..=terms {
        xpow *= x;
        let coeff = to_f64(&zeta_neg(k)?) / to_f64(&ExactRational::from_integer(factorial(k as u64)));
        series += coeff * xpow;
    }
    let residual_series = (logterm - series).abs();

    Ok(S1ExpansionReport {
        x,
        terms,
        residual_closed_form,
        residual_series,
        series_tail_bound,
        pass: residual_closed_form < tol && residual_series < tol + series_tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use std::f64::consts::PI;

    #[test]
    fn li0_closed_forms() {
        let ln2 = std::f64::consts::LN_2;
        assert!((li0(-ln2).unwrap() - 1.0).abs() < 1e-14);
        let e = std::f64::consts::E;
        assert!((li0(-1.0).unwrap() - 1.0 / (e - 1.0)).abs() < 1e-14);
        assert!(li0(-50.0).unwrap() < 1e-20);
        assert!(li0(0.0).is_err());
        assert!(li0(1.0).is_err());
    }

    #[test]
    fn li1_closed_forms() {
        let ln2 = std::f64::consts::LN_2;
        assert!((li1(-ln2).unwrap() - ln2).abs() < 1e-14);
        assert!(li1(-50.0).unwrap() < 1e-20);
        assert!(li1(0.0).is_err());
    }

    #[test]
    fn li1_derivative_is_li0() {
        let h = 1e-6;
        let x = -1.0;
        let fd = (li1(x + h).unwrap() - li1(x - h).unwrap()) / (2.0 * h);
        assert!((fd - li0(x).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn li_s_boundary_values() {
        assert!((li_s(2.0, 0.0).unwrap() - PI * PI / 6.0).abs() < 1e-10);
        assert!((li_s(4.0, 0.0).unwrap() - PI.powi(4) / 90.0).abs() < 1e-10);
        assert!(li_s(1.0, 0.0).is_err());
        assert!(li_s(2.0, 0.5).is_err());
    }

    #[test]
    fn li_s_matches_closed_forms() {
        let ln2 = std::f64::consts::LN_2;
        assert!((li_s(1.0, -ln2).unwrap() - li1(-ln2).unwrap()).abs() < 1e-12);
        for &x in &[-0.3, -1.0, -2.5] {
            assert!((li_s(0.0, x).unwrap() - li0(x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn convolution_reproduces_li() {
        let spec = QuadratureSpec::with_tol(1e-10);
        let r = gamma_convolve(1, ConvolveWith::Li0, -1.0, &spec).unwrap();
        assert!((r.value - li1(-1.0).unwrap()).abs() < 1e-8);
        let r = gamma_convolve(2, ConvolveWith::Li0, -1.0, &spec).unwrap();
        assert!((r.value - li_s(2.0, -1.0).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn divided_moment_is_zeta() {
        let spec = QuadratureSpec::with_tol(1e-8);
        let r = gamma_convolve(4, ConvolveWith::DLi1, 0.0, &spec).unwrap();
        assert!(
            (r.value - PI.powi(4) / 90.0).abs() < 1e-6,
            "value {}",
            r.value
        );
        assert!(r.certificate.total_error() < 1e-6);
    }

    #[test]
    fn convolution_preconditions() {
        let spec = QuadratureSpec::default();
        assert!(gamma_convolve(0, ConvolveWith::Li0, -1.0, &spec).is_err());
        assert!(gamma_convolve(1, ConvolveWith::DLi1, 0.0, &spec).is_err());
        assert!(gamma_convolve(2, ConvolveWith::Li0, 0.5, &spec).is_err());
    }

    #[test]
    fn zeta_at_nonpositive_integers() {
        assert_eq!(zeta_neg(1).unwrap(), rat(-1, 2));
        assert_eq!(zeta_neg(2).unwrap(), rat(-1, 12));
        assert_eq!(zeta_neg(3).unwrap(), crate::rational::rat_int(0));
        assert!(zeta_neg(0).is_err());
    }

    #[test]
    fn s1_expansion_at_minus_one() {
        let report = s1_expansion_check(-1.0, 12, 1e-6).unwrap();
        assert!(report.pass, "{report:?}");
        assert!(report.residual_closed_form < 1e-12);
        // closed form at x = -1: log|x/(e^x-1)| = -log(1 - e^{-1}),
        // forced by identity (i) since log(-x) vanishes there
        let expect = -f64::ln_1p(-(-1.0f64).exp());
        assert!((log_x_over_expm1(-1.0) - expect).abs() < 1e-12);
        assert!((log_x_over_expm1(-1.0) - 0.4586751).abs() < 1e-6);
    }

    #[test]
    fn s1_expansion_small_x() {
        let report = s1_expansion_check(-0.5, 12, 1e-6).unwrap();
        assert!(report.residual_series < 1e-6);
        // limit x -> 0-: log|x/(e^x-1)| -> 0
        assert!(log_x_over_expm1(-1e-8).abs() < 1e-7);
    }

    #[test]
    fn s1_expansion_rejects_unsatisfiable_tail() {
        assert!(s1_expansion_check(-6.0, 2, 1e-6).is_err());
        assert!(s1_expansion_check(0.5, 12, 1e-6).is_err());
    }

    #[test]
    fn monotone_in_x() {
        for &s in &[0.0, 1.0, 2.0, 4.0] {
            let grid: Vec<f64> = (1..=40).map(|i| -4.0 + 0.095 * i as f64).collect();
            let mut prev = f64::NEG_INFINITY;
            for &x in &grid {
                let v = li_s(s, x).unwrap();
                assert!(v > prev, "li_{s} not increasing at {x}");
                prev = v;
            }
        }
    }

    #[test]
    fn fractional_integration_semigroup() {
        // applying γ^1 twice agrees with γ^2
        let spec = QuadratureSpec::with_tol(1e-9);
        for i in 0..10 {
            let x = -0.2 - 0.3 * i as f64;
            let twice = gamma_convolve(2, ConvolveWith::Li0, x, &spec).unwrap();
            let via_li = li_s(2.0, x).unwrap();
            assert!((twice.value - via_li).abs() < 1e-7, "x = {x}");
            let once = gamma_convolve(1, ConvolveWith::Li0, x, &spec).unwrap();
            assert!((once.value - li_s(1.0, x).unwrap()).abs() < 1e-7);
        }
    }

    #[test]
    fn derivative_chain_down_the_index() {
        let h = 1e-4;
        for s in 0..=2 {
            for i in 0..20 {
                let x = -5.0 + 0.245 * i as f64;
                let fd = (li_s(s as f64 + 1.0, x + h).unwrap()
                    - li_s(s as f64 + 1.0, x - h).unwrap())
                    / (2.0 * h);
                assert!(
                    (fd - li_s(s as f64, x).unwrap()).abs() < 1e-5,
                    "s = {s}, x = {x}"
                );
            }
        }
    }
}
