//! Planck spectral radiance, the Stefan-Boltzmann verification against the
//! 12hκ⁴ζ(4)T⁴ closed form, and the Gaussian pairing on the ε-line.

use serde::{Deserialize, Serialize};

use crate::error::KernelError;
use crate::laurent::{LaurentPoly, Var};
use crate::polylog::{gamma_convolve, ConvolveWith};
use crate::quad::{integrate, QuadCertificate, QuadratureSpec};
use crate::rational::to_f64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitsMode {
    /// SI units; the closed form carries the 1/c² divisor.
    Si,
    /// c_light = 1; reproduces the bare 12hκ⁴ expression.
    Natural,
}

/// CODATA-style constants, read from a single configuration source.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct PhysConstants {
    /// Planck constant, J·s.
    pub h: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Speed of light, m/s.
    pub c_light: f64,
    #[serde(default = "default_units")]
    pub units: UnitsMode,
}

fn default_units() -> UnitsMode {
    UnitsMode::Si
}

/// On-disk shape: {"h": ..., "k_B": ..., "c_light": ...}.
#[derive(Deserialize)]
struct ConstantsFile {
    h: f64,
    #[serde(rename = "k_B")]
    k_b: f64,
    c_light: f64,
}

impl PhysConstants {
    pub fn codata() -> Self {
        PhysConstants {
            h: 6.626_070_15e-34,
            k_b: 1.380_649e-23,
            c_light: 2.997_924_58e8,
            units: UnitsMode::Si,
        }
    }

    pub fn from_json(json: &str) -> Result<Self, KernelError> {
        let file: ConstantsFile = serde_json::from_str(json)?;
        Ok(PhysConstants {
            h: file.h,
            k_b: file.k_b,
            c_light: file.c_light,
            units: UnitsMode::Si,
        })
    }

    pub fn with_units(self, units: UnitsMode) -> Self {
        PhysConstants { units, ..self }
    }

    /// κ = k_B/h in Hz/K; the temperature-to-frequency conversion.
    pub fn kappa(&self) -> f64 {
        self.k_b / self.h
    }

    fn c_sq_divisor(&self) -> f64 {
        match self.units {
            UnitsMode::Si => self.c_light * self.c_light,
            UnitsMode::Natural => 1.0,
        }
    }
}

/// Spectral radiance (2h/c²) ν³ / (e^{hν/(k_B T)} - 1).
pub fn planck_spectral(nu: f64, temp: f64, consts: &PhysConstants) -> Result<f64, KernelError> {
    if nu <= 0.0 || temp <= 0.0 {
        return Err(KernelError::Domain(
            "planck_spectral requires ν > 0 and T > 0".into(),
        ));
    }
    let x = consts.h * nu / (consts.k_b * temp);
    Ok(2.0 * consts.h / consts.c_sq_divisor() * nu.powi(3) / f64::exp_m1(x))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RadianceResult {
    pub temperature: f64,
    /// ∫ planck_spectral dν by quadrature.
    pub quadrature_value: f64,
    /// 12 h κ⁴ ζ(4) T⁴ (divided by c² in SI mode).
    pub closed_form: f64,
    pub relative_error: f64,
    pub certificate: QuadCertificate,
}

/// The dimensionless Planck core ∫₀^∞ x³/(e^x - 1) dx with a certified tail.
pub fn planck_core_integral(spec: &QuadratureSpec) -> Result<(f64, QuadCertificate), KernelError> {
    spec.validate()?;
    let u = spec.cutoff.max(60.0);
    // x³/(e^x-1) <= x³ e^{-x}/(1-e^{-U}) beyond U; the remaining integral
    // of x³e^{-x} is exact
    let tail = (u.powi(3) + 3.0 * u.powi(2) + 6.0 * u + 6.0) * (-u).exp() / (1.0 - (-u).exp());
    let q = integrate(
        |x| {
            if x == 0.0 {
                0.0
            } else {
                x.powi(3) / f64::exp_m1(x)
            }
        },
        0.0,
        u,
        spec,
    )?;
    Ok((
        q.value,
        QuadCertificate {
            error_estimate: q.certificate.error_estimate,
            tail_bound: tail,
            subdivisions: q.certificate.subdivisions,
        },
    ))
}

/// Integrates the Planck curve over all frequencies by the substitution
/// x = hν/(k_B T) and compares against 12hκ⁴ζ(4)T⁴, with ζ(4) supplied by
/// the divided-moment convolution (γ⁴_+ * d li_1)(0).
pub fn stefan_boltzmann(
    temp: f64,
    consts: &PhysConstants,
    spec: &QuadratureSpec,
) -> Result<RadianceResult, KernelError> {
    if temp <= 0.0 {
        return Err(KernelError::Domain("temperature must be > 0".into()));
    }
    let (core, cert) = planck_core_integral(spec)?;
    let prefactor = 2.0 * consts.h * consts.kappa().powi(4) * temp.powi(4) / consts.c_sq_divisor();
    let quadrature_value = prefactor * core;

    let zeta4 = gamma_convolve(4, ConvolveWith::DLi1, 0.0, spec)?.value;
    let closed_form =
        12.0 * consts.h * consts.kappa().powi(4) * zeta4 * temp.powi(4) / consts.c_sq_divisor();

    let relative_error = ((quadrature_value - closed_form) / closed_form).abs();
    Ok(RadianceResult {
        temperature: temp,
        quadrature_value,
        closed_form,
        relative_error,
        certificate: cert,
    })
}

/// One Gaussian bump A·exp(-((ε-μ)/w)²).
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GaussianSpec {
    pub center: f64,
    pub width: f64,
    pub amplitude: f64,
}

impl GaussianSpec {
    pub fn eval(&self, eps: f64) -> f64 {
        self.amplitude * (-((eps - self.center) / self.width).powi(2)).exp()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct PairingResult {
    pub value: f64,
    pub certificate: QuadCertificate,
}

/// Pairs a test function (a finite Gaussian combination) with the one-form
/// p(c) dc under c = e^{-ε}: integrand -p(e^{-ε}) e^{-ε} φ(ε) over ℝ.
pub fn pairing_eval(
    phi: &[GaussianSpec],
    form: &LaurentPoly,
    spec: &QuadratureSpec,
) -> Result<PairingResult, KernelError> {
    spec.validate()?;
    if form.var() != Var::C {
        return Err(KernelError::VariableMismatch(form.var(), Var::C));
    }
    if phi.iter().any(|g| g.width <= 0.0) {
        return Err(KernelError::Precondition(
            "Gaussian widths must be > 0".into(),
        ));
    }
    if phi.is_empty() {
        return Err(KernelError::Precondition(
            "test function must be a nonempty Gaussian combination".into(),
        ));
    }
    if form.is_zero() {
        return Ok(PairingResult {
            value: 0.0,
            certificate: QuadCertificate {
                error_estimate: 0.0,
                tail_bound: 0.0,
                subdivisions: 0,
            },
        });
    }

    // each (monomial a_k c^k, Gaussian) term is a_k A e^{-(k+1)ε - ((ε-μ)/w)²};
    // completing the square centers it at μ - (k+1)w²/2 with mass
    // |a_k| A w √π e^{(k+1)²w²/4 - (k+1)μ}
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    let mut tail_bound = 0.0;
    let tol = spec.abs_tol;
    for g in phi {
        for (e, coeff) in form.terms() {
            let a = (e + 1) as f64; // decay rate of e^{-(k+1)ε}
            let peak = g.center - a * g.width * g.width / 2.0;
            let log_mass = a * a * g.width * g.width / 4.0 - a * g.center;
            let scale = to_f64(coeff).abs() * g.amplitude.abs() * g.width * log_mass.exp();
            // half-width W in units of the Gaussian width: tail of each side
            // is <= scale · e^{-W²}/(2W)
            let mut w: f64 = 4.0;
            let n_terms = (phi.len() * form.num_terms()) as f64;
            while scale * (-w * w).exp() / (2.0 * w) >= tol / (4.0 * n_terms) && w < 50.0 {
                w += 1.0;
            }
            tail_bound += 2.0 * scale * (-w * w).exp() / (2.0 * w);
            lo = lo.min(peak - w * g.width);
            hi = hi.max(peak + w * g.width);
        }
    }

    let integrand = |eps: f64| {
        let c = (-eps).exp();
        let phi_val: f64 = phi.iter().map(|g| g.eval(eps)).sum();
        -form.eval_f64(c) * c * phi_val
    };
    let inner = QuadratureSpec {
        abs_tol: (tol - tail_bound).max(tol / 2.0),
        ..*spec
    };
    let q = integrate(integrand, lo, hi, &inner)?;
    Ok(PairingResult {
        value: q.value,
        certificate: QuadCertificate {
            error_estimate: q.certificate.error_estimate,
            tail_bound,
            subdivisions: q.certificate.subdivisions,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_laurent;
    use std::f64::consts::PI;

    #[test]
    fn kappa_matches_footnote_value() {
        let c = PhysConstants::codata();
        let rel = (c.kappa() - 20.836e9).abs() / 20.836e9;
        assert!(rel < 5e-5, "kappa = {}", c.kappa());
    }

    #[test]
    fn constants_from_json() {
        let c = PhysConstants::from_json(
            r#"{"h": 6.62607015e-34, "k_B": 1.380649e-23, "c_light": 2.99792458e8}"#,
        )
        .unwrap();
        assert_eq!(c.h, 6.62607015e-34);
        assert_eq!(c.k_b, 1.380649e-23);
        assert_eq!(c.units, UnitsMode::Si);
    }

    #[test]
    fn rayleigh_jeans_limit() {
        let c = PhysConstants::codata();
        let temp = 300.0;
        // hν/(k_B T) < 0.01
        let nu = 0.005 * c.k_b * temp / c.h;
        let val = planck_spectral(nu, temp, &c).unwrap();
        let rj = 2.0 * nu * nu * c.k_b * temp / (c.c_light * c.c_light);
        assert!((val - rj).abs() / rj < 0.01);
    }

    #[test]
    fn wien_peak_location() {
        let c = PhysConstants::codata();
        let temp = 1.0;
        // golden-section maximization of the spectral curve
        let f = |nu: f64| planck_spectral(nu, temp, &c).unwrap();
        let (mut a, mut b) = (1e9, 2e11);
        let g = (5f64.sqrt() - 1.0) / 2.0;
        for _ in 0..200 {
            let x1 = b - g * (b - a);
            let x2 = a + g * (b - a);
            if f(x1) < f(x2) {
                a = x1;
            } else {
                b = x2;
            }
        }
        let peak = 0.5 * (a + b);
        assert!(
            (peak - 5.8789e10).abs() / 5.8789e10 < 1e-3,
            "peak at {peak:.5e}"
        );
        // x³/(e^x-1) peaks at x ≈ 2.8214
        let x_peak = c.h * peak / (c.k_b * temp);
        assert!((x_peak - 2.8214).abs() < 1e-3);
    }

    #[test]
    fn deep_wien_tail_is_monotone() {
        let c = PhysConstants::codata();
        let temp = 100.0;
        let nu0 = 31.0 * c.k_b * temp / c.h;
        let mut prev = planck_spectral(nu0, temp, &c).unwrap();
        for i in 1..10 {
            let v = planck_spectral(nu0 * (1.0 + 0.1 * i as f64), temp, &c).unwrap();
            assert!(v < prev);
            prev = v;
        }
    }

    #[test]
    fn dimensionless_core() {
        let spec = QuadratureSpec::with_tol(1e-10);
        let (core, cert) = planck_core_integral(&spec).unwrap();
        assert!((core - PI.powi(4) / 15.0).abs() < 1e-8, "core = {core}");
        assert!(cert.total_error() < 1e-8);
    }

    #[test]
    fn quartic_scaling() {
        let c = PhysConstants::codata();
        let spec = QuadratureSpec::with_tol(1e-9);
        let r1 = stefan_boltzmann(300.0, &c, &spec).unwrap();
        let r2 = stefan_boltzmann(600.0, &c, &spec).unwrap();
        let ratio = r2.quadrature_value / r1.quadrature_value;
        assert!((ratio - 16.0).abs() < 1e-9);
    }

    #[test]
    fn sigma_reproduction() {
        let c = PhysConstants::codata();
        let spec = QuadratureSpec::with_tol(1e-9);
        let r = stefan_boltzmann(5772.0, &c, &spec).unwrap();
        assert!(r.relative_error < 1e-6, "rel err {}", r.relative_error);
        let sigma = 2.0 * PI.powi(5) * c.k_b.powi(4)
            / (15.0 * c.c_light.powi(2) * c.h.powi(3));
        let from_quad = PI * r.quadrature_value / 5772.0f64.powi(4);
        assert!(
            (from_quad - sigma).abs() / sigma < 1e-6,
            "sigma {from_quad:.6e} vs {sigma:.6e}"
        );
        assert!((sigma - 5.670e-8).abs() / 5.670e-8 < 1e-3);
    }

    #[test]
    fn natural_units_drop_c() {
        let c = PhysConstants::codata().with_units(UnitsMode::Natural);
        let spec = QuadratureSpec::with_tol(1e-9);
        let r = stefan_boltzmann(1.0, &c, &spec).unwrap();
        let expect = 12.0 * c.h * c.kappa().powi(4) * PI.powi(4) / 90.0;
        assert!((r.closed_form - expect).abs() / expect < 1e-6);
        assert!(r.relative_error < 1e-6);
    }

    #[test]
    fn pairing_normalized_gaussian() {
        // p = c^{-1}, φ = e^{-ε²}/√π  →  -1
        let spec = QuadratureSpec::with_tol(1e-10);
        let phi = [GaussianSpec {
            center: 0.0,
            width: 1.0,
            amplitude: 1.0 / PI.sqrt(),
        }];
        let p = parse_laurent("c^-1").unwrap();
        let r = pairing_eval(&phi, &p, &spec).unwrap();
        assert!((r.value + 1.0).abs() < 1e-8, "value {}", r.value);
    }

    #[test]
    fn pairing_complete_the_square() {
        // p = 1, φ = e^{-ε²}  →  -√π e^{1/4}
        let spec = QuadratureSpec::with_tol(1e-10);
        let phi = [GaussianSpec {
            center: 0.0,
            width: 1.0,
            amplitude: 1.0,
        }];
        let p = parse_laurent("1").unwrap();
        let r = pairing_eval(&phi, &p, &spec).unwrap();
        let expect = -PI.sqrt() * (0.25f64).exp();
        assert!((r.value - expect).abs() < 1e-8, "value {}", r.value);
    }

    #[test]
    fn pairing_zero_form() {
        let spec = QuadratureSpec::default();
        let phi = [GaussianSpec {
            center: 0.0,
            width: 1.0,
            amplitude: 1.0,
        }];
        let p = parse_laurent("c - c").unwrap();
        let r = pairing_eval(&phi, &p, &spec).unwrap();
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn pairing_rejects_bad_inputs() {
        let spec = QuadratureSpec::default();
        let p = parse_laurent("c").unwrap();
        assert!(pairing_eval(&[], &p, &spec).is_err());
        let bad = [GaussianSpec {
            center: 0.0,
            width: 0.0,
            amplitude: 1.0,
        }];
        assert!(pairing_eval(&bad, &p, &spec).is_err());
        let q = parse_laurent("q").unwrap();
        let phi = [GaussianSpec {
            center: 0.0,
            width: 1.0,
            amplitude: 1.0,
        }];
        assert!(pairing_eval(&phi, &q, &spec).is_err());
    }
}
