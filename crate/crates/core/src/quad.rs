//! Adaptive Simpson quadrature with explicit error certificates.
//!
//! Every result carries the achieved error estimate plus whatever tail bound
//! the caller discarded; callers fail loudly instead of silently degrading.

use serde::{Deserialize, Serialize};

use crate::error::KernelError;

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadratureSpec {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_subdivisions: u32,
    /// Cutoff radius for improper tails; callers must certify the discarded
    /// tail separately.
    pub cutoff: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
            max_subdivisions: 100_000,
            cutoff: 60.0,
        }
    }
}

impl QuadratureSpec {
    pub fn with_tol(tol: f64) -> Self {
        QuadratureSpec {
            abs_tol: tol,
            rel_tol: tol,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<(), KernelError> {
        if self.abs_tol <= 0.0 || self.rel_tol <= 0.0 {
            return Err(KernelError::Precondition("tolerances must be > 0".into()));
        }
        if self.cutoff <= 0.0 {
            return Err(KernelError::Precondition("cutoff must be > 0".into()));
        }
        Ok(())
    }
}

/// Certificate attached to every quadrature value.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct QuadCertificate {
    pub error_estimate: f64,
    pub tail_bound: f64,
    pub subdivisions: u32,
}

impl QuadCertificate {
    pub fn total_error(&self) -> f64 {
        self.error_estimate + self.tail_bound
    }
}

#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub certificate: QuadCertificate,
}

struct Worker<'a, F: Fn(f64) -> f64> {
    f: &'a F,
    budget: u32,
    used: u32,
}

impl<'a, F: Fn(f64) -> f64> Worker<'a, F> {
    fn simpson(&self, a: f64, fa: f64, fm: f64, b: f64, fb: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }

    // returns (value, error_estimate); subdivides left before right so the
    // summation order is deterministic
    fn recurse(
        &mut self,
        a: f64,
        fa: f64,
        m: f64,
        fm: f64,
        b: f64,
        fb: f64,
        whole: f64,
        tol: f64,
    ) -> Result<(f64, f64), KernelError> {
        let lm = 0.5 * (a + m);
        let rm = 0.5 * (m + b);
        let flm = (self.f)(lm);
        let frm = (self.f)(rm);
        let left = self.simpson(a, fa, flm, m, fm);
        let right = self.simpson(m, fm, frm, b, fb);
        let delta = left + right - whole;
        if delta.abs() <= 15.0 * tol {
            return Ok((left + right + delta / 15.0, delta.abs() / 15.0));
        }
        if self.used >= self.budget {
            return Err(KernelError::QuadratureFailure {
                achieved: delta.abs() / 15.0,
                requested: tol,
            });
        }
        self.used += 1;
        let (lv, le) = self.recurse(a, fa, lm, flm, m, fm, left, tol / 2.0)?;
        let (rv, re) = self.recurse(m, fm, rm, frm, b, fb, right, tol / 2.0)?;
        Ok((lv + rv, le + re))
    }
}

/// Integrates f over [a, b]; the spec's absolute tolerance governs
/// subdivision.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    spec: &QuadratureSpec,
) -> Result<QuadResult, KernelError> {
    spec.validate()?;
    if a == b {
        return Ok(QuadResult {
            value: 0.0,
            certificate: QuadCertificate {
                error_estimate: 0.0,
                tail_bound: 0.0,
                subdivisions: 0,
            },
        });
    }
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let mut worker = Worker {
        f: &f,
        budget: spec.max_subdivisions,
        used: 0,
    };
    let whole = worker.simpson(a, fa, fm, b, fb);
    let (value, err) = worker.recurse(a, fa, m, fm, b, fb, whole, spec.abs_tol)?;
    Ok(QuadResult {
        value,
        certificate: QuadCertificate {
            error_estimate: err,
            tail_bound: 0.0,
            subdivisions: worker.used,
        },
    })
}
