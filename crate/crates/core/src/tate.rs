//! The boundary operator Z[c^{±1}] -> Γ[b_*], the windowed exactness check,
//! and the Rota-Baxter identity for the negative-degree projector.

use serde::{Deserialize, Serialize};

use crate::divided::DividedPower;
use crate::error::KernelError;
use crate::laurent::{LaurentPoly, Part, RingTag, Var};
use crate::rational::rat_int;

/// An element of Z[c^{±1}]; c^k sits in cohomological degree 2k.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TateElement(LaurentPoly);

impl TateElement {
    pub fn new(p: LaurentPoly) -> Result<Self, KernelError> {
        if p.var() != Var::C {
            return Err(KernelError::VariableMismatch(p.var(), Var::C));
        }
        if p.tag() != RingTag::Integral {
            return Err(KernelError::RingMismatch(
                "Tate elements live over Z".into(),
            ));
        }
        Ok(TateElement(p))
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        TateElement(
            LaurentPoly::monomial(Var::C, RingTag::Integral, exp, rat_int(coeff)).unwrap(),
        )
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }
}

/// ∂: sends c^{-k} to b_{k-1} for k >= 1 and kills non-negative powers.
pub fn boundary(p: &LaurentPoly) -> DividedPower {
    let mut out = DividedPower::zero();
    for (e, c) in p.terms() {
        if e < 0 {
            let k = (-e - 1) as u64;
            out = out.add(&DividedPower::term(k, c.numer().clone()));
        }
    }
    out
}

/// Weight -1 Rota-Baxter identity for R = projection onto negative degrees:
/// R(x)R(y) = R(R(x)y + xR(y) - xy).
pub fn rota_baxter_check(x: &LaurentPoly, y: &LaurentPoly) -> Result<bool, KernelError> {
    let rx = x.project(Part::Neg);
    let ry = y.project(Part::Neg);
    let lhs = rx.mul(&ry)?;
    let inner = rx.mul(y)?.add(&x.mul(&ry)?)?.sub(&x.mul(y)?)?;
    Ok(lhs == inner.project(Part::Neg))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExactnessReport {
    pub window: u32,
    pub pass: bool,
    pub violations: Vec<String>,
}

/// Checks the split short exact sequence on the exponent window [-N, N]:
/// kernel of ∂ is exactly the non-negative span, ∂ hits b_0..b_{N-1}
/// bijectively from c^{-1}..c^{-N}, and π₊ + π₋ recovers the identity.
pub fn exactness_check(n: u32) -> ExactnessReport {
    exactness_check_with(boundary, n)
}

/// Same check against an arbitrary boundary map; used to validate that the
/// harness notices injected faults.
pub fn exactness_check_with<F>(bound: F, n: u32) -> ExactnessReport
where
    F: Fn(&LaurentPoly) -> DividedPower,
{
    let mut violations = Vec::new();
    let n_i = n as i64;

    // non-negative powers must die
    for k in 0..=n_i {
        let p = TateElement::monomial(k, 1);
        if !bound(p.poly()).is_zero() {
            violations.push(format!("c^{k} not in kernel"));
        }
    }

    // c^{-k} must land exactly on b_{k-1}
    for k in 1..=n_i {
        let p = TateElement::monomial(-k, 1);
        let image = bound(p.poly());
        let expect = DividedPower::basis((k - 1) as u64);
        if image != expect {
            violations.push(format!("c^-{k}"));
        }
    }

    // splitting: π₊ + π₋ = id and ∂ determines π₋ on the window
    for k in -n_i..=n_i {
        let p = TateElement::monomial(k, 3);
        let pos = p.poly().project(Part::NonNeg);
        let neg = p.poly().project(Part::Neg);
        let sum = pos.add(&neg).unwrap();
        if &sum != p.poly() {
            violations.push(format!("projection split fails at c^{k}"));
        }
        if bound(&neg) != bound(p.poly()) {
            violations.push(format!("∂ does not factor through π₋ at c^{k}"));
        }
    }

    ExactnessReport {
        window: n,
        pass: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_laurent;

    #[test]
    fn boundary_on_basis() {
        assert!(boundary(TateElement::monomial(3, 1).poly()).is_zero());
        assert_eq!(
            boundary(TateElement::monomial(-1, 1).poly()),
            DividedPower::one()
        );
        assert_eq!(
            boundary(TateElement::monomial(-3, 1).poly()),
            DividedPower::basis(2)
        );
    }

    #[test]
    fn boundary_is_additive() {
        let p = parse_laurent("3*c^-2 + c").unwrap();
        let expect = DividedPower::term(1, crate::rational::ExactInt::from(3));
        assert_eq!(boundary(&p), expect);
    }

    #[test]
    fn boundary_vanishes_on_nonneg_part() {
        let p = parse_laurent("c^2 - 4 + 2*c^-1").unwrap();
        assert_eq!(boundary(&p.project(Part::NonNeg)), DividedPower::zero());
        assert_eq!(boundary(&p), boundary(&p.project(Part::Neg)));
    }

    #[test]
    fn exactness_small_window() {
        let report = exactness_check(1);
        assert!(report.pass, "{:?}", report.violations);
        let report = exactness_check(64);
        assert!(report.pass, "{:?}", report.violations);
    }

    #[test]
    fn injected_fault_is_named() {
        // ∂ c^{-1} := 0
        let faulty = |p: &LaurentPoly| {
            let mut out = DividedPower::zero();
            for (e, c) in p.terms() {
                if e < -1 {
                    out = out.add(&DividedPower::term((-e - 1) as u64, c.numer().clone()));
                }
            }
            out
        };
        let report = exactness_check_with(faulty, 4);
        assert!(!report.pass);
        assert!(report.violations.iter().any(|v| v.contains("c^-1")));
    }

    #[test]
    fn rota_baxter_hand_cases() {
        // x = y = c^{-1}
        let x = parse_laurent("c^-1").unwrap();
        assert!(rota_baxter_check(&x, &x).unwrap());
        // x = y = c + c^{-1}
        let x = parse_laurent("c + c^-1").unwrap();
        assert!(rota_baxter_check(&x, &x).unwrap());
        // no negative part: both sides zero
        let x = parse_laurent("c^2 + 3").unwrap();
        let y = parse_laurent("5*c^7 - 1").unwrap();
        assert!(rota_baxter_check(&x, &y).unwrap());
    }

    #[test]
    fn rota_baxter_hand_expansion_matches() {
        // x = y = c + c^{-1}: LHS = c^{-2}, inner = c^{-2} - c^2
        let x = parse_laurent("c + c^-1").unwrap();
        let rx = x.project(Part::Neg);
        let lhs = rx.mul(&rx).unwrap();
        assert_eq!(lhs, parse_laurent("c^-2").unwrap());
        let inner = rx
            .mul(&x)
            .unwrap()
            .add(&x.mul(&rx).unwrap())
            .unwrap()
            .sub(&x.mul(&x).unwrap())
            .unwrap();
        assert_eq!(inner, parse_laurent("c^-2 - c^2").unwrap());
    }

    #[test]
    fn report_serializes() {
        let report = exactness_check(2);
        let s = serde_json::to_string(&report).unwrap();
        assert!(s.contains("\"window\":2"));
        assert!(s.contains("\"pass\":true"));
    }
}
