//! The (1-q)-localized Laurent ring in q over Z.
//!
//! An element is num * (1-q)^{-m}; the normal form cancels every factor of
//! (1-q) shared between numerator and pole, decided by exact division over Z.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::KernelError;
use crate::laurent::{LaurentPoly, RingTag, Var};
use crate::rational::ExactRational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalizedLaurent {
    num: LaurentPoly,
    pole_order: u32,
}

/// Exact quotient p / (1-q) when the division is exact, None otherwise.
/// Works on Laurent input by shifting to an ordinary polynomial first.
fn div_exact_one_minus_q(p: &LaurentPoly) -> Option<LaurentPoly> {
    if p.is_zero() {
        return Some(p.clone());
    }
    let low = p.min_exp().unwrap();
    let high = p.max_exp().unwrap();
    let deg = (high - low) as usize;
    // dense coefficients of the shifted ordinary polynomial q^{-low} p
    let mut a: Vec<ExactRational> = vec![ExactRational::zero(); deg + 1];
    for (e, c) in p.terms() {
        a[(e - low) as usize] = c.clone();
    }
    // p = (q-1) g + p(1); quotient by (1-q) is -g
    let mut g: Vec<ExactRational> = vec![ExactRational::zero(); deg];
    let mut carry = ExactRational::zero();
    for i in (1..=deg).rev() {
        carry = &a[i] + &carry;
        g[i - 1] = carry.clone();
    }
    let remainder = &a[0] + &carry;
    if !remainder.is_zero() {
        return None;
    }
    LaurentPoly::from_terms(
        p.var(),
        p.tag(),
        g.into_iter().enumerate().map(|(i, c)| (i as i64 + low, -c)),
    )
    .ok()
}

impl LocalizedLaurent {
    /// Builds num * (1-q)^{-m} in normal form.
    pub fn normalize(num: LaurentPoly, m: u32) -> Result<Self, KernelError> {
        if num.var() != Var::Q {
            return Err(KernelError::VariableMismatch(num.var(), Var::Q));
        }
        if num.tag() != RingTag::Integral {
            return Err(KernelError::RingMismatch(
                "localized ring takes integral coefficients".into(),
            ));
        }
        if num.is_zero() {
            return Ok(LocalizedLaurent {
                num,
                pole_order: 0,
            });
        }
        let mut num = num;
        let mut m = m;
        while m > 0 {
            match div_exact_one_minus_q(&num) {
                Some(quot) => {
                    num = quot;
                    m -= 1;
                }
                None => break,
            }
        }
        Ok(LocalizedLaurent {
            num,
            pole_order: m,
        })
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn mul(&self, other: &Self) -> Result<Self, KernelError> {
        Self::normalize(
            self.num.mul(&other.num)?,
            self.pole_order + other.pole_order,
        )
    }
}
