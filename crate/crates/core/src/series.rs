//! Truncated power series in an inert variable T over an exact coefficient
//! ring. Arithmetic is exact mod T^{N+1}; the order never changes silently.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::KernelError;
use crate::laurent::LaurentPoly;
use crate::rational::{factorial, rat_int, ExactRational};

/// Coefficient ring for series. Implementors are exact commutative rings
/// with an explicit Q-scalar action.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, k: &ExactRational) -> Self;
    fn is_zero(&self) -> bool;
    /// Zero of the same ring as `self`.
    fn zero_like(&self) -> Self;
    /// Unit of the same ring as `self`.
    fn one_like(&self) -> Self;
    /// Multiplicative inverse when it exists in the ring.
    fn inv(&self) -> Option<Self>;
}

impl Coeff for ExactRational {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, k: &ExactRational) -> Self {
        self * k
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        ExactRational::zero()
    }
    fn one_like(&self) -> Self {
        ExactRational::one()
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

// Series coefficients in a Laurent ring share one variable and tag; the
// panics below only fire on internal misuse, not on user input.
impl Coeff for LaurentPoly {
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other).expect("series coefficients share a ring")
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other).expect("series coefficients share a ring")
    }
    fn scale(&self, k: &ExactRational) -> Self {
        LaurentPoly::scale(self, k).expect("series coefficients share a ring")
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.var(), self.tag())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.var(), self.tag())
    }
    fn inv(&self) -> Option<Self> {
        self.monomial_inverse()
    }
}

/// Coefficients of T^0 .. T^N.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries<C: Coeff> {
    coeffs: Vec<C>,
}

impl<C: Coeff> PowerSeries<C> {
    /// Zero series of order N; `proto` names the coefficient ring.
    pub fn zero(proto: &C, order: usize) -> Self {
        PowerSeries {
            coeffs: vec![proto.zero_like(); order + 1],
        }
    }

    pub fn one(proto: &C, order: usize) -> Self {
        let mut s = Self::zero(proto, order);
        s.coeffs[0] = proto.one_like();
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    /// c * T^k as a series of order N.
    pub fn term(proto: &C, order: usize, k: usize, c: C) -> Self {
        let mut s = Self::zero(proto, order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn proto(&self) -> C {
        self.coeffs[0].zero_like()
    }

    fn check_order(&self, other: &Self) -> Result<(), KernelError> {
        if self.order() != other.order() {
            return Err(KernelError::Precondition(format!(
                "order mismatch: {} vs {}; retruncate explicitly",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// Explicit retruncation to a lower order.
    pub fn truncate(&self, order: usize) -> Result<Self, KernelError> {
        if order > self.order() {
            return Err(KernelError::Precondition(format!(
                "cannot extend order {} to {}",
                self.order(),
                order
            )));
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        self.check_order(other)?;
        Ok(PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn neg(&self) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(C::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, KernelError> {
        self.check_order(other)?;
        let n = self.order();
        let proto = self.proto();
        let mut out = vec![proto.zero_like(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > n {
                    break;
                }
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    /// Multiplies by T^k, dropping coefficients past the order.
    pub fn shift_t(&self, k: usize) -> Self {
        let n = self.order();
        let proto = self.proto();
        let mut out = vec![proto.zero_like(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= n {
                out[i + k] = c.clone();
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<Self, KernelError> {
        let mut acc = Self::one(&self.proto(), self.order());
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Substitutes `inner` for T; inner must have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, KernelError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(KernelError::Precondition(
                "compose requires inner series with zero constant term".into(),
            ));
        }
        let proto = self.proto();
        let n = self.order();
        // Horner from the top coefficient down
        let mut acc = PowerSeries::zero(&proto, n);
        for a in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(a);
        }
        Ok(acc)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn invert(&self) -> Result<Self, KernelError> {
        let a0_inv = self.coeffs[0].inv().ok_or_else(|| {
            KernelError::Precondition("invert requires a unit constant term".into())
        })?;
        let n = self.order();
        let proto = self.proto();
        let mut out = vec![proto.zero_like(); n + 1];
        out[0] = a0_inv.clone();
        for k in 1..=n {
            let mut s = proto.zero_like();
            for j in 1..=k {
                s = s.add(&self.coeffs[j].mul(&out[k - j]));
            }
            out[k] = s.neg().mul(&a0_inv);
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Result<Self, KernelError> {
        if !self.coeffs[0].is_zero() {
            return Err(KernelError::Precondition(
                "exp requires zero constant term".into(),
            ));
        }
        let n = self.order();
        let proto = self.proto();
        let mut acc = Self::one(&proto, n);
        let mut power = Self::one(&proto, n);
        for j in 1..=n {
            power = power.mul(self)?;
            let inv_fact = ExactRational::new(1.into(), factorial(j as u64));
            acc = acc.add(&power.scale(&inv_fact))?;
        }
        Ok(acc)
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Result<Self, KernelError> {
        if self.coeffs[0] != self.coeffs[0].one_like() {
            return Err(KernelError::Precondition(
                "log requires constant term 1".into(),
            ));
        }
        let n = self.order();
        let proto = self.proto();
        let mut u = self.clone();
        u.coeffs[0] = proto.zero_like(); // u = a - 1
        let mut acc = Self::zero(&proto, n);
        let mut power = Self::one(&proto, n);
        for j in 1..=n {
            power = power.mul(&u)?;
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let k = ExactRational::new(sign.into(), (j as i64).into());
            acc = acc.add(&power.scale(&k))?;
        }
        Ok(acc)
    }
}

/// Series over Q from rational coefficients, low order first.
pub fn q_series(coeffs: &[ExactRational]) -> PowerSeries<ExactRational> {
    PowerSeries::from_coeffs(coeffs.to_vec())
}

/// Series over Q from small integers.
pub fn q_series_i64(coeffs: &[i64]) -> PowerSeries<ExactRational> {
    PowerSeries::from_coeffs(coeffs.iter().map(|c| rat_int(*c)).collect())
}
