//! Bernoulli numbers, the degrading functor, and the generating-function
//! identities connecting the classes b and c.

use std::collections::BTreeMap;

use num_traits::One;

use crate::error::KernelError;
use crate::laurent::{LaurentPoly, RingTag, Var};
use crate::rational::{factorial, ExactRational};
use crate::series::{PowerSeries, q_series};

/// Monomial coeff * c^exp in Q[c^{±1}].
pub fn qc(exp: i64, coeff: ExactRational) -> LaurentPoly {
    LaurentPoly::monomial(Var::C, RingTag::Rational, exp, coeff).unwrap()
}

fn qc_proto() -> LaurentPoly {
    LaurentPoly::zero(Var::C, RingTag::Rational)
}

/// B_n in the minus convention, from the operator D/(e^D - 1): B_1 = -1/2.
pub fn bernoulli(n: usize) -> ExactRational {
    // (e^D - 1)/D = sum D^k/(k+1)!
    let coeffs: Vec<ExactRational> = (0..=n)
        .map(|k| ExactRational::new(1.into(), factorial(k as u64 + 1)))
        .collect();
    let inv = q_series(&coeffs).invert().expect("unit constant term");
    inv.coeff(n) * ExactRational::from_integer(factorial(n as u64))
}

/// B_n in the plus convention: B_1 = +1/2, all other indices agree.
pub fn bernoulli_plus(n: usize) -> ExactRational {
    if n == 1 {
        ExactRational::new(1.into(), 2.into())
    } else {
        bernoulli(n)
    }
}

/// b = -T^{-1} log(1 - c^{-1}T) = sum_{k>=1} c^{-k} T^{k-1}/k, to order N.
/// Every term is homogeneous of weight -1.
pub fn b_series(order: usize) -> PowerSeries<LaurentPoly> {
    let coeffs = (0..=order)
        .map(|j| {
            let k = j as i64 + 1;
            qc(-k, ExactRational::new(1.into(), k.into()))
        })
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

/// exp(T * b_series): the generating identity says its T^k coefficient is
/// exactly c^{-k}.
pub fn exp_bt(order: usize) -> Result<PowerSeries<LaurentPoly>, KernelError> {
    b_series(order).shift_t(1).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CFromBOutcome {
    /// b^{-1} B^-(-bT) with b := b_series reduces to the constant c.
    pub plus_sign_matches: bool,
    /// Whether the written minus sign, -b^{-1} B^-(-bT), equals c.
    pub minus_sign_matches: bool,
}

/// Forms b^{-1} B^-(-bT) with b an invertible formal variable, substitutes
/// the b series, and compares against the constant series c.
pub fn c_from_b_check(order: usize) -> Result<CFromBOutcome, KernelError> {
    if order < 2 {
        return Err(KernelError::Precondition("order must be >= 2".into()));
    }
    let bs = b_series(order);
    let proto = qc_proto();
    let mut acc = PowerSeries::zero(&proto, order);
    // m-th term: B_m (-1)^m / m! * b^{m-1} * T^m
    let mut power = bs.invert()?; // b^{-1} at m = 0
    for m in 0..=order {
        if m == 1 {
            power = PowerSeries::one(&proto, order);
        } else if m >= 2 {
            power = power.mul(&bs)?;
        }
        let sign = if m % 2 == 0 { 1 } else { -1 };
        let scalar = bernoulli(m)
            * ExactRational::new(sign.into(), factorial(m as u64));
        acc = acc.add(&power.scale(&scalar).shift_t(m))?;
    }
    let c_const = PowerSeries::term(&proto, order, 0, qc(1, ExactRational::one()));
    Ok(CFromBOutcome {
        plus_sign_matches: acc == c_const,
        minus_sign_matches: acc.neg() == c_const,
    })
}

/// A weight-0 Laurent expression in T with Laurent coefficients: the image
/// of a graded object under the degrading collapse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degraded {
    slots: BTreeMap<i64, LaurentPoly>,
}

impl Degraded {
    pub fn slots(&self) -> impl Iterator<Item = (i64, &LaurentPoly)> {
        self.slots.iter().map(|(e, p)| (*e, p))
    }

    pub fn slot(&self, t_exp: i64) -> Option<&LaurentPoly> {
        self.slots.get(&t_exp)
    }

    /// A degree-d map acts as multiplication by T^d.
    pub fn shift_t(&self, d: i64) -> Self {
        Degraded {
            slots: self.slots.iter().map(|(e, p)| (e + d, p.clone())).collect(),
        }
    }
}

/// Places each homogeneous part of weight w in the T^{-w} slot
/// (weight = cohomological degree / 2: c has weight +1, b_k weight -k).
pub fn degrade(parts: &[(LaurentPoly, i64)]) -> Result<Degraded, KernelError> {
    let mut slots: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
    for (part, weight) in parts {
        if part.is_zero() {
            continue;
        }
        let slot = -weight;
        match slots.remove(&slot) {
            Some(existing) => {
                let sum = existing.add(part)?;
                if !sum.is_zero() {
                    slots.insert(slot, sum);
                }
            }
            None => {
                slots.insert(slot, part.clone());
            }
        }
    }
    Ok(Degraded { slots })
}

/// n-th cumulant of the uniform distribution on [0,1]:
/// n! [t^n] log(sum_j m_j t^j / j!) with moments m_j = 1/(j+1).
pub fn uniform_cumulants(n: usize) -> Result<ExactRational, KernelError> {
    if n < 1 {
        return Err(KernelError::Precondition("n must be >= 1".into()));
    }
    let mgf: Vec<ExactRational> = (0..=n)
        .map(|j| {
            ExactRational::new(
                1.into(),
                factorial(j as u64) * crate::rational::ExactInt::from(j as u64 + 1),
            )
        })
        .collect();
    let cgf = q_series(&mgf).log()?;
    Ok(cgf.coeff(n) * ExactRational::from_integer(factorial(n as u64)))
}

/// A one-form f(c, T) dc with truncated-series coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct OneForm {
    /// Coefficient of dc.
    pub coeff: PowerSeries<LaurentPoly>,
}

/// d/dc applied coefficient-wise, T inert.
pub fn d_dc(series: &PowerSeries<LaurentPoly>) -> OneForm {
    OneForm {
        coeff: series.map_coeffs(|p| p.derivative()),
    }
}

/// Checks d(bT) = -d log(1 - c^{-1}T): both sides must equal
/// -sum_{k=1..N} c^{-k-1} T^k dc.
pub fn one_form_check(order: usize) -> Result<bool, KernelError> {
    let lhs = d_dc(&b_series(order).shift_t(1));

    let proto = qc_proto();
    let one_minus = PowerSeries::one(&proto, order).sub(&PowerSeries::term(
        &proto,
        order,
        1,
        qc(-1, ExactRational::one()),
    ))?;
    let rhs = d_dc(&one_minus.log()?.neg());

    let expected_coeffs: Vec<LaurentPoly> = (0..=order)
        .map(|k| {
            if k == 0 {
                qc_proto()
            } else {
                qc(-(k as i64) - 1, -ExactRational::one())
            }
        })
        .collect();
    let expected = OneForm {
        coeff: PowerSeries::from_coeffs(expected_coeffs),
    };
    Ok(lhs == expected && rhs == expected)
}

/// Taylor series of log(x/(e^x - 1)) to the given order, over Q.
pub fn log_x_over_expm1_series(order: usize) -> PowerSeries<ExactRational> {
    let coeffs: Vec<ExactRational> = (0..=order)
        .map(|k| ExactRational::new(1.into(), factorial(k as u64 + 1)))
        .collect();
    q_series(&coeffs)
        .log()
        .expect("constant term 1")
        .neg()
}
