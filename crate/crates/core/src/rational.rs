//! Exact integer and rational scalars.
//!
//! Everything algebraic in this crate is computed over these; floating point
//! only appears in the numeric layer.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::KernelError;

/// Arbitrary-precision integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision reduced fraction with positive denominator.
///
/// `BigRational` keeps gcd(num, den) = 1 and den > 0 canonically.
pub type ExactRational = BigRational;

pub fn rat_int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses "p" or "p/q" into a reduced rational.
pub fn parse_rational(s: &str) -> Result<ExactRational, KernelError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| KernelError::Parse(format!("bad integer `{num}`"), 0))?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| KernelError::Parse(format!("bad integer `{d}`"), 0))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(KernelError::Parse("zero denominator".into(), 0));
    }
    Ok(ExactRational::new(n, d))
}

/// Prints a rational as "p" or "p/q".
pub fn format_rational(r: &ExactRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact binomial coefficient C(n, k).
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact n!.
pub fn factorial(n: u64) -> ExactInt {
    let mut acc = ExactInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

pub fn to_f64(r: &ExactRational) -> f64 {
    // good enough for the desk-scale magnitudes that reach the numeric layer
    let num = r.numer();
    let den = r.denom();
    let nf = num_to_f64(num);
    let df = num_to_f64(den);
    nf / df
}

fn num_to_f64(n: &BigInt) -> f64 {
    let s = n.abs().to_string();
    let v: f64 = s.parse().unwrap_or(f64::INFINITY);
    if n.is_negative() {
        -v
    } else {
        v
    }
}
