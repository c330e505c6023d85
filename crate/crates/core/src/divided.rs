//! The free divided power algebra on one generator.
//!
//! Integral combinations of symbols b_k with b_i b_k = C(i+k, i) b_{i+k};
//! b_0 is the unit and b_k plays b^k/k! after rationalization.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::laurent::{LaurentPoly, RingTag, Var};
use crate::rational::{binomial, factorial, ExactInt, ExactRational};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DividedPower {
    coeffs: BTreeMap<u64, ExactInt>,
}

impl DividedPower {
    pub fn zero() -> Self {
        DividedPower::default()
    }

    /// The basis element b_k.
    pub fn basis(k: u64) -> Self {
        Self::term(k, ExactInt::from(1))
    }

    pub fn term(k: u64, coeff: ExactInt) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(k, coeff);
        }
        DividedPower { coeffs }
    }

    pub fn one() -> Self {
        Self::basis(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u64) -> ExactInt {
        self.coeffs.get(&k).cloned().unwrap_or_else(ExactInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &ExactInt)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let entry = coeffs.entry(*k).or_insert_with(ExactInt::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(k);
            }
        }
        DividedPower { coeffs }
    }

    pub fn neg(&self) -> Self {
        DividedPower {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn scale(&self, s: &ExactInt) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        DividedPower {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * s)).collect(),
        }
    }

    /// Bilinear extension of b_i b_k = C(i+k, i) b_{i+k}.
    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<u64, ExactInt> = BTreeMap::new();
        for (i, ci) in &self.coeffs {
            for (k, ck) in &other.coeffs {
                let idx = i + k;
                let entry = coeffs.entry(idx).or_insert_with(ExactInt::zero);
                *entry += ci * ck * binomial(idx, *i);
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        DividedPower { coeffs }
    }

    /// Ring map into Q[b]: b_k -> b^k / k!.
    pub fn rationalize(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            Var::B,
            RingTag::Rational,
            self.coeffs.iter().map(|(k, c)| {
                (
                    *k as i64,
                    ExactRational::new(c.clone(), factorial(*k)),
                )
            }),
        )
        .expect("rational tag accepts any coefficient")
    }
}

impl fmt::Display for DividedPower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (*k, c == &ExactInt::from(1)) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "b_{k}")?,
                (_, false) => write!(f, "{c}*b_{k}")?,
            }
        }
        Ok(())
    }
}

// JSON shape: {"basis": "divided", "coeffs": {"2": "3"}}
impl Serialize for DividedPower {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            basis: &'static str,
            coeffs: BTreeMap<String, String>,
        }
        Repr {
            basis: "divided",
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, c)| (k.to_string(), c.to_string()))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DividedPower {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            basis: String,
            coeffs: BTreeMap<String, String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.basis != "divided" {
            return Err(D::Error::custom(format!("unknown basis `{}`", repr.basis)));
        }
        let mut out = DividedPower::zero();
        for (k, c) in &repr.coeffs {
            let idx: u64 = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad index `{k}`")))?;
            let coeff: ExactInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient `{c}`")))?;
            out = out.add(&DividedPower::term(idx, coeff));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_laurent;

    #[test]
    fn product_rule() {
        // b_1 b_1 = 2 b_2
        assert_eq!(
            DividedPower::basis(1).mul(&DividedPower::basis(1)),
            DividedPower::term(2, ExactInt::from(2))
        );
        // b_2 b_3 = C(5,2) b_5 = 10 b_5
        assert_eq!(
            DividedPower::basis(2).mul(&DividedPower::basis(3)),
            DividedPower::term(5, ExactInt::from(10))
        );
    }

    #[test]
    fn unit() {
        let x = DividedPower::basis(3)
            .add(&DividedPower::term(1, ExactInt::from(-4)));
        assert_eq!(DividedPower::one().mul(&x), x);
    }

    #[test]
    fn rationalize_basis() {
        assert_eq!(
            DividedPower::basis(2).rationalize(),
            parse_laurent("1/2*b^2").unwrap()
        );
        assert_eq!(
            DividedPower::basis(4).rationalize(),
            parse_laurent("1/24*b^4").unwrap()
        );
    }

    #[test]
    fn rationalize_is_multiplicative_on_squares() {
        // b_1 * b_1 = 2 b_2 and (b)^2 = b^2
        let lhs = DividedPower::basis(1).mul(&DividedPower::basis(1)).rationalize();
        let b = DividedPower::basis(1).rationalize();
        assert_eq!(lhs, b.mul(&b).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let x = DividedPower::term(2, ExactInt::from(3));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"basis":"divided","coeffs":{"2":"3"}}"#);
        let back: DividedPower = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
    }
}
