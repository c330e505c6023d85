//! Sparse Laurent polynomials in one variable over Z or Q.
//!
//! Models the coefficient rings that show up throughout: Z[c^{±1}], Z[q^{±1}]
//! and the rational rings Q[c^{±1}], Q[b]. The monomial c^k carries
//! cohomological degree 2k; degree bookkeeping lives with the callers.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::KernelError;
use crate::rational::{format_rational, parse_rational, rat_int, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Var {
    #[serde(rename = "c")]
    C,
    #[serde(rename = "q")]
    Q,
    #[serde(rename = "b")]
    B,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::C => write!(f, "c"),
            Var::Q => write!(f, "q"),
            Var::B => write!(f, "b"),
        }
    }
}

/// Coefficient ring of a polynomial. Promotion Z -> Q is explicit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingTag {
    Integral,
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    NonNeg,
    Neg,
}

/// Finite map exponent -> coefficient, zeros never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    var: Var,
    tag: RingTag,
    coeffs: BTreeMap<i64, ExactRational>,
}

impl LaurentPoly {
    pub fn zero(var: Var, tag: RingTag) -> Self {
        LaurentPoly {
            var,
            tag,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(var: Var, tag: RingTag) -> Self {
        Self::monomial(var, tag, 0, rat_int(1)).unwrap()
    }

    pub fn constant(var: Var, tag: RingTag, value: ExactRational) -> Result<Self, KernelError> {
        Self::monomial(var, tag, 0, value)
    }

    pub fn monomial(
        var: Var,
        tag: RingTag,
        exp: i64,
        coeff: ExactRational,
    ) -> Result<Self, KernelError> {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            if tag == RingTag::Integral && !coeff.denom().is_one() {
                return Err(KernelError::RingMismatch(format!(
                    "non-integral coefficient {} in Z-tagged polynomial",
                    format_rational(&coeff)
                )));
            }
            coeffs.insert(exp, coeff);
        }
        Ok(LaurentPoly { var, tag, coeffs })
    }

    pub fn from_terms<I>(var: Var, tag: RingTag, terms: I) -> Result<Self, KernelError>
    where
        I: IntoIterator<Item = (i64, ExactRational)>,
    {
        let mut p = Self::zero(var, tag);
        for (e, c) in terms {
            let m = Self::monomial(var, tag, e, c)?;
            p = p.add(&m)?;
        }
        Ok(p)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn tag(&self) -> RingTag {
        self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> ExactRational {
        self.coeffs.get(&exp).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &ExactRational)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn check_compat(&self, other: &Self) -> Result<(), KernelError> {
        if self.var != other.var {
            return Err(KernelError::VariableMismatch(self.var, other.var));
        }
        if self.tag != other.tag {
            return Err(KernelError::RingMismatch(
                "cannot mix Z- and Q-tagged polynomials; promote explicitly".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, KernelError> {
        self.check_compat(other)?;
        let mut coeffs = self.coeffs.clone();
        for (e, c) in &other.coeffs {
            let entry = coeffs.entry(*e).or_insert_with(ExactRational::zero);
            *entry += c;
            if entry.is_zero() {
                coeffs.remove(e);
            }
        }
        Ok(LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs,
        })
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, KernelError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, KernelError> {
        self.check_compat(other)?;
        let mut coeffs: BTreeMap<i64, ExactRational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = e1 + e2;
                let entry = coeffs.entry(e).or_insert_with(ExactRational::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs,
        })
    }

    pub fn scale(&self, k: &ExactRational) -> Result<Self, KernelError> {
        if k.is_zero() {
            return Ok(Self::zero(self.var, self.tag));
        }
        if self.tag == RingTag::Integral && !k.denom().is_one() {
            return Err(KernelError::RingMismatch(
                "rational scalar on Z-tagged polynomial".into(),
            ));
        }
        Ok(LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        })
    }

    /// Keeps the exponents >= 0 (NonNeg) or < 0 (Neg); the two parts sum back
    /// to the original.
    pub fn project(&self, part: Part) -> Self {
        let keep = |e: i64| match part {
            Part::NonNeg => e >= 0,
            Part::Neg => e < 0,
        };
        LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(e, _)| keep(**e))
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Explicit promotion Z -> Q.
    pub fn promote(&self) -> Self {
        LaurentPoly {
            var: self.var,
            tag: RingTag::Rational,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Formal d/dvar: a x^k -> a k x^{k-1}.
    pub fn derivative(&self) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in &self.coeffs {
            if *e != 0 {
                let d = c * rat_int(*e);
                if !d.is_zero() {
                    coeffs.insert(e - 1, d);
                }
            }
        }
        LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs,
        }
    }

    /// Multiplies by var^k.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Inverse when the polynomial is a single monomial with invertible
    /// coefficient; None otherwise.
    pub fn monomial_inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().unwrap();
        let inv = c.recip();
        if self.tag == RingTag::Integral && !inv.denom().is_one() {
            return None;
        }
        Some(LaurentPoly {
            var: self.var,
            tag: self.tag,
            coeffs: BTreeMap::from([(-e, inv)]),
        })
    }

    /// Numeric evaluation at a point (for the pairing quadrature).
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .map(|(e, c)| crate::rational::to_f64(c) * x.powi(*e as i32))
            .sum()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_str = format_rational(&mag);
            match (*e, mag.is_one()) {
                (0, _) => write!(f, "{coeff_str}")?,
                (1, true) => write!(f, "{}", self.var)?,
                (1, false) => write!(f, "{}*{}", coeff_str, self.var)?,
                (_, true) => write!(f, "{}^{}", self.var, e)?,
                (_, false) => write!(f, "{}*{}^{}", coeff_str, self.var, e)?,
            }
        }
        Ok(())
    }
}

// JSON shape: {"var": "c", "coeffs": {"-2": "3", "0": "1/2"}}
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            var: Var,
            coeffs: BTreeMap<String, String>,
            #[serde(skip_serializing_if = "Option::is_none")]
            ring: Option<&'a str>,
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.to_string(), format_rational(c)))
            .collect();
        let ring = match self.tag {
            RingTag::Integral => None,
            RingTag::Rational => Some("Q"),
        };
        Repr {
            var: self.var,
            coeffs,
            ring,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            var: Var,
            coeffs: BTreeMap<String, String>,
            #[serde(default)]
            ring: Option<String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut terms = Vec::new();
        for (e, c) in &repr.coeffs {
            let exp: i64 = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{e}`")))?;
            let coeff = parse_rational(c).map_err(D::Error::custom)?;
            terms.push((exp, coeff));
        }
        let tag = match repr.ring.as_deref() {
            Some("Q") => RingTag::Rational,
            Some("Z") | None => {
                if terms.iter().all(|(_, c)| c.denom().is_one()) {
                    RingTag::Integral
                } else {
                    RingTag::Rational
                }
            }
            Some(other) => return Err(D::Error::custom(format!("unknown ring `{other}`"))),
        };
        LaurentPoly::from_terms(repr.var, tag, terms).map_err(D::Error::custom)
    }
}
