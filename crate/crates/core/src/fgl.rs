//! Formal group laws and the Cartier character law
//! chi(F(T0, T1)) = chi(T0) * chi(T1), checked on truncated bivariate series.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::KernelError;
use crate::rational::{format_rational, parse_rational, rat_int, ExactRational};
use crate::series::PowerSeries;

/// Sparse bivariate polynomial truncated at total degree `order`.
#[derive(Debug, Clone, PartialEq)]
pub struct BiSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32), ExactRational>,
}

impl BiSeries {
    pub fn zero(order: u32) -> Self {
        BiSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn term(order: u32, i: u32, j: u32, c: ExactRational) -> Self {
        let mut s = Self::zero(order);
        if i + j <= order && !c.is_zero() {
            s.coeffs.insert((i, j), c);
        }
        s
    }

    pub fn one(order: u32) -> Self {
        Self::term(order, 0, 0, ExactRational::one())
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> ExactRational {
        self.coeffs
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let e = coeffs.entry(*k).or_insert_with(ExactRational::zero);
            *e += c;
            if e.is_zero() {
                coeffs.remove(k);
            }
        }
        BiSeries {
            order: self.order,
            coeffs,
        }
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.order);
        }
        BiSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order);
        let mut coeffs: BTreeMap<(u32, u32), ExactRational> = BTreeMap::new();
        for ((i1, j1), c1) in &self.coeffs {
            for ((i2, j2), c2) in &other.coeffs {
                let (i, j) = (i1 + i2, j1 + j2);
                if i + j > self.order {
                    continue;
                }
                let e = coeffs.entry((i, j)).or_insert_with(ExactRational::zero);
                *e += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        BiSeries {
            order: self.order,
            coeffs,
        }
    }
}

/// Sparse trivariate polynomial truncated at total degree `order`;
/// only used to verify associativity.
#[derive(Debug, Clone, PartialEq)]
struct TriSeries {
    order: u32,
    coeffs: BTreeMap<(u32, u32, u32), ExactRational>,
}

impl TriSeries {
    fn zero(order: u32) -> Self {
        TriSeries {
            order,
            coeffs: BTreeMap::new(),
        }
    }

    fn term(order: u32, e: (u32, u32, u32), c: ExactRational) -> Self {
        let mut s = Self::zero(order);
        if e.0 + e.1 + e.2 <= order && !c.is_zero() {
            s.coeffs.insert(e, c);
        }
        s
    }

    fn one(order: u32) -> Self {
        Self::term(order, (0, 0, 0), ExactRational::one())
    }

    fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        for (k, c) in &other.coeffs {
            let e = coeffs.entry(*k).or_insert_with(ExactRational::zero);
            *e += c;
            if e.is_zero() {
                coeffs.remove(k);
            }
        }
        TriSeries {
            order: self.order,
            coeffs,
        }
    }

    fn scale(&self, k: &ExactRational) -> Self {
        if k.is_zero() {
            return Self::zero(self.order);
        }
        TriSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<(u32, u32, u32), ExactRational> = BTreeMap::new();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                let e = (e1.0 + e2.0, e1.1 + e2.1, e1.2 + e2.2);
                if e.0 + e.1 + e.2 > self.order {
                    continue;
                }
                let entry = coeffs.entry(e).or_insert_with(ExactRational::zero);
                *entry += c1 * c2;
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        TriSeries {
            order: self.order,
            coeffs,
        }
    }
}

/// F(T0, T1) = sum a_ij T0^i T1^j, stored for i + j <= order.
#[derive(Debug, Clone, PartialEq)]
pub struct FormalGroupLaw {
    order: u32,
    a: BTreeMap<(u32, u32), ExactRational>,
}

impl FormalGroupLaw {
    pub fn new(
        order: u32,
        coeffs: impl IntoIterator<Item = ((u32, u32), ExactRational)>,
    ) -> Result<Self, KernelError> {
        let mut a = BTreeMap::new();
        for ((i, j), c) in coeffs {
            if i + j <= order && !c.is_zero() {
                a.insert((i, j), c);
            }
        }
        let fgl = FormalGroupLaw { order, a };
        fgl.check_axioms()?;
        Ok(fgl)
    }

    /// F = T0 + T1.
    pub fn additive(order: u32) -> Self {
        let mut a = BTreeMap::new();
        a.insert((1, 0), rat_int(1));
        a.insert((0, 1), rat_int(1));
        FormalGroupLaw { order, a }
    }

    /// F = T0 + T1 + T0 T1 (the multiplicative law).
    pub fn multiplicative(order: u32) -> Self {
        let mut a = BTreeMap::new();
        a.insert((1, 0), rat_int(1));
        a.insert((0, 1), rat_int(1));
        a.insert((1, 1), rat_int(1));
        FormalGroupLaw { order, a }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeff(&self, i: u32, j: u32) -> ExactRational {
        self.a
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn as_biseries(&self) -> BiSeries {
        let mut s = BiSeries::zero(self.order);
        for ((i, j), c) in &self.a {
            s = s.add(&BiSeries::term(self.order, *i, *j, c.clone()));
        }
        s
    }

    /// Unitality F(T,0) = T = F(0,T), commutativity, and associativity
    /// mod total degree order+1.
    pub fn check_axioms(&self) -> Result<(), KernelError> {
        for ((i, j), c) in &self.a {
            // F(T,0): only j = 0 terms survive
            if *j == 0 && !(*i == 1 && c.is_one()) {
                return Err(KernelError::Precondition(format!(
                    "unitality fails at T0^{i}"
                )));
            }
            if *i == 0 && !(*j == 1 && c.is_one()) {
                return Err(KernelError::Precondition(format!(
                    "unitality fails at T1^{j}"
                )));
            }
            if self.coeff(*j, *i) != *c {
                return Err(KernelError::Precondition(format!(
                    "commutativity fails at ({i},{j})"
                )));
            }
        }
        if !self.is_associative() {
            return Err(KernelError::Precondition(
                "associativity fails mod truncation degree".into(),
            ));
        }
        Ok(())
    }

    fn is_associative(&self) -> bool {
        let n = self.order;
        let t0 = TriSeries::term(n, (1, 0, 0), ExactRational::one());
        let t1 = TriSeries::term(n, (0, 1, 0), ExactRational::one());
        let t2 = TriSeries::term(n, (0, 0, 1), ExactRational::one());
        let f01 = self.apply_tri(&t0, &t1);
        let f12 = self.apply_tri(&t1, &t2);
        self.apply_tri(&f01, &t2) == self.apply_tri(&t0, &f12)
    }

    /// F(x, y) for trivariate arguments with zero constant term.
    fn apply_tri(&self, x: &TriSeries, y: &TriSeries) -> TriSeries {
        let n = self.order;
        let max_i = self.a.keys().map(|(i, _)| *i).max().unwrap_or(0);
        let max_j = self.a.keys().map(|(_, j)| *j).max().unwrap_or(0);
        let mut xp = vec![TriSeries::one(n)];
        for _ in 1..=max_i.min(n) {
            xp.push(xp.last().unwrap().mul(x));
        }
        let mut yp = vec![TriSeries::one(n)];
        for _ in 1..=max_j.min(n) {
            yp.push(yp.last().unwrap().mul(y));
        }
        let mut acc = TriSeries::zero(n);
        for ((i, j), c) in &self.a {
            if (*i as usize) < xp.len() && (*j as usize) < yp.len() {
                acc = acc.add(&xp[*i as usize].mul(&yp[*j as usize]).scale(c));
            }
        }
        acc
    }
}

// JSON shape: {"order": N, "a": {"1,1": "1"}}
impl Serialize for FormalGroupLaw {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            order: u32,
            a: BTreeMap<String, String>,
        }
        Repr {
            order: self.order,
            a: self
                .a
                .iter()
                .map(|((i, j), c)| (format!("{i},{j}"), format_rational(c)))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FormalGroupLaw {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            order: u32,
            a: BTreeMap<String, String>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut coeffs = Vec::new();
        for (key, val) in &repr.a {
            let (i, j) = key
                .split_once(',')
                .ok_or_else(|| D::Error::custom(format!("bad exponent pair `{key}`")))?;
            let i: u32 = i
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{i}`")))?;
            let j: u32 = j
                .trim()
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent `{j}`")))?;
            let c = parse_rational(val).map_err(D::Error::custom)?;
            coeffs.push(((i, j), c));
        }
        FormalGroupLaw::new(repr.order, coeffs).map_err(D::Error::custom)
    }
}

/// chi(F(T0,T1)) == chi(T0) * chi(T1) mod total degree order+1.
/// chi must have constant term 1.
pub fn fgl_character_check(
    fgl: &FormalGroupLaw,
    chi: &PowerSeries<ExactRational>,
) -> Result<bool, KernelError> {
    if !chi.coeff(0).is_one() {
        return Err(KernelError::Precondition(
            "character must have constant term 1".into(),
        ));
    }
    let n = fgl.order();
    let f = fgl.as_biseries();
    // chi(F): F has zero constant term, so powers past n vanish
    let mut lhs = BiSeries::zero(n);
    let mut fp = BiSeries::one(n);
    for k in 0..=(n as usize).min(chi.order()) {
        if k > 0 {
            fp = fp.mul(&f);
        }
        lhs = lhs.add(&fp.scale(chi.coeff(k)));
    }
    // chi(T0) * chi(T1)
    let mut chi0 = BiSeries::zero(n);
    let mut chi1 = BiSeries::zero(n);
    for k in 0..=(n as usize).min(chi.order()) {
        chi0 = chi0.add(&BiSeries::term(n, k as u32, 0, chi.coeff(k).clone()));
        chi1 = chi1.add(&BiSeries::term(n, 0, k as u32, chi.coeff(k).clone()));
    }
    Ok(lhs == chi0.mul(&chi1))
}
