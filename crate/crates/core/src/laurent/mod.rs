//! Exact one-variable Laurent polynomials over the integers.
//!
//! A [`LaurentPoly`] is a sparse map from exponent to nonzero coefficient.
//! Knot polynomials are only defined up to multiplication by `±t^k`, so
//! comparisons between independently computed values go through
//! [`UnitNormalForm`].

mod conditions;
mod factor;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use conditions::{fox_milnor, miyazaki_divisor};
pub use factor::{factor, is_irreducible, Factorization};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("the zero polynomial has no normal form or factorization")]
    ZeroPolynomial,
    #[error("irreducibility of a constant is not defined here")]
    ConstantPolynomial,
}

/// Laurent polynomial with arbitrary-precision integer coefficients.
///
/// No stored coefficient is ever zero; the zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * t^exp`
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// The variable `t` itself.
    pub fn var() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds `sum coeffs[i] * t^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (low + i as i64, BigInt::from(c))),
        )
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub(crate) fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// `±t^k`
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Difference between the largest and smallest exponent (0 for zero).
    pub fn span(&self) -> i64 {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => hi - lo,
            _ => 0,
        }
    }

    pub fn lowest_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiplies by `t^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        }
    }

    /// `t -> t^{-1}`
    pub fn involute(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Substitutes `t -> t^k`, i.e. multiplies every exponent by `k`.
    pub fn stretch(&self, k: i64) -> Self {
        assert!(k != 0, "stretch by zero collapses exponents");
        Self {
            terms: self.terms.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
        }
    }

    /// Divides every exponent by `k`, or `None` if some exponent is not a
    /// multiple of `k`.
    pub fn compress(&self, k: i64) -> Option<Self> {
        assert!(k != 0);
        let mut terms = BTreeMap::new();
        for (&e, c) in &self.terms {
            if e % k != 0 {
                return None;
            }
            terms.insert(e / k, c.clone());
        }
        Some(Self { terms })
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Value at `t = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Value at `t = -1`.
    pub fn eval_minus_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| if e.rem_euclid(2) == 0 { c.clone() } else { -c })
            .sum()
    }

    /// gcd of all coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Exact division in the Laurent ring `Z[t, t^{-1}]`; `None` when `d`
    /// does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d_lo = d.min_exp().unwrap();
        let d_hi = d.max_exp().unwrap();
        let d_lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let lo_limit = self.min_exp().unwrap() - d_lo;
        while let Some(hi) = rem.max_exp() {
            let k = hi - d_hi;
            if k < lo_limit {
                return None;
            }
            let (q, r) = rem.terms[&hi].div_rem(&d_lead);
            if !r.is_zero() {
                return None;
            }
            for (&e, c) in &d.terms {
                rem.add_term(e + k, -(c * &q));
            }
            quot.add_term(k, q);
        }
        Some(quot)
    }

    /// The unit-normalized associate: minimum exponent 0, positive lowest
    /// coefficient.
    pub fn normalize(&self) -> Result<UnitNormalForm, LaurentError> {
        let lo = self.min_exp().ok_or(LaurentError::ZeroPolynomial)?;
        let mut p = self.shift(-lo);
        if p.lowest_coeff().is_some_and(|c| c.is_negative()) {
            p = -p;
        }
        Ok(UnitNormalForm(p))
    }

    /// True when `self = ±t^k * other` for some `k`.
    pub fn is_associate(&self, other: &LaurentPoly) -> bool {
        match (self.normalize(), other.normalize()) {
            (Ok(a), Ok(b)) => a == b,
            (Err(_), Err(_)) => true,
            _ => false,
        }
    }

    /// Symmetric under `t -> t^{-1}` up to units.
    pub fn is_reciprocal(&self) -> bool {
        self.is_associate(&self.involute())
    }

    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}{mono}"));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("t"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| acc * p)
    }
}

// Serialized as a sparse list of [exponent, coefficient] pairs in ascending
// exponent order. Coefficients that do not fit in an i64 are written as
// decimal strings.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&e, c) in &self.terms {
            match i64::try_from(c) {
                Ok(small) => seq.serialize_element(&(e, small))?,
                Err(_) => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Int(i64),
    Text(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PairsVisitor;
        impl<'de> Visitor<'de> for PairsVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a list of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                let mut last: Option<i64> = None;
                while let Some((e, c)) = seq.next_element::<(i64, CoeffRepr)>()? {
                    if last.is_some_and(|l| l >= e) {
                        return Err(de::Error::custom("exponents must be strictly ascending"));
                    }
                    last = Some(e);
                    let c = match c {
                        CoeffRepr::Int(v) => BigInt::from(v),
                        CoeffRepr::Text(s) => s.parse().map_err(de::Error::custom)?,
                    };
                    if c.is_zero() {
                        return Err(de::Error::custom("zero coefficients are not stored"));
                    }
                    p.add_term(e, c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_seq(PairsVisitor)
    }
}

/// Associate of a nonzero Laurent polynomial with minimum exponent 0 and a
/// positive lowest coefficient. Two polynomials are equal up to `±t^k`
/// exactly when their normal forms are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct UnitNormalForm(LaurentPoly);

impl UnitNormalForm {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    /// Coefficients in ascending degree, starting at `t^0`.
    pub fn coeff_vec(&self) -> Vec<BigInt> {
        let hi = self.0.max_exp().unwrap_or(0);
        (0..=hi).map(|e| self.0.coeff(e)).collect()
    }
}

impl fmt::Display for UnitNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for UnitNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UnitNormalForm({})", self.0)
    }
}

impl<'de> Deserialize<'de> for UnitNormalForm {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let p = LaurentPoly::deserialize(deserializer)?;
        let n = p.normalize().map_err(de::Error::custom)?;
        if n.poly() != &p {
            return Err(de::Error::custom("polynomial is not in unit normal form"));
        }
        Ok(n)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree span first, then by coefficient list from the lowest
/// exponent up. Used only to make factor lists deterministic.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.span()
            .cmp(&other.span())
            .then_with(|| self.terms.iter().cmp(other.terms.iter()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    fn delta63() -> LaurentPoly {
        p(0, &[1, -3, 5, -3, 1])
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        assert_eq!(&p(0, &[1, -1]) + &LaurentPoly::var(), LaurentPoly::one());
        let q = p(-2, &[4, 0, 7]);
        assert_eq!(&LaurentPoly::zero() + &q, q);
        let sum = &delta63() + &p(0, &[-1, 3, -5, 3, -1]);
        assert!(sum.is_zero());
        assert_eq!(sum.len(), 0);
    }

    #[test]
    fn mul_examples() {
        let a = p(0, &[1, -1]);
        let b = p(-1, &[-1, 1]);
        assert_eq!(&a * &b, p(-1, &[-1, 2, -1]));
        assert_eq!(&delta63() * &LaurentPoly::one(), delta63());
        // schoolbook convolution, written out independently
        let c = [1i64, -3, 5, -3, 1];
        let mut sq = [0i64; 9];
        for i in 0..5 {
            for j in 0..5 {
                sq[i + j] += c[i] * c[j];
            }
        }
        let got = delta63().pow(2);
        assert_eq!(got, p(0, &sq));
        assert_eq!(got.span(), 8);
        assert_eq!(sq, [1, -6, 19, -36, 45, -36, 19, -6, 1]);
    }

    #[test]
    fn normalize_examples() {
        let sym = p(-2, &[1, -3, 5, -3, 1]);
        assert_eq!(sym.normalize().unwrap().poly(), &delta63());
        assert_eq!(
            LaurentPoly::monomial(-1, 3).normalize().unwrap().poly(),
            &LaurentPoly::one()
        );
        let n = delta63().normalize().unwrap();
        assert_eq!(n.poly().normalize().unwrap(), n);
        assert_eq!(LaurentPoly::zero().normalize(), Err(LaurentError::ZeroPolynomial));
    }

    #[test]
    fn involute_examples() {
        assert_eq!(p(0, &[1, -2]).involute(), p(-1, &[-2, 1]));
        assert!(delta63().is_reciprocal());
        let q = p(-3, &[2, 0, -1, 9]);
        assert_eq!(q.involute().involute(), q);
    }

    #[test]
    fn div_exact_roundtrip_and_failure() {
        let a = p(-1, &[3, 0, -2]);
        let b = p(2, &[1, 1, 5]);
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!(p(0, &[1, 1]).div_exact(&p(0, &[1, 2])), None);
        assert_eq!(p(0, &[2]).div_exact(&p(0, &[4])), None);
        assert_eq!(LaurentPoly::zero().div_exact(&a), Some(LaurentPoly::zero()));
    }

    #[test]
    fn evaluation_at_units() {
        assert_eq!(delta63().eval_one(), BigInt::from(1));
        assert_eq!(delta63().eval_minus_one(), BigInt::from(13));
        assert_eq!(p(-1, &[1, -1, 1]).eval_minus_one(), BigInt::from(-3));
    }

    #[test]
    fn json_pairs_format() {
        let q = p(-1, &[2, 0, -7]);
        let s = serde_json::to_string(&q).unwrap();
        assert_eq!(s, "[[-1,2],[1,-7]]");
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, q);
        let big = LaurentPoly::monomial(BigInt::from(10).pow(30u32), 2);
        let s = serde_json::to_string(&big).unwrap();
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), big);
        assert!(serde_json::from_str::<LaurentPoly>("[[1,2],[0,1]]").is_err());
    }

    #[test]
    fn display() {
        assert_eq!(delta63().to_string(), "1 - 3t + 5t^2 - 3t^3 + t^4");
        assert_eq!(p(-4, &[-1, 1, 0, 1]).to_string(), "-t^-4 + t^-3 + t^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
    }
}
