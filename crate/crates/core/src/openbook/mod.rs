//! Open books on a once-punctured surface, seen through their action on
//! first homology.
//!
//! A right-handed Dehn twist along a curve with class `v` acts on
//! `H_1(F)` as the transvection `x -> x + s <x, v> v`, where
//! `<x, y> = x^T Omega y` and `s` is [`TRANSVECTION_SIGN`]. Words are
//! written like compositions of maps: the rightmost letter acts first.

mod family;
mod matrix;
mod surgery;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::{bareiss_determinant, AlexanderPoly};
use crate::laurent::LaurentPoly;

pub use family::{
    family_open_book, family_surgery_description, same_fibered_knot, word_for_an, word_for_an_conjugated,
    FAMILY_BOUND,
};
pub use matrix::IntMatrix;
pub use surgery::{d3, signature, SurgeryDescription};

/// Sign `s` in `x -> x + s <x, v> v`. With `+1` the word
/// `t_d^{-1} t_b t_c^{-1} t_a` on the chain `a, b, c, d` has characteristic
/// polynomial `1 - 3t + 5t^2 - 3t^3 + t^4`; `-1` gives the same polynomial
/// for that word, so the choice is a convention kept in one place.
pub const TRANSVECTION_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpenBookError {
    #[error("intersection form must be a skew-symmetric {expected}x{expected} matrix with determinant 1")]
    BadForm { expected: usize },
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("curve {curve:?} has {got} coordinates, expected {expected}")]
    BadLength { curve: String, expected: usize, got: usize },
    #[error("twist exponent on {0:?} is zero")]
    ZeroExponent(String),
    #[error("only one boundary component is supported, got {0}")]
    Boundary(usize),
    #[error("linking matrix is not symmetric")]
    NotSymmetric,
    #[error("{rotations} rotation numbers for a {size}x{size} linking matrix")]
    RotationLength { rotations: usize, size: usize },
    #[error("linking matrix is singular; the d3 formula does not apply")]
    Singular,
    #[error("|n| = {n} exceeds the bound {bound}")]
    Bound { n: i64, bound: i64 },
}

/// Genus-`g` surface with one boundary component and a symplectic basis
/// of its first homology.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceModel {
    genus: usize,
    omega: IntMatrix,
}

impl SurfaceModel {
    pub fn new(genus: usize, omega: Vec<Vec<i64>>) -> Result<Self, OpenBookError> {
        let n = 2 * genus;
        let bad = OpenBookError::BadForm { expected: n };
        if omega.len() != n || omega.iter().any(|r| r.len() != n) {
            return Err(bad);
        }
        let m = IntMatrix::from_i64(&omega);
        if m.transpose() != -&m || m.det() != BigInt::one() {
            return Err(bad);
        }
        Ok(Self { genus, omega: m })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn rank(&self) -> usize {
        2 * self.genus
    }

    pub fn omega(&self) -> &IntMatrix {
        &self.omega
    }

    /// `<x, y> = x^T Omega y`
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, xi) in x.iter().enumerate() {
            for (j, yj) in y.iter().enumerate() {
                s += xi * self.omega.get_i64(i, j) * yj;
            }
        }
        s
    }

    /// `T_v^e = I + e s v (Omega v)^T`. The correction is nilpotent since
    /// `<v, v> = 0`, so powers are linear in `e`.
    pub fn transvection_power(&self, v: &[i64], e: i64) -> IntMatrix {
        let n = self.rank();
        let w: Vec<i64> = (0..n).map(|j| (0..n).map(|k| self.omega.get_i64(j, k) * v[k]).sum()).collect();
        let mut m = IntMatrix::identity(n);
        for i in 0..n {
            for j in 0..n {
                let add = e * TRANSVECTION_SIGN * v[i] * w[j];
                if add != 0 {
                    m.add_at(i, j, add);
                }
            }
        }
        m
    }

    pub fn transvection(&self, v: &[i64]) -> IntMatrix {
        self.transvection_power(v, 1)
    }
}

/// A named simple closed curve, recorded by its homology class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveClass {
    pub name: String,
    pub h1: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Letter {
    pub curve: String,
    pub exp: i64,
}

/// Product of Dehn twist powers; `letters[0]` is the leftmost factor.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TwistWord {
    pub letters: Vec<Letter>,
}

impl TwistWord {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends `t_curve^exp` on the right; zero exponents are dropped.
    pub fn then(mut self, curve: &str, exp: i64) -> Self {
        if exp != 0 {
            self.letters.push(Letter { curve: curve.to_string(), exp });
        }
        self
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { curve: l.curve.clone(), exp: -l.exp })
            .collect();
        Self { letters }
    }

    pub fn concat(&self, other: &TwistWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        Self { letters }
    }

    /// Number of single twists after expanding powers.
    pub fn expanded_len(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }
}

/// Surface, named curves and a monodromy word; the open-book file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpenBook {
    pub genus: usize,
    pub boundary: usize,
    pub omega: Vec<Vec<i64>>,
    pub curves: BTreeMap<String, Vec<i64>>,
    pub word: TwistWord,
}

impl OpenBook {
    pub fn surface(&self) -> Result<SurfaceModel, OpenBookError> {
        if self.boundary != 1 {
            return Err(OpenBookError::Boundary(self.boundary));
        }
        SurfaceModel::new(self.genus, self.omega.clone())
    }

    pub fn curve(&self, name: &str) -> Result<CurveClass, OpenBookError> {
        let h1 = self.curves.get(name).ok_or_else(|| OpenBookError::UnknownCurve(name.to_string()))?;
        if h1.len() != 2 * self.genus {
            return Err(OpenBookError::BadLength { curve: name.to_string(), expected: 2 * self.genus, got: h1.len() });
        }
        Ok(CurveClass { name: name.to_string(), h1: h1.clone() })
    }

    pub fn with_word(&self, word: TwistWord) -> Self {
        Self { word, ..self.clone() }
    }

    /// Matrix of the monodromy on `H_1(F)`, acting on column vectors.
    pub fn homological_action(&self) -> Result<IntMatrix, OpenBookError> {
        homological_action(&self.surface()?, self, &self.word)
    }

    pub fn alexander(&self) -> Result<AlexanderPoly, OpenBookError> {
        Ok(alexander_from_action(&self.homological_action()?))
    }
}

/// Product of the letters' transvection powers in written order.
pub fn homological_action(s: &SurfaceModel, book: &OpenBook, w: &TwistWord) -> Result<IntMatrix, OpenBookError> {
    let mut m = IntMatrix::identity(s.rank());
    for l in &w.letters {
        if l.exp == 0 {
            return Err(OpenBookError::ZeroExponent(l.curve.clone()));
        }
        let c = book.curve(&l.curve)?;
        m = &m * &s.transvection_power(&c.h1, l.exp);
    }
    Ok(m)
}

/// `det(t I - H)` in unit normal form.
pub fn alexander_from_action(h: &IntMatrix) -> AlexanderPoly {
    let n = h.rows();
    let t = LaurentPoly::var();
    let m: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let hij = LaurentPoly::constant(h.get(i, j).clone());
                    if i == j {
                        &t - &hij
                    } else {
                        -hij
                    }
                })
                .collect()
        })
        .collect();
    let p = bareiss_determinant(m);
    debug_assert!(!p.is_zero());
    AlexanderPoly::from_poly(&p).expect("characteristic polynomial is monic")
}

pub fn alexander_from_monodromy(book: &OpenBook) -> Result<AlexanderPoly, OpenBookError> {
    book.alexander()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> SurfaceModel {
        SurfaceModel::new(2, family::chain_omega()).unwrap()
    }

    #[test]
    fn form_validation() {
        assert!(SurfaceModel::new(1, vec![vec![0, 1], vec![-1, 0]]).is_ok());
        assert!(SurfaceModel::new(1, vec![vec![0, 2], vec![-2, 0]]).is_err());
        assert!(SurfaceModel::new(1, vec![vec![1, 1], vec![-1, 0]]).is_err());
        assert!(SurfaceModel::new(2, vec![vec![0, 1], vec![-1, 0]]).is_err());
    }

    #[test]
    fn transvection_basics() {
        let s = chain();
        assert_eq!(s.transvection(&[0, 0, 0, 0]), IntMatrix::identity(4));
        for v in [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 1], [2, -1, 0, 3]] {
            let t = s.transvection(&v);
            assert_eq!(&t * &s.transvection_power(&v, -1), IntMatrix::identity(4));
            assert_eq!(&(&t.transpose() * s.omega()) * &t, *s.omega());
            assert_eq!(t.det(), BigInt::one());
            // x -> x + s<x,v>v on a basis vector
            let x = [0, 0, 1, 0];
            let tx = t.apply(&x);
            let k = TRANSVECTION_SIGN * s.pairing(&x, &v);
            let expect: Vec<i64> = (0..4).map(|i| x[i] + k * v[i]).collect();
            assert_eq!(tx, expect);
        }
        let v = [1, 1, 0, 0];
        let t3 = s.transvection_power(&v, 3);
        let t = s.transvection(&v);
        assert_eq!(t3, &(&t * &t) * &t);
    }

    #[test]
    fn identity_monodromy() {
        let book = family_open_book(&TwistWord::new());
        let a = book.alexander().unwrap();
        assert_eq!(a.poly(), &LaurentPoly::from_coeffs(0, &[1, -4, 6, -4, 1]));
    }

    #[test]
    fn word_inverse_and_concat() {
        let w = word_for_an(2);
        let book = family_open_book(&w.concat(&w.inverse()));
        assert_eq!(book.homological_action().unwrap(), IntMatrix::identity(4));
        let h = |w: &TwistWord| family_open_book(w).homological_action().unwrap();
        let u = TwistWord::new().then("a", 2).then("c", -1);
        assert_eq!(h(&u.concat(&w)), &h(&u) * &h(&w));
    }

    #[test]
    fn unknown_curve_and_zero_exponent() {
        let mut book = family_open_book(&TwistWord::new().then("z", 1));
        assert_eq!(book.homological_action(), Err(OpenBookError::UnknownCurve("z".into())));
        book.word = TwistWord { letters: vec![Letter { curve: "a".into(), exp: 0 }] };
        assert_eq!(book.homological_action(), Err(OpenBookError::ZeroExponent("a".into())));
        book.boundary = 2;
        assert!(matches!(book.homological_action(), Err(OpenBookError::Boundary(2))));
    }
}
