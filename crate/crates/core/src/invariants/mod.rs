//! Knot polynomials computed from planar diagrams.

mod alexander;
mod bracket;

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::diagram::PlanarDiagram;
use crate::laurent::{LaurentPoly, UnitNormalForm};

pub use alexander::{alexander_matrix, alexander_minor, bareiss_determinant};
pub use bracket::{kauffman_bracket, kauffman_bracket_naive, loop_value};

/// Jones polynomial, held in `q = t^{1/2}` so that links with an even
/// number of components would also fit. For knots every `q`-exponent is
/// even and [`in_t`](Self::in_t) succeeds.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesPoly {
    q: LaurentPoly,
}

impl JonesPoly {
    pub fn one() -> Self {
        Self { q: LaurentPoly::one() }
    }

    pub fn from_q(q: LaurentPoly) -> Self {
        Self { q }
    }

    pub fn from_t(t: &LaurentPoly) -> Self {
        Self { q: t.stretch(2) }
    }

    pub fn in_q(&self) -> &LaurentPoly {
        &self.q
    }

    pub fn in_t(&self) -> Option<LaurentPoly> {
        self.q.compress(2)
    }

    /// Value for the mirror image: `t -> t^{-1}`.
    pub fn mirror(&self) -> Self {
        Self { q: self.q.involute() }
    }
}

impl Mul for &JonesPoly {
    type Output = JonesPoly;
    fn mul(self, rhs: &JonesPoly) -> JonesPoly {
        JonesPoly { q: &self.q * &rhs.q }
    }
}

impl fmt::Display for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.in_t() {
            Some(t) => write!(f, "{}", t.display_with("t")),
            None => write!(f, "{}", self.q.display_with("q")),
        }
    }
}

impl fmt::Debug for JonesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "JonesPoly({self})")
    }
}

/// Serialized in `t`.
impl Serialize for JonesPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.in_t() {
            Some(t) => t.serialize(s),
            None => Err(serde::ser::Error::custom("Jones polynomial has odd powers of t^(1/2)")),
        }
    }
}

impl<'de> Deserialize<'de> for JonesPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Self::from_t(&LaurentPoly::deserialize(d)?))
    }
}

/// Alexander polynomial in unit normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlexanderPoly(pub UnitNormalForm);

impl AlexanderPoly {
    pub fn one() -> Self {
        Self(LaurentPoly::one().normalize().unwrap())
    }

    pub fn from_poly(p: &LaurentPoly) -> Option<Self> {
        p.normalize().ok().map(Self)
    }

    pub fn poly(&self) -> &LaurentPoly {
        self.0.poly()
    }

    pub fn normal_form(&self) -> &UnitNormalForm {
        &self.0
    }

    /// `|Δ(-1)|`
    pub fn determinant(&self) -> BigInt {
        self.poly().eval_minus_one().abs()
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlexanderPoly({})", self.0)
    }
}

/// `V(t) = (-A^3)^{-w} <D>` at `A = t^{-1/4}`.
pub fn jones(d: &PlanarDiagram) -> JonesPoly {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let f = kauffman_bracket(d).shift(-3 * w).scale(&BigInt::from(sign));
    // A^e = q^{-e/2}
    let half = f
        .compress(2)
        .expect("writhe-normalized bracket of a knot has exponents divisible by 4");
    JonesPoly { q: half.involute() }
}

pub fn alexander(d: &PlanarDiagram) -> AlexanderPoly {
    if d.is_unknot_diagram() {
        return AlexanderPoly::one();
    }
    let p = alexander_minor(d);
    AlexanderPoly::from_poly(&p).expect("Alexander polynomial of a knot is nonzero")
}

/// `|Δ(-1)|`
pub fn determinant(d: &PlanarDiagram) -> BigInt {
    alexander(d).determinant()
}

/// Invariant report as written by the command-line tool.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub knot: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<JonesPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<AlexanderPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub determinant: Option<u64>,
    pub writhe: i64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::connected_sum;

    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";

    fn d(s: &str) -> PlanarDiagram {
        PlanarDiagram::parse(s).unwrap()
    }

    fn t(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn jones_values() {
        assert_eq!(jones(&PlanarDiagram::unknot()), JonesPoly::one());
        assert_eq!(jones(&d("X(1,1,2,2)")), JonesPoly::one());
        assert_eq!(jones(&d(TREFOIL)).in_t().unwrap(), t(-4, &[-1, 1, 0, 1]));
        assert_eq!(jones(&d(FIGURE_EIGHT)).in_t().unwrap(), t(-2, &[1, -1, 1, -1, 1]));
    }

    #[test]
    fn alexander_values() {
        assert_eq!(alexander(&PlanarDiagram::unknot()), AlexanderPoly::one());
        assert_eq!(alexander(&d("X(2,1,1,2)")), AlexanderPoly::one());
        assert_eq!(alexander(&d(TREFOIL)).poly(), &t(0, &[1, -1, 1]));
        assert_eq!(alexander(&d(FIGURE_EIGHT)).poly(), &t(0, &[1, -3, 1]));
        assert_eq!(determinant(&d(TREFOIL)), BigInt::from(3));
        assert_eq!(determinant(&d(FIGURE_EIGHT)), BigInt::from(5));
        assert_eq!(determinant(&PlanarDiagram::unknot()), BigInt::from(1));
    }

    #[test]
    fn mirror_and_sum_rules() {
        let a = d(TREFOIL);
        let b = d(FIGURE_EIGHT);
        assert_eq!(jones(&a.mirror()), jones(&a).mirror());
        assert_ne!(jones(&a.mirror()), jones(&a));
        let s = connected_sum(&a, &b);
        assert_eq!(jones(&s), &jones(&a) * &jones(&b));
        assert!(alexander(&s).poly().is_associate(&(alexander(&a).poly() * alexander(&b).poly())));
    }

    #[test]
    fn kinked_diagram_same_invariants() {
        let k = d("X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(6,7,7,8)");
        assert_eq!(jones(&k), jones(&d(TREFOIL)));
        assert_eq!(alexander(&k), alexander(&d(TREFOIL)));
    }

    #[test]
    fn report_json() {
        let k = d(TREFOIL);
        let r = InvariantReport {
            knot: "3_1".into(),
            jones: Some(jones(&k)),
            alexander: Some(alexander(&k)),
            determinant: determinant(&k).try_into().ok(),
            writhe: k.writhe(),
        };
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(
            s,
            r#"{"knot":"3_1","jones":[[-4,-1],[-3,1],[-1,1]],"alexander":[[0,1],[1,-1],[2,1]],"determinant":3,"writhe":-3}"#
        );
        let back: InvariantReport = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }
}
