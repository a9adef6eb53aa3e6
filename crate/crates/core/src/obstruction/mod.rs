//! Slice and ribbon obstructions assembled from knot certificates.
//!
//! The engine only ever obstructs or abstains: no verdict claims that a
//! knot is slice or ribbon.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::annulus::{family_63, AnnulusError};
use crate::diagram::PlanarDiagram;
use crate::invariants::{alexander, jones, AlexanderPoly, JonesPoly};
use crate::laurent::{fox_milnor, is_irreducible, miyazaki_divisor};
use crate::openbook::{d3, family_surgery_description, same_fibered_knot, OpenBookError};

pub const FOX_MILNOR_RULE: &str = "Fox-Milnor: the Alexander polynomial of a slice knot is f(t)f(t^-1)";
pub const MIYAZAKI_RULE: &str =
    "Miyazaki: if K0 # -K1 is ribbon for fibered K0, K1 with irreducible Alexander polynomials, then K0 = K1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ObstructionError {
    #[error("K_{n} and K_{m} are the same fibered knot; there is no dichotomy")]
    SameKnot { n: i64, m: i64 },
    #[error(transparent)]
    Annulus(#[from] AnnulusError),
    #[error(transparent)]
    OpenBook(#[from] OpenBookError),
}

/// Where a fiberedness claim comes from. It is never computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FiberedSource {
    #[serde(rename = "asserted")]
    Asserted,
    /// Shares its 0-surgery with a fibered knot.
    #[serde(rename = "inherited-via-0-surgery")]
    InheritedVia0Surgery,
}

impl FiberedSource {
    pub fn as_str(self) -> &'static str {
        match self {
            FiberedSource::Asserted => "asserted",
            FiberedSource::InheritedVia0Surgery => "inherited-via-0-surgery",
        }
    }
}

/// Evidence that the two knots of a pair are different.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Distinctness {
    /// The Jones polynomials of the two certificates differ.
    JonesMismatch,
    /// `d3` of the plane fields of the open books `f_n`, `f_m` differ.
    D3Mismatch { n: i64, m: i64 },
}

impl Distinctness {
    fn holds(&self, a: &KnotCertificate, b: &KnotCertificate) -> bool {
        match self {
            Distinctness::JonesMismatch => matches!((&a.jones, &b.jones), (Some(x), Some(y)) if x != y),
            Distinctness::D3Mismatch { n, m } => match (family_d3(*n), family_d3(*m)) {
                (Ok(x), Ok(y)) => x != y,
                _ => false,
            },
        }
    }

    fn describe(&self) -> String {
        match self {
            Distinctness::JonesMismatch => "jones-mismatch".to_string(),
            Distinctness::D3Mismatch { n, m } => format!("d3-mismatch (n = {n}, m = {m})"),
        }
    }
}

fn family_d3(n: i64) -> Result<BigRational, OpenBookError> {
    d3(&family_surgery_description(n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotCertificate {
    pub name: String,
    pub alexander: AlexanderPoly,
    pub alexander_irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jones: Option<JonesPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fibered: Option<FiberedSource>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distinctness: Option<Distinctness>,
}

impl KnotCertificate {
    /// Certificate with computed polynomials and no asserted fields.
    pub fn from_diagram(name: &str, d: &PlanarDiagram, with_jones: bool) -> Self {
        let alexander = alexander(d);
        Self {
            name: name.to_string(),
            alexander_irreducible: poly_irreducible(&alexander),
            alexander,
            jones: with_jones.then(|| jones(d)),
            fibered: None,
            distinctness: None,
        }
    }

    pub fn with_fibered(mut self, source: FiberedSource) -> Self {
        self.fibered = Some(source);
        self
    }

    pub fn with_distinctness(mut self, e: Distinctness) -> Self {
        self.distinctness = Some(e);
        self
    }

    /// `K0 # -K1`: Alexander polynomials multiply, the Jones polynomial of
    /// the mirror is involuted. Nothing is asserted about the composite.
    pub fn composite(a: &Self, b: &Self) -> Self {
        let p = a.alexander.poly() * b.alexander.poly();
        let alexander = AlexanderPoly::from_poly(&p).expect("product of nonzero polynomials");
        Self {
            name: format!("{} # -{}", a.name, b.name),
            alexander_irreducible: poly_irreducible(&alexander),
            alexander,
            jones: match (&a.jones, &b.jones) {
                (Some(x), Some(y)) => Some(x * &y.mirror()),
                _ => None,
            },
            fibered: None,
            distinctness: None,
        }
    }

    /// The irreducibility flag, checked against the polynomial itself.
    pub fn irreducible(&self) -> bool {
        self.alexander_irreducible && poly_irreducible(&self.alexander)
    }

    /// SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let bytes = serde_json::to_vec(self).expect("certificate serializes");
        hex::encode(Sha256::digest(&bytes))
    }

    fn reference(&self) -> String {
        format!("{} sha256:{}", self.name, &self.digest()[..16])
    }
}

fn poly_irreducible(a: &AlexanderPoly) -> bool {
    is_irreducible(a.poly()).unwrap_or(false)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Conclusion {
    NotRibbon,
    FoxMilnorObstructed,
    Inconclusive,
    NotApplicable,
}

impl Conclusion {
    pub fn is_obstruction(self) -> bool {
        matches!(self, Conclusion::NotRibbon | Conclusion::FoxMilnorObstructed)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub conclusion: Conclusion,
    pub rule: String,
    pub evidence: Vec<String>,
}

pub fn fox_milnor_verdict(c: &KnotCertificate) -> Verdict {
    let mut evidence = vec![c.reference()];
    let conclusion = match fox_milnor(c.alexander.poly()) {
        Some(f) => {
            evidence.push(format!("witness f = {}", f));
            Conclusion::Inconclusive
        }
        None => {
            evidence.push(format!("no f with f(t)f(t^-1) = {}", c.alexander));
            Conclusion::FoxMilnorObstructed
        }
    };
    Verdict { conclusion, rule: FOX_MILNOR_RULE.to_string(), evidence }
}

/// Verdict on `K0 # -K1`. Symmetric in the two certificates.
pub fn miyazaki_verdict(c0: &KnotCertificate, c1: &KnotCertificate) -> Verdict {
    let mut evidence = vec![c0.reference(), c1.reference()];
    let verdict = |conclusion, evidence| Verdict { conclusion, rule: MIYAZAKI_RULE.to_string(), evidence };
    let mut missing = Vec::new();
    for c in [c0, c1] {
        if c.fibered.is_none() {
            missing.push(format!("{}: fiberedness not established", c.name));
        }
        if !c.irreducible() {
            missing.push(format!("{}: Alexander polynomial not certified irreducible", c.name));
        }
    }
    if !missing.is_empty() {
        evidence.extend(missing);
        return verdict(Conclusion::NotApplicable, evidence);
    }
    for c in [c0, c1] {
        evidence.push(format!("{}: fibered ({})", c.name, c.fibered.unwrap().as_str()));
        evidence.push(format!("{}: irreducible Alexander polynomial {}", c.name, c.alexander));
        if !miyazaki_divisor(c.alexander.poly()) {
            evidence.push(format!("{}: no f(t)f(t^-1) divides the Alexander polynomial", c.name));
        }
    }
    let proof = [c0, c1].into_iter().filter_map(|c| c.distinctness.as_ref()).find(|e| e.holds(c0, c1));
    match proof {
        Some(e) => {
            evidence.push(format!("distinct: {}", e.describe()));
            verdict(Conclusion::NotRibbon, evidence)
        }
        None => {
            evidence.push("distinctness not established".to_string());
            verdict(Conclusion::Inconclusive, evidence)
        }
    }
}

/// Controls the cost of [`dichotomy_report_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DichotomyOptions {
    /// Jones polynomials are computed only when both diagrams have at most
    /// this many crossings; otherwise `d3` alone separates the knots.
    pub jones_crossing_limit: usize,
}

impl DichotomyOptions {
    pub const NO_JONES: Self = Self { jones_crossing_limit: 0 };
}

impl Default for DichotomyOptions {
    fn default() -> Self {
        Self { jones_crossing_limit: 60 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyReport {
    pub n: i64,
    pub m: i64,
    pub composite: String,
    pub certificates: Vec<KnotCertificate>,
    pub distinctness: Vec<Distinctness>,
    /// `d3` of the two open books as exact fractions.
    pub d3: [String; 2],
    pub fox_milnor: Verdict,
    pub not_ribbon: Verdict,
    pub shared_zero_surgery: String,
    pub conclusion: String,
}

pub fn dichotomy_report(n: i64, m: i64) -> Result<DichotomyReport, ObstructionError> {
    dichotomy_report_with(n, m, DichotomyOptions::default())
}

pub fn dichotomy_report_with(n: i64, m: i64, opts: DichotomyOptions) -> Result<DichotomyReport, ObstructionError> {
    if same_fibered_knot(n, m) {
        return Err(ObstructionError::SameKnot { n, m });
    }
    let (kn, km) = (family_63(n)?, family_63(m)?);
    let with_jones = kn.crossing_count().max(km.crossing_count()) <= opts.jones_crossing_limit;
    let cert = |k: i64, d: &PlanarDiagram| {
        let source = if k == 0 { FiberedSource::Asserted } else { FiberedSource::InheritedVia0Surgery };
        KnotCertificate::from_diagram(&format!("K_{k}"), d, with_jones).with_fibered(source)
    };
    let (mut a, b) = (cert(n, &kn), cert(m, &km));
    let (dn, dm) = (family_d3(n)?, family_d3(m)?);
    let mut distinctness = Vec::new();
    if Distinctness::JonesMismatch.holds(&a, &b) {
        distinctness.push(Distinctness::JonesMismatch);
    }
    let by_d3 = Distinctness::D3Mismatch { n, m };
    if by_d3.holds(&a, &b) {
        distinctness.push(by_d3);
    }
    if let Some(e) = distinctness.first() {
        a = a.with_distinctness(e.clone());
    }
    let composite = KnotCertificate::composite(&a, &b);
    let not_ribbon = miyazaki_verdict(&a, &b);
    let conclusion = if not_ribbon.conclusion == Conclusion::NotRibbon {
        format!(
            "{c} is not ribbon. K_{n} and K_{m} have the same 0-surgery. If they are concordant, {c} is slice \
             and contradicts the slice-ribbon conjecture; if not, they contradict the conjecture that knots \
             with the same 0-surgery are concordant.",
            c = composite.name
        )
    } else {
        format!("no conclusion for {}", composite.name)
    };
    Ok(DichotomyReport {
        n,
        m,
        fox_milnor: fox_milnor_verdict(&composite),
        composite: composite.name.clone(),
        certificates: vec![a, b],
        distinctness,
        d3: [dn.to_string(), dm.to_string()],
        not_ribbon,
        shared_zero_surgery: format!("K_{n} and K_{m} have homeomorphic 0-surgeries (asserted; annulus twists preserve the 0-surgery)"),
        conclusion,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::annulus::PD_63;
    use crate::laurent::LaurentPoly;

    fn cert_63() -> KnotCertificate {
        KnotCertificate::from_diagram("6_3", &PlanarDiagram::parse(PD_63).unwrap(), true)
            .with_fibered(FiberedSource::Asserted)
    }

    fn cert_k1() -> KnotCertificate {
        KnotCertificate::from_diagram("K_1", &family_63(1).unwrap(), true)
            .with_fibered(FiberedSource::InheritedVia0Surgery)
            .with_distinctness(Distinctness::JonesMismatch)
    }

    #[test]
    fn fox_milnor_cases() {
        let u = KnotCertificate::from_diagram("unknot", &PlanarDiagram::unknot(), true);
        assert_eq!(fox_milnor_verdict(&u).conclusion, Conclusion::Inconclusive);
        let v = fox_milnor_verdict(&cert_63());
        assert_eq!(v.conclusion, Conclusion::FoxMilnorObstructed);
        assert_eq!(v.rule, FOX_MILNOR_RULE);
        let sum = KnotCertificate::composite(&cert_63(), &cert_k1());
        assert_eq!(sum.alexander.poly(), &LaurentPoly::from_coeffs(0, &[1, -3, 5, -3, 1]).pow(2));
        assert!(!sum.alexander_irreducible);
        assert_eq!(fox_milnor_verdict(&sum).conclusion, Conclusion::Inconclusive);
    }

    #[test]
    fn miyazaki_cases() {
        let v = miyazaki_verdict(&cert_63(), &cert_k1());
        assert_eq!(v.conclusion, Conclusion::NotRibbon);
        assert_eq!(v.rule, MIYAZAKI_RULE);
        assert!(v.evidence.iter().any(|e| e.contains("jones-mismatch")));
        assert_eq!(miyazaki_verdict(&cert_k1(), &cert_63()).conclusion, Conclusion::NotRibbon);
        assert_eq!(miyazaki_verdict(&cert_63(), &cert_63()).conclusion, Conclusion::Inconclusive);
        let mut unfibered = cert_63();
        unfibered.fibered = None;
        assert_eq!(miyazaki_verdict(&unfibered, &cert_k1()).conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn false_evidence_is_ignored() {
        // claimed Jones mismatch between equal polynomials
        let k = cert_63().with_distinctness(Distinctness::JonesMismatch);
        assert_eq!(miyazaki_verdict(&k, &cert_63()).conclusion, Conclusion::Inconclusive);
        let k = cert_63().with_distinctness(Distinctness::D3Mismatch { n: 0, m: -1 });
        assert_eq!(miyazaki_verdict(&k, &cert_63()).conclusion, Conclusion::Inconclusive);
        // irreducibility flag that the polynomial does not support
        let mut t = KnotCertificate::from_diagram("4_1#4_1", &crate::diagram::connected_sum(
            &PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
            &PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap(),
        ), true)
        .with_fibered(FiberedSource::Asserted);
        t.alexander_irreducible = true;
        assert!(!t.irreducible());
        assert_eq!(miyazaki_verdict(&t, &cert_k1()).conclusion, Conclusion::NotApplicable);
    }

    #[test]
    fn digests_are_stable_and_sensitive() {
        let a = cert_63();
        assert_eq!(a.digest(), cert_63().digest());
        assert_eq!(a.digest().len(), 64);
        assert_ne!(a.digest(), a.clone().with_distinctness(Distinctness::JonesMismatch).digest());
    }

    #[test]
    fn dichotomy() {
        let r = dichotomy_report(0, 1).unwrap();
        assert_eq!(r.not_ribbon.conclusion, Conclusion::NotRibbon);
        assert_eq!(r.fox_milnor.conclusion, Conclusion::Inconclusive);
        assert_eq!(r.distinctness[0], Distinctness::JonesMismatch);
        assert_eq!(r.d3, ["3/2".to_string(), "-1/2".to_string()]);
        assert_eq!(r.composite, "K_0 # -K_1");
        assert_eq!(dichotomy_report(0, -1), Err(ObstructionError::SameKnot { n: 0, m: -1 }));
        let r = dichotomy_report_with(1, 2, DichotomyOptions::NO_JONES).unwrap();
        assert_eq!(r.distinctness, vec![Distinctness::D3Mismatch { n: 1, m: 2 }]);
        assert_eq!(r.not_ribbon.conclusion, Conclusion::NotRibbon);
        assert_eq!(r.d3, ["-1/2".to_string(), "-9/2".to_string()]);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<DichotomyReport>(&s).unwrap(), r);
    }
}
