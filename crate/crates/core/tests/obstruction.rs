mod common;

use common::mutations;
use knotforge::annulus::{family_63, PD_63};
use knotforge::diagram::PlanarDiagram;
use knotforge::obstruction::*;
use knotforge::openbook::same_fibered_knot;

fn pair() -> (KnotCertificate, KnotCertificate) {
    let k0 = KnotCertificate::from_diagram("K_0", &PlanarDiagram::parse(PD_63).unwrap(), true)
        .with_fibered(FiberedSource::Asserted)
        .with_distinctness(Distinctness::JonesMismatch);
    let k1 = KnotCertificate::from_diagram("K_1", &family_63(1).unwrap(), true)
        .with_fibered(FiberedSource::InheritedVia0Surgery);
    (k0, k1)
}

#[test]
fn every_single_mutation_downgrades() {
    let (k0, k1) = pair();
    assert_eq!(miyazaki_verdict(&k0, &k1).conclusion, Conclusion::NotRibbon);
    let muts = mutations(&k0, &k1);
    assert_eq!(muts.len(), 7);
    for (what, a, b) in muts {
        let v = miyazaki_verdict(&a, &b);
        assert!(!v.conclusion.is_obstruction(), "{what}: {:?}", v.conclusion);
        assert!(!v.rule.is_empty());
    }
}

#[test]
fn verdicts_are_symmetric() {
    let (k0, k1) = pair();
    for (_, a, b) in mutations(&k0, &k1).into_iter().chain([(String::new(), k0.clone(), k1.clone())]) {
        assert_eq!(miyazaki_verdict(&a, &b).conclusion, miyazaki_verdict(&b, &a).conclusion);
    }
}

#[test]
fn obstructing_verdicts_cite_their_inputs() {
    let (k0, k1) = pair();
    let v = miyazaki_verdict(&k0, &k1);
    assert!(v.evidence.iter().any(|e| e.starts_with("K_0 sha256:")));
    assert!(v.evidence.iter().any(|e| e.starts_with("K_1 sha256:")));
    let f = fox_milnor_verdict(&k0);
    assert_eq!(f.conclusion, Conclusion::FoxMilnorObstructed);
    assert!(f.evidence[0].starts_with("K_0 sha256:"));
}

#[test]
fn dichotomy_exactly_for_distinct_knots() {
    let opts = DichotomyOptions::NO_JONES;
    for n in -3..=3 {
        for m in -3..=3 {
            let r = dichotomy_report_with(n, m, opts);
            assert_eq!(r.is_ok(), !same_fibered_knot(n, m), "({n}, {m})");
            if let Ok(r) = r {
                assert_eq!(r.not_ribbon.conclusion, Conclusion::NotRibbon);
                assert_eq!(r.certificates[0].fibered.is_some(), true);
            }
        }
    }
}

#[test]
fn dichotomy_2_5_uses_d3() {
    let r = dichotomy_report_with(2, 5, DichotomyOptions::NO_JONES).unwrap();
    assert_eq!(r.distinctness, vec![Distinctness::D3Mismatch { n: 2, m: 5 }]);
    assert_eq!(r.d3, ["-9/2".to_string(), "-57/2".to_string()]);
}
