use knotforge::annulus::{family_63, AnnulusError, PD_63};
use knotforge::diagram::PlanarDiagram;
use knotforge::invariants::{alexander, jones};
use knotforge::laurent::LaurentPoly;
use knotforge::openbook::{family_open_book, word_for_an};

fn delta_63() -> LaurentPoly {
    LaurentPoly::from_coeffs(0, &[1, -3, 5, -3, 1])
}

#[test]
fn base_knot_is_the_fixture() {
    let k0 = family_63(0).unwrap();
    assert_eq!(k0.crossing_count(), 6);
    assert_eq!(k0, PlanarDiagram::parse(PD_63).unwrap());
    let t = jones(&k0).in_t().unwrap();
    assert_eq!(t, LaurentPoly::from_coeffs(-3, &[-1, 2, -2, 3, -2, 2, -1]));
}

#[test]
fn alexander_does_not_depend_on_n() {
    for n in -3..=3 {
        assert_eq!(alexander(&family_63(n).unwrap()).poly(), &delta_63(), "n = {n}");
    }
}

#[test]
fn jones_pairs_and_distinctness() {
    let j: Vec<_> = (-3..=2).map(|n| jones(&family_63(n).unwrap())).collect();
    let at = |n: i64| &j[(n + 3) as usize];
    for (n, m) in [(0, -1), (1, -2), (2, -3)] {
        assert_eq!(at(n), at(m), "({n}, {m})");
    }
    assert_ne!(at(0), at(1));
    assert_ne!(at(0), at(2));
    assert_ne!(at(1), at(2));
}

#[test]
fn diagram_and_monodromy_agree() {
    for n in 0..=2 {
        let from_word = family_open_book(&word_for_an(n)).alexander().unwrap();
        let from_diagram = alexander(&family_63(n).unwrap());
        assert_eq!(from_word, from_diagram, "n = {n}");
    }
}

#[test]
fn bound() {
    assert_eq!(family_63(-9), Err(AnnulusError::TwistBound { n: -9, bound: 8 }));
    assert!(family_63(8).is_ok());
}
