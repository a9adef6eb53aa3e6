use super::{AnnulusError, AnnulusPresentation, BandedAnnulus, Leg, Pass, PassKind};
use crate::diagram::PlanarDiagram;

pub const FAMILY_NAME: &str = "6_3";

pub const PD_63: &str = "X(4,2,5,1) X(8,4,9,3) X(12,9,1,10) X(10,5,11,6) X(6,11,7,12) X(2,8,3,7)";

/// Annulus with one right-handed full twist; the band leaves the outer
/// edge, passes under the annulus, pierces it, passes under again and
/// ends on the inner edge.
pub fn band_63() -> BandedAnnulus {
    let leg = |gap, height, dir| Leg { gap, height, dir };
    BandedAnnulus {
        full_twists: 1,
        start: 4.8,
        end: 5.6,
        passes: vec![
            Pass { angle: 4.0, kind: PassKind::Under },
            Pass { angle: 3.2, kind: PassKind::Down },
            Pass { angle: 0.8, kind: PassKind::Under },
        ],
        legs: vec![leg(2.2, 0.47, 0), leg(1.8, -0.01, -1), leg(1.4, 0.19, -1), leg(1.0, 0.38, -1)],
        turns: 0,
    }
}

pub fn presentation_63() -> AnnulusPresentation {
    let d = PlanarDiagram::parse(PD_63).expect("fixture is valid");
    AnnulusPresentation::banded(d, band_63()).expect("fixture is valid")
}

/// `K_n`, the `n`-fold annulus twist of 6_3; `|n|` at most 8.
pub fn family_63(n: i64) -> Result<PlanarDiagram, AnnulusError> {
    super::annulus_twist(&presentation_63(), n)
}
