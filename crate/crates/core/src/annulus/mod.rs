//! Annulus presentations and annulus twists.
//!
//! A site is a short line segment in the diagram plane crossed by a few
//! strands of the knot; the disk around it is bounded by one of the two
//! boundary circles of the shrunken annulus. Blowing down the `±1/n`
//! surgeries on those circles becomes the insertion of `∓n` full twists on
//! the strands through each site.

mod family;
mod spun;

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Crossing, DiagramError, KnotFile, Label, PlanarDiagram};
use crate::invariants::{alexander, jones};

pub use family::{band_63, family_63, presentation_63, FAMILY_NAME, PD_63};
pub use spun::{project, BandedAnnulus, Leg, Pass, PassKind};

/// Largest `|n|` accepted by [`annulus_twist`].
pub const DEFAULT_TWIST_BOUND: i64 = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnulusError {
    #[error("twist parameter {n} exceeds the bound {bound}")]
    TwistBound { n: i64, bound: i64 },
    #[error("site {site} lists no strands")]
    EmptySite { site: u8 },
    #[error("site {site} refers to arc {label}, which is not in the diagram")]
    UnknownArc { site: u8, label: Label },
    #[error("arc {label} appears more than once among the twist sites")]
    SharedArc { label: Label },
    #[error("orientation sign for arc {label} must be +1 or -1, got {sign}")]
    BadSign { label: Label, sign: i8 },
    #[error("arcs {from} and {to} of site {site} do not bound a common region")]
    NotACutLine { site: u8, from: Label, to: Label },
    #[error("bad annulus model: {0}")]
    BadModel(String),
    #[error("the annulus model does not describe the given knot")]
    ModelMismatch,
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Strands crossing a cut line, listed in order along the line. The sign is
/// +1 when the strand crosses from right to left as seen walking along the
/// line, i.e. when the region before it lies on its left.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistSite {
    pub strands: Vec<(Label, i8)>,
}

impl TwistSite {
    pub fn new(strands: Vec<(Label, i8)>) -> Self {
        Self { strands }
    }

    pub fn labels(&self) -> impl Iterator<Item = Label> + '_ {
        self.strands.iter().map(|&(l, _)| l)
    }

    /// Algebraic number of strands through the site.
    pub fn linking(&self) -> i64 {
        self.strands.iter().map(|&(_, s)| s as i64).sum()
    }

    fn check(&self, d: &PlanarDiagram, site: u8) -> Result<(), AnnulusError> {
        if self.strands.is_empty() {
            return Err(AnnulusError::EmptySite { site });
        }
        let labels: HashSet<Label> = d.labels().into_iter().collect();
        let mut sides = Vec::with_capacity(self.strands.len());
        for &(label, sign) in &self.strands {
            if !labels.contains(&label) {
                return Err(AnnulusError::UnknownArc { site, label });
            }
            if sign != 1 && sign != -1 {
                return Err(AnnulusError::BadSign { label, sign });
            }
            let (left, right) = d.edge_sides(label).expect("label present");
            sides.push(if sign > 0 { (left, right) } else { (right, left) });
        }
        for (i, w) in sides.windows(2).enumerate() {
            if w[0].1 != w[1].0 {
                return Err(AnnulusError::NotACutLine {
                    site,
                    from: self.strands[i].0,
                    to: self.strands[i + 1].0,
                });
            }
        }
        Ok(())
    }
}

/// How the twist is carried out on a presentation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TwistData {
    /// Unlinked boundary circles, each bounding a disk met by the listed
    /// strands. Valid for untwisted annuli.
    Sites { site1: TwistSite, site2: TwistSite },
    /// Annulus and band given in space; works for twisted annuli, whose
    /// boundary circles link.
    Banded { band: BandedAnnulus },
}

/// A knot diagram with the data of an annulus presentation.
#[derive(Debug, Clone, PartialEq)]
pub struct AnnulusPresentation {
    diagram: PlanarDiagram,
    data: TwistData,
}

impl AnnulusPresentation {
    pub fn new(diagram: PlanarDiagram, site1: TwistSite, site2: TwistSite) -> Result<Self, AnnulusError> {
        site1.check(&diagram, 1)?;
        site2.check(&diagram, 2)?;
        let mut seen = HashSet::new();
        for l in site1.labels().chain(site2.labels()) {
            if !seen.insert(l) {
                return Err(AnnulusError::SharedArc { label: l });
            }
        }
        Ok(Self { diagram, data: TwistData::Sites { site1, site2 } })
    }

    /// `diagram` is the knot as the user wants to see it; it must have the
    /// same Alexander and Jones polynomials as the knot of the model.
    pub fn banded(diagram: PlanarDiagram, band: BandedAnnulus) -> Result<Self, AnnulusError> {
        let own = band.diagram(0)?;
        if alexander(&own) != alexander(&diagram) || jones(&own) != jones(&diagram) {
            return Err(AnnulusError::ModelMismatch);
        }
        Ok(Self { diagram, data: TwistData::Banded { band } })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn data(&self) -> &TwistData {
        &self.data
    }

    pub fn site1(&self) -> Option<&TwistSite> {
        match &self.data {
            TwistData::Sites { site1, .. } => Some(site1),
            TwistData::Banded { .. } => None,
        }
    }

    pub fn site2(&self) -> Option<&TwistSite> {
        match &self.data {
            TwistData::Sites { site2, .. } => Some(site2),
            TwistData::Banded { .. } => None,
        }
    }

    /// Twisted diagram before simplification, with the twist data carried
    /// over. For sites, the inserted braids sit just above each cut line, so
    /// the same arc labels still describe the sites in the new diagram.
    pub fn twist_unsimplified(&self, n: i64) -> Result<AnnulusPresentation, AnnulusError> {
        if n == 0 {
            return Ok(self.clone());
        }
        match &self.data {
            TwistData::Sites { site1, site2 } => {
                let mut crossings = self.diagram.crossings().to_vec();
                let mut next = self.diagram.max_label() + 1;
                insert_full_twists(&mut crossings, &self.diagram, site1, -n, &mut next);
                insert_full_twists(&mut crossings, &self.diagram, site2, n, &mut next);
                let diagram = PlanarDiagram::new(crossings)?;
                AnnulusPresentation::new(diagram, site1.clone(), site2.clone())
            }
            TwistData::Banded { band } => {
                let band = band.twisted(n);
                let diagram = band.diagram(0)?;
                Ok(Self { diagram, data: TwistData::Banded { band } })
            }
        }
    }

    pub fn from_file(file: &AnnulusFile) -> Result<Self, AnnulusError> {
        let d = file.knot.diagram()?;
        match &file.data {
            TwistData::Sites { site1, site2 } => Self::new(d, site1.clone(), site2.clone()),
            TwistData::Banded { band } => Self::banded(d, band.clone()),
        }
    }

    pub fn to_file(&self, name: &str) -> AnnulusFile {
        AnnulusFile { knot: KnotFile::new(name, &self.diagram), data: self.data.clone() }
    }
}

/// On-disk form of an annulus presentation: a knot file plus either
/// `site1`/`site2` or `band`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnnulusFile {
    pub knot: KnotFile,
    #[serde(flatten)]
    pub data: TwistData,
}

/// `Aⁿ(K)`, simplified by Reidemeister I/II moves; `n = 0` returns the
/// diagram as given. For sites this is `-n` full right-handed twists at
/// site 1 and `+n` at site 2.
pub fn annulus_twist(ap: &AnnulusPresentation, n: i64) -> Result<PlanarDiagram, AnnulusError> {
    annulus_twist_bounded(ap, n, DEFAULT_TWIST_BOUND)
}

pub fn annulus_twist_bounded(ap: &AnnulusPresentation, n: i64, bound: i64) -> Result<PlanarDiagram, AnnulusError> {
    if n.abs() > bound {
        return Err(AnnulusError::TwistBound { n, bound });
    }
    if n == 0 {
        return Ok(ap.diagram.clone());
    }
    Ok(ap.twist_unsimplified(n)?.diagram.simplify())
}

/// Braid word for `count` full twists on `m` strands (right-handed when
/// positive). Letters are `(j, positive)` for `σ_j^{±1}` acting on
/// positions `j, j+1`, bottom to top.
pub fn full_twist_word(m: usize, count: i64) -> Vec<(usize, bool)> {
    let positive = count > 0;
    let mut word = Vec::new();
    if m < 2 {
        return word;
    }
    for _ in 0..count.unsigned_abs() * m as u64 {
        for k in 0..m - 1 {
            word.push(if positive { (k, true) } else { (m - 2 - k, false) });
        }
    }
    word
}

/// Inserts a braid on the strands of `site`, editing `crossings` in place.
/// Crossing indices and the slots of `d` stay valid; new crossings are
/// appended.
///
/// The strands run vertically through a braid box sitting on the cut line,
/// with positions numbered left to right along it. Below the box each strand
/// keeps its old label; the topmost segment of each strand gets a fresh
/// label which replaces the old one at the crossing above. The braid must
/// return every strand to its starting position.
pub(crate) fn insert_braid(
    crossings: &mut Vec<Crossing>,
    d: &PlanarDiagram,
    site: &TwistSite,
    word: &[(usize, bool)],
    next: &mut Label,
) {
    if word.is_empty() {
        return;
    }
    let edges = d.edges();
    let mut cur: Vec<Label> = site.labels().collect();
    let mut up: Vec<bool> = site.strands.iter().map(|&(_, s)| s > 0).collect();
    let mut perm: Vec<usize> = (0..cur.len()).collect();
    for &(j, positive) in word {
        let (sw, se) = (cur[j], cur[j + 1]);
        let (nw, ne) = (*next, *next + 1);
        *next += 2;
        let arcs = if positive {
            // over strand runs SW-NE
            if up[j + 1] {
                [se, ne, nw, sw]
            } else {
                [nw, sw, se, ne]
            }
        } else if up[j] {
            [sw, se, ne, nw]
        } else {
            [ne, nw, sw, se]
        };
        crossings.push(Crossing { arcs });
        cur[j] = nw;
        cur[j + 1] = ne;
        up.swap(j, j + 1);
        perm.swap(j, j + 1);
    }
    assert!(perm.iter().enumerate().all(|(i, &p)| i == p), "braid must be pure");
    for (p, &(label, sign)) in site.strands.iter().enumerate() {
        let e = edges[&label];
        let top = if sign > 0 { e.head } else { e.tail };
        crossings[top.crossing].arcs[top.slot] = cur[p];
    }
}

pub(crate) fn insert_full_twists(
    crossings: &mut Vec<Crossing>,
    d: &PlanarDiagram,
    site: &TwistSite,
    full_twists: i64,
    next: &mut Label,
) {
    let word = full_twist_word(site.strands.len(), full_twists);
    insert_braid(crossings, d, site, &word, next);
}

/// Pushes a finger of the first strand of a two-strand site across the
/// second, over it when `over` is set. Adds a cancelling pair of crossings.
pub fn finger_move(d: &PlanarDiagram, site: &TwistSite, over: bool) -> Result<PlanarDiagram, AnnulusError> {
    assert_eq!(site.strands.len(), 2);
    site.check(d, 1)?;
    let mut crossings = d.crossings().to_vec();
    let mut next = d.max_label() + 1;
    // σ has the left strand over on its way right
    let word = [(0, over), (0, !over)];
    insert_braid(&mut crossings, d, site, &word, &mut next);
    Ok(PlanarDiagram::new(crossings)?)
}

/// All ways to choose a cut line of exactly `width` consecutive strands.
/// Returned in a deterministic order.
pub fn candidate_sites(d: &PlanarDiagram, width: usize) -> Vec<TwistSite> {
    let labels = d.labels();
    let sides: HashMap<Label, (usize, usize)> = labels
        .iter()
        .map(|&l| (l, d.edge_sides(l).expect("label present")))
        .collect();
    let mut out = Vec::new();
    let mut stack: Vec<Vec<(Label, i8)>> = Vec::new();
    for &l in &labels {
        for sign in [1i8, -1] {
            stack.push(vec![(l, sign)]);
        }
    }
    let east = |(l, s): (Label, i8)| if s > 0 { sides[&l].1 } else { sides[&l].0 };
    let west = |(l, s): (Label, i8)| if s > 0 { sides[&l].0 } else { sides[&l].1 };
    while let Some(path) = stack.pop() {
        if path.len() == width {
            out.push(TwistSite::new(path));
            continue;
        }
        let f = east(*path.last().unwrap());
        for &l in &labels {
            if path.iter().any(|&(x, _)| x == l) {
                continue;
            }
            for sign in [1i8, -1] {
                if west((l, sign)) == f {
                    let mut p = path.clone();
                    p.push((l, sign));
                    stack.push(p);
                }
            }
        }
    }
    out.sort_by(|a, b| a.strands.cmp(&b.strands));
    out
}
