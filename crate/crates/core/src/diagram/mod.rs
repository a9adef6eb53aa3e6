//! Oriented single-component knot diagrams in planar-diagram (PD) notation.
//!
//! Each crossing lists four edge labels counterclockwise, starting from the
//! incoming under-strand. Slots 0 and 2 are the under-strand (in, out), slots
//! 1 and 3 the over-strand. Every label occurs in exactly two slots. A
//! diagram with no crossings is the unknot.

mod ops;
mod simplify;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use ops::connected_sum;

pub type Label = u32;

/// A position in a diagram: crossing index and slot (0..4).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub crossing: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("malformed PD code: {0}")]
    Parse(String),
    #[error("arc {label} appears {count} time(s); every arc must appear exactly twice")]
    ArcMultiplicity { label: Label, count: usize },
    #[error("arc {label} leaves a crossing through an incoming slot; orientations are inconsistent")]
    InconsistentOrientation { label: Label },
    #[error("diagram has more than one component (traversal from arc {start} covered {covered} of {total} slots)")]
    MultipleComponents { start: Label, covered: usize, total: usize },
    #[error("PD code is not planar: {faces} faces, expected {expected}")]
    NonPlanar { faces: usize, expected: usize },
}

/// One crossing: edge labels counterclockwise from the incoming under-strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Crossing {
    pub arcs: [Label; 4],
}

impl Crossing {
    pub fn new(a: Label, b: Label, c: Label, d: Label) -> Self {
        Self { arcs: [a, b, c, d] }
    }
}

/// Oriented edge of the diagram graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub label: Label,
    /// Where the edge leaves a crossing.
    pub tail: Slot,
    /// Where the edge enters a crossing.
    pub head: Slot,
}

/// A validated knot diagram.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    signs: Vec<i8>,
    /// Incoming over-strand slot (1 or 3) per crossing.
    over_in: Vec<usize>,
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        Self {
            crossings: Vec::new(),
            signs: Vec::new(),
            over_in: Vec::new(),
        }
    }

    /// Validates a crossing list: multiplicities, orientation consistency,
    /// single component and planarity.
    pub fn new(crossings: Vec<Crossing>) -> Result<Self, DiagramError> {
        if crossings.is_empty() {
            return Ok(Self::unknot());
        }
        let mut counts: HashMap<Label, usize> = HashMap::new();
        for c in &crossings {
            for &l in &c.arcs {
                *counts.entry(l).or_default() += 1;
            }
        }
        let mut bad: Vec<(Label, usize)> = counts.into_iter().filter(|&(_, n)| n != 2).collect();
        bad.sort();
        if let Some(&(label, count)) = bad.first() {
            return Err(DiagramError::ArcMultiplicity { label, count });
        }

        let partner = partner_map(&crossings);
        let n = crossings.len();
        let mut over_in = vec![usize::MAX; n];
        let mut under_seen = vec![false; n];
        let start = Slot { crossing: 0, slot: 0 };
        let mut cur = start;
        let mut covered = 0;
        loop {
            match cur.slot {
                0 => under_seen[cur.crossing] = true,
                2 => {
                    return Err(DiagramError::InconsistentOrientation {
                        label: crossings[cur.crossing].arcs[2],
                    })
                }
                s => {
                    if over_in[cur.crossing] != usize::MAX {
                        // over-strand already traversed: only possible if the walk
                        // re-enters, which means orientation clash
                        return Err(DiagramError::InconsistentOrientation {
                            label: crossings[cur.crossing].arcs[s],
                        });
                    }
                    over_in[cur.crossing] = s;
                }
            }
            covered += 2;
            let out = Slot {
                crossing: cur.crossing,
                slot: (cur.slot + 2) % 4,
            };
            cur = partner[&out];
            if cur == start {
                break;
            }
            if covered > 4 * n {
                unreachable!("traversal exceeded slot count");
            }
        }
        if covered != 4 * n || under_seen.iter().any(|s| !s) {
            return Err(DiagramError::MultipleComponents {
                start: crossings[0].arcs[0],
                covered,
                total: 4 * n,
            });
        }
        let signs = over_in.iter().map(|&s| if s == 3 { 1 } else { -1 }).collect();
        let d = Self {
            crossings,
            signs,
            over_in,
        };
        let faces = d.faces().len();
        if faces != n + 2 {
            return Err(DiagramError::NonPlanar {
                faces,
                expected: n + 2,
            });
        }
        Ok(d)
    }

    pub fn from_tuples(tuples: &[[Label; 4]]) -> Result<Self, DiagramError> {
        Self::new(tuples.iter().map(|&arcs| Crossing { arcs }).collect())
    }

    /// Parses `X(1,4,2,5) X(3,6,4,1) ...`; square brackets, commas between
    /// crossings and an enclosing `PD[...]` are also accepted.
    pub fn parse(text: &str) -> Result<Self, DiagramError> {
        Self::new(parse_crossings(text)?)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_unknot_diagram(&self) -> bool {
        self.crossings.is_empty()
    }

    /// Number of edges (arcs between consecutive crossings); the crossingless
    /// unknot counts as a single arc.
    pub fn arc_count(&self) -> usize {
        (2 * self.crossings.len()).max(1)
    }

    /// Sign of each crossing: +1 when the over-strand runs from slot 3 to
    /// slot 1, i.e. crosses the under-strand from right to left.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn over_in_slot(&self, crossing: usize) -> usize {
        self.over_in[crossing]
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    pub fn labels(&self) -> Vec<Label> {
        let mut v: Vec<Label> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn max_label(&self) -> Label {
        self.crossings
            .iter()
            .flat_map(|c| c.arcs)
            .max()
            .unwrap_or(0)
    }

    pub fn label_at(&self, s: Slot) -> Label {
        self.crossings[s.crossing].arcs[s.slot]
    }

    /// True when the slot is where the strand enters its crossing.
    pub fn is_incoming(&self, s: Slot) -> bool {
        s.slot == 0 || s.slot == self.over_in[s.crossing]
    }

    /// The two slots carrying each label.
    pub(crate) fn partners(&self) -> HashMap<Slot, Slot> {
        partner_map(&self.crossings)
    }

    /// Oriented edges keyed by label.
    pub fn edges(&self) -> HashMap<Label, Edge> {
        let mut out: HashMap<Label, Edge> = HashMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            for (si, &l) in c.arcs.iter().enumerate() {
                let slot = Slot { crossing: ci, slot: si };
                let e = out.entry(l).or_insert(Edge {
                    label: l,
                    tail: slot,
                    head: slot,
                });
                if self.is_incoming(slot) {
                    e.head = slot;
                } else {
                    e.tail = slot;
                }
            }
        }
        out
    }

    /// Faces of the planar graph, each as the cyclic list of its corners.
    /// Corner `(c, i)` is the region between slots `i` and `i+1` of crossing
    /// `c`; its boundary continues along the edge in slot `i+1`.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        let partner = self.partners();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for i in 0..4 {
                if seen[c][i] {
                    continue;
                }
                let mut face = Vec::new();
                let mut cur = Slot { crossing: c, slot: i };
                while !seen[cur.crossing][cur.slot] {
                    seen[cur.crossing][cur.slot] = true;
                    face.push(cur);
                    let along = Slot {
                        crossing: cur.crossing,
                        slot: (cur.slot + 1) % 4,
                    };
                    cur = partner[&along];
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Labels of the edges bounding each face, in boundary order.
    pub fn face_edges(&self) -> Vec<Vec<Label>> {
        self.faces()
            .iter()
            .map(|f| {
                f.iter()
                    .map(|s| self.crossings[s.crossing].arcs[(s.slot + 1) % 4])
                    .collect()
            })
            .collect()
    }

    /// `(left, right)` face indices (into [`faces`](Self::faces)) of an
    /// edge, relative to its orientation.
    pub fn edge_sides(&self, label: Label) -> Option<(usize, usize)> {
        let edge = *self.edges().get(&label)?;
        let faces = self.faces();
        let find = |s: Slot| faces.iter().position(|f| f.contains(&s)).unwrap();
        let left = find(edge.tail);
        let right = find(Slot {
            crossing: edge.tail.crossing,
            slot: (edge.tail.slot + 3) % 4,
        });
        Some((left, right))
    }

    pub fn to_tuples(&self) -> Vec<[Label; 4]> {
        self.crossings.iter().map(|c| c.arcs).collect()
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| format!("X({},{},{},{})", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarDiagram[{self}]")
    }
}

fn partner_map(crossings: &[Crossing]) -> HashMap<Slot, Slot> {
    let mut first: HashMap<Label, Slot> = HashMap::new();
    let mut partner = HashMap::new();
    for (ci, c) in crossings.iter().enumerate() {
        for (si, &l) in c.arcs.iter().enumerate() {
            let here = Slot { crossing: ci, slot: si };
            if let Some(there) = first.remove(&l) {
                partner.insert(here, there);
                partner.insert(there, here);
            } else {
                first.insert(l, here);
            }
        }
    }
    partner
}

fn parse_crossings(text: &str) -> Result<Vec<Crossing>, DiagramError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD") {
        let rest = rest.trim();
        body = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| DiagramError::Parse("unbalanced PD wrapper".into()))?;
    }
    let mut out = Vec::new();
    let mut chars = body.char_indices().peekable();
    while let Some(&(i, ch)) = chars.peek() {
        if ch.is_whitespace() || ch == ',' {
            chars.next();
            continue;
        }
        if ch != 'X' {
            return Err(DiagramError::Parse(format!("unexpected '{ch}' at offset {i}")));
        }
        chars.next();
        let (_, open) = chars
            .next()
            .ok_or_else(|| DiagramError::Parse("dangling 'X'".into()))?;
        let close = match open {
            '(' => ')',
            '[' => ']',
            other => {
                return Err(DiagramError::Parse(format!(
                    "expected '(' or '[' after X, found '{other}'"
                )))
            }
        };
        let mut inner = String::new();
        loop {
            match chars.next() {
                Some((_, c)) if c == close => break,
                Some((_, c)) => inner.push(c),
                None => return Err(DiagramError::Parse("unterminated crossing".into())),
            }
        }
        let nums: Vec<&str> = inner.split(',').map(str::trim).collect();
        if nums.len() != 4 {
            return Err(DiagramError::Parse(format!(
                "crossing X{open}{inner}{close} needs four labels"
            )));
        }
        let mut arcs = [0; 4];
        for (slot, s) in arcs.iter_mut().zip(&nums) {
            *slot = s
                .parse()
                .map_err(|_| DiagramError::Parse(format!("bad arc label '{s}'")))?;
        }
        out.push(Crossing { arcs });
    }
    Ok(out)
}

/// On-disk knot file: `{ "name": ..., "pd": [[a,b,c,d], ...] }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFile {
    pub name: String,
    pub pd: Vec<[Label; 4]>,
}

impl KnotFile {
    pub fn new(name: impl Into<String>, diagram: &PlanarDiagram) -> Self {
        Self {
            name: name.into(),
            pd: diagram.to_tuples(),
        }
    }

    pub fn diagram(&self) -> Result<PlanarDiagram, DiagramError> {
        PlanarDiagram::from_tuples(&self.pd)
    }
}
