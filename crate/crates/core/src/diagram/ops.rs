use std::collections::HashMap;

use super::{Crossing, Label, PlanarDiagram, Slot};

impl PlanarDiagram {
    /// Diagram of the mirror image: every crossing switched.
    pub fn mirror(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.over_in)
            .map(|(c, &over_in)| {
                let [a, b, cc, d] = c.arcs;
                if over_in == 3 {
                    Crossing::new(d, a, b, cc)
                } else {
                    Crossing::new(b, cc, d, a)
                }
            })
            .collect();
        PlanarDiagram::new(crossings).expect("crossing change preserves validity")
    }

    /// Same knot with the orientation of its single component reversed.
    pub fn reverse(&self) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.arcs;
                Crossing::new(cc, d, a, b)
            })
            .collect();
        PlanarDiagram::new(crossings).expect("reversal preserves validity")
    }

    /// Relabels edges `1..=2n` in traversal order, starting with the edge that
    /// enters crossing 0 along its under-strand.
    pub fn canonical_labels(&self) -> PlanarDiagram {
        if self.crossings.is_empty() {
            return self.clone();
        }
        let partner = self.partners();
        let mut map: HashMap<Label, Label> = HashMap::new();
        let start = Slot { crossing: 0, slot: 0 };
        let mut cur = start;
        let mut next_label = 1;
        loop {
            map.insert(self.label_at(cur), next_label);
            next_label += 1;
            let out = Slot {
                crossing: cur.crossing,
                slot: (cur.slot + 2) % 4,
            };
            cur = partner[&out];
            if cur == start {
                break;
            }
        }
        self.relabel(|l| map[&l])
    }

    /// Applies an injective relabeling.
    pub fn relabel(&self, f: impl Fn(Label) -> Label) -> PlanarDiagram {
        let crossings = self
            .crossings
            .iter()
            .map(|c| Crossing {
                arcs: c.arcs.map(&f),
            })
            .collect();
        PlanarDiagram {
            crossings,
            signs: self.signs.clone(),
            over_in: self.over_in.clone(),
        }
    }

    /// Equality up to edge relabeling and crossing order.
    pub fn same_up_to_relabeling(&self, other: &PlanarDiagram) -> bool {
        if self.crossing_count() != other.crossing_count() {
            return false;
        }
        if self.crossings.is_empty() {
            return true;
        }
        let target = {
            let mut v = other.canonical_labels().to_tuples();
            v.sort();
            v
        };
        // canonical labels depend on which crossing comes first
        (0..self.crossings.len()).any(|i| {
            let mut rotated = self.crossings.clone();
            rotated.swap(0, i);
            let Ok(d) = PlanarDiagram::new(rotated) else {
                return false;
            };
            let mut v = d.canonical_labels().to_tuples();
            v.sort();
            v == target
        })
    }
}

/// Connected sum along the edge entering each diagram's first crossing.
pub fn connected_sum(d1: &PlanarDiagram, d2: &PlanarDiagram) -> PlanarDiagram {
    if d1.is_unknot_diagram() {
        return d2.clone();
    }
    if d2.is_unknot_diagram() {
        return d1.clone();
    }
    let offset = d1.max_label();
    let d2 = d2.relabel(|l| l + offset);
    let x = d1.crossings[0].arcs[0];
    let y = d2.crossings[0].arcs[0];
    let mut crossings = d1.crossings.clone();
    crossings[0].arcs[0] = y;
    let mut tail = d2.crossings.clone();
    tail[0].arcs[0] = x;
    crossings.extend(tail);
    PlanarDiagram::new(crossings).expect("connected sum of knot diagrams is a knot diagram")
}
