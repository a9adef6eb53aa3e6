//! Greedy Reidemeister I/II reduction.

use std::collections::HashMap;

use super::{Crossing, Label, PlanarDiagram};

impl PlanarDiagram {
    /// Removes kinks and over/under bigons until none remain. Never increases
    /// the crossing count; the result is canonically relabeled.
    pub fn simplify(&self) -> PlanarDiagram {
        let mut cur = self.clone();
        loop {
            if let Some(next) = cur.reduce_r1().or_else(|| cur.reduce_r2()) {
                cur = next;
            } else {
                return cur.canonical_labels();
            }
        }
    }

    fn reduce_r1(&self) -> Option<PlanarDiagram> {
        for (ci, c) in self.crossings.iter().enumerate() {
            for i in 0..4 {
                if c.arcs[i] != c.arcs[(i + 1) % 4] {
                    continue;
                }
                let keep = c.arcs[(i + 2) % 4];
                let drop = c.arcs[(i + 3) % 4];
                let rest = self.without(&[ci], &[(drop, keep)]);
                if let Some(d) = rest {
                    return Some(d);
                }
            }
        }
        None
    }

    fn reduce_r2(&self) -> Option<PlanarDiagram> {
        for face in self.faces() {
            let [a, b] = face[..] else { continue };
            if a.crossing == b.crossing {
                continue;
            }
            let (x, i) = (a.crossing, a.slot);
            let (y, j) = (b.crossing, b.slot);
            // edge in slot i+1 at x is the edge in slot j at y; one strand must
            // be over at both ends
            if (i + 1) % 2 != j % 2 {
                continue;
            }
            let cx = &self.crossings[x].arcs;
            let cy = &self.crossings[y].arcs;
            let merges = [
                (cx[(i + 3) % 4], cy[(j + 2) % 4]),
                (cx[(i + 2) % 4], cy[(j + 3) % 4]),
            ];
            if let Some(d) = self.without(&[x, y], &merges) {
                return Some(d);
            }
        }
        None
    }

    /// Deletes crossings and identifies label pairs; `None` if the result is
    /// not a valid knot diagram.
    fn without(&self, remove: &[usize], merges: &[(Label, Label)]) -> Option<PlanarDiagram> {
        let mut parent: HashMap<Label, Label> = HashMap::new();
        fn find(parent: &HashMap<Label, Label>, mut l: Label) -> Label {
            while let Some(&p) = parent.get(&l) {
                if p == l {
                    break;
                }
                l = p;
            }
            l
        }
        for &(a, b) in merges {
            let ra = find(&parent, a);
            let rb = find(&parent, b);
            if ra != rb {
                parent.insert(ra, rb);
            }
        }
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, c)| Crossing {
                arcs: c.arcs.map(|l| find(&parent, l)),
            })
            .collect();
        PlanarDiagram::new(crossings).ok()
    }
}
