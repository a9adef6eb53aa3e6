//! Kauffman bracket state sums.
//!
//! The production evaluator contracts crossings one at a time, keeping for
//! every partial state only how the open edge ends are paired up. States
//! with the same pairing are merged, so the work is governed by the width of
//! the frontier rather than by `2^n`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::diagram::{Label, PlanarDiagram};
use crate::laurent::LaurentPoly;

/// `-A^2 - A^{-2}`
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

/// The two smoothings of `X(a,b,c,d)`: weight `A` joins `a-b` and `c-d`,
/// weight `A^{-1}` joins `a-d` and `b-c`.
fn smoothings(arcs: [Label; 4]) -> [(i64, [(Label, Label); 2]); 2] {
    let [a, b, c, d] = arcs;
    [(1, [(a, b), (c, d)]), (-1, [(a, d), (b, c)])]
}

/// Pairing of open edge ends, stored symmetrically.
type Frontier = BTreeMap<Label, Label>;

/// Adds an arc between ends `x` and `y`; returns true if this closes a loop.
fn join(m: &mut Frontier, x: Label, y: Label) -> bool {
    if x == y || m.get(&x) == Some(&y) {
        m.remove(&x);
        m.remove(&y);
        return true;
    }
    let a = match m.remove(&x) {
        Some(p) => {
            m.remove(&p);
            p
        }
        None => x,
    };
    let b = match m.remove(&y) {
        Some(q) => {
            m.remove(&q);
            q
        }
        None => y,
    };
    m.insert(a, b);
    m.insert(b, a);
    false
}

/// Crossing order that keeps the frontier small: always take the crossing
/// sharing the most edges with those already processed.
fn contraction_order(d: &PlanarDiagram) -> Vec<usize> {
    let cs = d.crossings();
    let mut done = vec![false; cs.len()];
    let mut open: HashSet<Label> = HashSet::new();
    let mut order = Vec::with_capacity(cs.len());
    for _ in 0..cs.len() {
        let mut best: Option<(usize, i64)> = None;
        for (i, c) in cs.iter().enumerate() {
            if done[i] {
                continue;
            }
            let shared = c.arcs.iter().filter(|l| open.contains(l)).count() as i64;
            // new ends added minus ends closed
            let score = 2 * shared - 4;
            if best.is_none_or(|(_, s)| score > s) {
                best = Some((i, score));
            }
        }
        let (i, _) = best.unwrap();
        done[i] = true;
        order.push(i);
        for &l in &cs[i].arcs {
            if !open.remove(&l) {
                open.insert(l);
            }
        }
    }
    order
}

/// Kauffman bracket in the variable `A`, normalized so the unknot is 1.
pub fn kauffman_bracket(d: &PlanarDiagram) -> LaurentPoly {
    if d.is_unknot_diagram() {
        return LaurentPoly::one();
    }
    let delta = loop_value();
    let mut states: HashMap<Frontier, LaurentPoly> = HashMap::new();
    states.insert(Frontier::new(), LaurentPoly::one());
    for ci in contraction_order(d) {
        let arcs = d.crossings()[ci].arcs;
        let mut next: HashMap<Frontier, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (frontier, weight) in &states {
            for (a_exp, pairs) in smoothings(arcs) {
                let mut f = frontier.clone();
                let mut loops = 0u32;
                for (x, y) in pairs {
                    loops += join(&mut f, x, y) as u32;
                }
                let w = (weight * &LaurentPoly::monomial(1, a_exp)) * delta.pow(loops);
                *next.entry(f).or_default() += w;
            }
        }
        next.retain(|_, w| !w.is_zero());
        states = next;
    }
    let total = states.remove(&Frontier::new()).unwrap_or_default();
    debug_assert!(states.is_empty());
    total
        .div_exact(&delta)
        .expect("every state of a nonempty diagram has at least one loop")
}

/// Reference evaluation over all `2^n` states, counting loops with a
/// union-find over edge labels.
pub fn kauffman_bracket_naive(d: &PlanarDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    if n == 0 {
        return LaurentPoly::one();
    }
    assert!(n < 32, "naive bracket is exponential");
    let labels = d.labels();
    let index: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let delta = loop_value();
    let mut total = LaurentPoly::zero();
    for state in 0u32..(1 << n) {
        let mut parent: Vec<usize> = (0..labels.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let mut a_exp = 0i64;
        for (ci, c) in d.crossings().iter().enumerate() {
            let choice = ((state >> ci) & 1) as usize;
            let (e, pairs) = smoothings(c.arcs)[choice];
            a_exp += e;
            for (x, y) in pairs {
                let rx = find(&mut parent, index[&x]);
                let ry = find(&mut parent, index[&y]);
                parent[rx] = ry;
            }
        }
        let loops = (0..labels.len()).filter(|&i| find(&mut parent, i) == i).count() as u32;
        total += LaurentPoly::monomial(1, a_exp) * delta.pow(loops - 1);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> PlanarDiagram {
        PlanarDiagram::parse(s).unwrap()
    }

    #[test]
    fn unknot_and_kinks() {
        assert_eq!(kauffman_bracket(&PlanarDiagram::unknot()), LaurentPoly::one());
        let pos = d("X(1,1,2,2)");
        let neg = d("X(2,1,1,2)");
        assert_eq!(pos.writhe(), 1);
        assert_eq!(neg.writhe(), -1);
        assert_eq!(kauffman_bracket(&pos), LaurentPoly::monomial(-1, 3));
        assert_eq!(kauffman_bracket(&neg), LaurentPoly::monomial(-1, -3));
    }

    #[test]
    fn trefoil_by_hand() {
        // all-A state has 3 loops, one B-smoothing gives 2, two give 1,
        // all-B gives 2
        let t = d("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
        let dl = loop_value();
        let expect = &LaurentPoly::monomial(1, -3) * &dl
            + LaurentPoly::monomial(3, -1)
            + &LaurentPoly::monomial(3, 1) * &dl
            + LaurentPoly::monomial(1, 3) * dl.pow(2);
        assert_eq!(expect, LaurentPoly::from_terms([(7, 1), (3, -1), (-5, -1)]));
        assert_eq!(kauffman_bracket_naive(&t), expect);
        assert_eq!(kauffman_bracket(&t), expect);
    }

    #[test]
    fn production_matches_naive() {
        for s in [
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
            "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
            "X(1,4,2,5) X(3,8,4,1) X(5,2,6,3) X(6,7,7,8)",
            "X(1,3,2,2) X(4,3,1,4)",
        ] {
            let k = d(s);
            assert_eq!(kauffman_bracket(&k), kauffman_bracket_naive(&k), "{s}");
        }
    }
}
