#![allow(dead_code)]

use knotforge::diagram::PlanarDiagram;
use knotforge::obstruction::{Distinctness, KnotCertificate};
use proptest::prelude::*;

/// PD code of the closure of a braid word on `strands` strands. Letter
/// `i` (1-based) is `sigma_i`, `-i` its inverse; in `sigma_i` the strand
/// coming from the left passes over. Panics unless the closure is a knot.
pub fn braid_closure(strands: usize, word: &[i32]) -> PlanarDiagram {
    if word.is_empty() {
        return PlanarDiagram::unknot();
    }
    // seg[p] is the id of the segment currently at position p
    let mut next_id = strands;
    let mut seg: Vec<usize> = (0..strands).collect();
    // tuple and the slot where the over strand enters
    let mut raw: Vec<([usize; 4], usize)> = Vec::new();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        let (bl, br) = (seg[i], seg[i + 1]);
        let (tl, tr) = (next_id, next_id + 1);
        next_id += 2;
        // left strand goes to the right and vice versa
        raw.push(if g > 0 { ([br, tr, tl, bl], 3) } else { ([bl, br, tr, tl], 1) });
        seg[i] = tl;
        seg[i + 1] = tr;
    }
    // close: the top segment at p is the bottom segment p
    let mut alias: Vec<usize> = (0..next_id).collect();
    for p in 0..strands {
        alias[seg[p]] = p;
    }
    let ids: Vec<([usize; 4], usize)> = raw.iter().map(|(c, o)| (c.map(|s| alias[s]), *o)).collect();
    // number the arcs 1..2n in traversal order
    let mut order = std::collections::HashMap::new();
    let mut cur = ids[0].0[0];
    while !order.contains_key(&cur) {
        let n = order.len() as u32 + 1;
        order.insert(cur, n);
        cur = ids
            .iter()
            .find_map(|(c, o)| {
                if c[0] == cur {
                    Some(c[2])
                } else if c[*o] == cur {
                    Some(c[(o + 2) % 4])
                } else {
                    None
                }
            })
            .expect("segment ends somewhere");
    }
    let tuples: Vec<[u32; 4]> = ids.iter().map(|(c, _)| c.map(|s| order[&s])).collect();
    PlanarDiagram::from_tuples(&tuples).expect("closure is a knot diagram")
}

/// Permutation of the braid's strand positions.
pub fn permutation(strands: usize, word: &[i32]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..strands).collect();
    for &g in word {
        let i = g.unsigned_abs() as usize - 1;
        p.swap(i, i + 1);
    }
    p
}

fn cycle_of(p: &[usize], start: usize) -> Vec<usize> {
    let mut c = vec![start];
    let mut x = p[start];
    while x != start {
        c.push(x);
        x = p[x];
    }
    c
}

/// Appends generators joining cycles until the closure has one component.
pub fn make_knot(strands: usize, mut word: Vec<i32>) -> Vec<i32> {
    loop {
        let p = permutation(strands, &word);
        let c = cycle_of(&p, 0);
        if c.len() == strands {
            return word;
        }
        let i = (0..strands - 1).find(|&i| c.contains(&i) != c.contains(&(i + 1))).unwrap();
        word.push(i as i32 + 1);
    }
}

/// Named braid words with their tabulated Alexander polynomials, lowest
/// degree first.
pub const NAMED: &[(&str, usize, &[i32], &[i64])] = &[
    ("0_1", 1, &[], &[1]),
    ("3_1", 2, &[1, 1, 1], &[1, -1, 1]),
    ("4_1", 3, &[1, -2, 1, -2], &[1, -3, 1]),
    ("5_1", 2, &[1, 1, 1, 1, 1], &[1, -1, 1, -1, 1]),
    ("5_2", 3, &[1, 1, 1, 2, -1, 2], &[2, -3, 2]),
    ("6_1", 4, &[1, 1, 2, -1, -3, 2, -3], &[2, -5, 2]),
    ("6_2", 3, &[1, 1, 1, -2, 1, -2], &[1, -3, 3, -3, 1]),
    ("6_3", 3, &[1, 1, -2, 1, -2, -2], &[1, -3, 5, -3, 1]),
    ("7_1", 2, &[1, 1, 1, 1, 1, 1, 1], &[1, -1, 1, -1, 1, -1, 1]),
    ("8_18", 3, &[1, -2, 1, -2, 1, -2, 1, -2], &[1, -5, 10, -13, 10, -5, 1]),
    ("8_19", 3, &[1, 2, 1, 2, 1, 2, 1, 2], &[1, -1, 0, 1, 0, -1, 1]),
    ("8_20", 3, &[1, 1, 1, -2, -1, -1, -1, -2], &[1, -2, 3, -2, 1]),
    ("10_124", 3, &[1, 2, 1, 2, 1, 2, 1, 2, 1, 2], &[1, -1, 0, 1, -1, 1, 0, -1, 1]),
];

pub fn named(name: &str) -> PlanarDiagram {
    let (_, s, w, _) = NAMED.iter().find(|k| k.0 == name).expect("named knot");
    braid_closure(*s, w)
}

/// The fixed corpus: named knots, their mirrors, and small connected sums.
pub fn corpus() -> Vec<(String, PlanarDiagram)> {
    let mut out: Vec<(String, PlanarDiagram)> = NAMED.iter().map(|k| (k.0.to_string(), braid_closure(k.1, k.2))).collect();
    for k in ["3_1", "5_2", "6_3", "8_19"] {
        out.push((format!("m{k}"), named(k).mirror()));
    }
    for (a, b) in [("3_1", "3_1"), ("3_1", "4_1"), ("4_1", "6_3"), ("5_1", "5_2")] {
        out.push((format!("{a}#{b}"), knotforge::diagram::connected_sum(&named(a), &named(b))));
    }
    out.push(("3_1#m3_1".to_string(), knotforge::diagram::connected_sum(&named("3_1"), &named("3_1").mirror())));
    out
}

/// Random knot diagrams with at most `max_crossings` crossings.
pub fn arb_knot(max_crossings: usize) -> impl Strategy<Value = PlanarDiagram> {
    (2usize..=4)
        .prop_flat_map(move |s| {
            let len = max_crossings - (s - 1);
            let letter = (1..s as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
            (Just(s), prop::collection::vec(letter, 0..=len))
        })
        .prop_map(|(s, w)| braid_closure(s, &make_knot(s, w)))
}

/// Every way of dropping one hypothesis present in a NotRibbon pair.
pub fn mutations(k0: &KnotCertificate, k1: &KnotCertificate) -> Vec<(String, KnotCertificate, KnotCertificate)> {
    let mut out = Vec::new();
    for side in 0..2 {
        let pick = |f: &dyn Fn(&mut KnotCertificate)| {
            let (mut a, mut b) = (k0.clone(), k1.clone());
            f(if side == 0 { &mut a } else { &mut b });
            (a, b)
        };
        let (a, b) = pick(&|c| c.fibered = None);
        out.push((format!("fibered[{side}]"), a, b));
        let (a, b) = pick(&|c| c.alexander_irreducible = false);
        out.push((format!("irreducible[{side}]"), a, b));
        if [k0, k1][side].distinctness.is_some() {
            let (a, b) = pick(&|c| c.distinctness = None);
            out.push((format!("distinctness[{side}]"), a, b));
        }
        let by_jones = [k0, k1].iter().any(|c| c.distinctness == Some(Distinctness::JonesMismatch));
        if by_jones {
            let (a, b) = pick(&|c| c.jones = None);
            out.push((format!("jones[{side}]"), a, b));
        }
    }
    out
}
