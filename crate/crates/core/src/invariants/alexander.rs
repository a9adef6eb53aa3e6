//! Alexander polynomial from the Wirtinger presentation.

use std::collections::HashMap;

use crate::diagram::{Label, PlanarDiagram};
use crate::laurent::LaurentPoly;

/// Fox-derivative matrix: one row per crossing relation, one column per
/// Wirtinger generator (over-arc).
pub fn alexander_matrix(d: &PlanarDiagram) -> Vec<Vec<LaurentPoly>> {
    let n = d.crossing_count();
    let arc_of = wirtinger_arcs(d);
    let t = LaurentPoly::var();
    let one = LaurentPoly::one();
    let one_minus_t = &one - &t;
    let mut m = vec![vec![LaurentPoly::zero(); n]; n];
    for (ci, c) in d.crossings().iter().enumerate() {
        let over = arc_of[&c.arcs[1]];
        let under_in = arc_of[&c.arcs[0]];
        let under_out = arc_of[&c.arcs[2]];
        let (a_in, a_out) = if d.signs()[ci] > 0 {
            (t.clone(), -&one)
        } else {
            (-&one, t.clone())
        };
        m[ci][over] += one_minus_t.clone();
        m[ci][under_in] += a_in;
        m[ci][under_out] += a_out;
    }
    m
}

/// Maps each edge label to the index of the over-arc containing it. Edges
/// join into one arc where they pass over a crossing.
fn wirtinger_arcs(d: &PlanarDiagram) -> HashMap<Label, usize> {
    let labels = d.labels();
    let idx: HashMap<Label, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    for c in d.crossings() {
        let a = find(&mut parent, idx[&c.arcs[1]]);
        let b = find(&mut parent, idx[&c.arcs[3]]);
        parent[a] = b;
    }
    let mut arc_index: HashMap<usize, usize> = HashMap::new();
    let mut out = HashMap::new();
    for (i, &l) in labels.iter().enumerate() {
        let r = find(&mut parent, i);
        let next = arc_index.len();
        let a = *arc_index.entry(r).or_insert(next);
        out.insert(l, a);
    }
    debug_assert_eq!(arc_index.len(), d.crossing_count());
    out
}

/// Fraction-free Gaussian elimination over `Z[t, t^{-1}]`.
pub fn bareiss_determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut sign = LaurentPoly::one();
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return LaurentPoly::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotients are exact in an integral domain");
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Determinant of the matrix with the last row and column removed.
pub fn alexander_minor(d: &PlanarDiagram) -> LaurentPoly {
    let mut m = alexander_matrix(d);
    m.pop();
    for row in &mut m {
        row.pop();
    }
    bareiss_determinant(m)
}

#[cfg(test)]
mod tests {
    use num_traits::Zero;

    use super::*;

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = m.len();
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut acc = LaurentPoly::zero();
        for j in 0..n {
            if m[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * &cofactor_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc += -term;
            }
        }
        acc
    }

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let m = vec![
            vec![p(0, &[1, -1]), p(1, &[1]), p(0, &[-1])],
            vec![p(0, &[-1]), p(0, &[1, -1]), p(0, &[0, 1])],
            vec![p(0, &[0, 1]), p(0, &[-1]), p(0, &[1, -1])],
        ];
        assert_eq!(bareiss_determinant(m.clone()), cofactor_det(&m));
        let z = vec![vec![LaurentPoly::zero(), p(0, &[1])], vec![p(0, &[2]), p(0, &[3])]];
        assert_eq!(bareiss_determinant(z.clone()), cofactor_det(&z));
    }

    #[test]
    fn trefoil_minor_by_hand() {
        let d = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let m = alexander_matrix(&d);
        // every row of a Fox matrix sums to zero at t = 1
        for row in &m {
            let s: LaurentPoly = row.iter().cloned().sum();
            assert!(s.eval_one().is_zero());
        }
        let minor: Vec<Vec<LaurentPoly>> = m[..2].iter().map(|r| r[..2].to_vec()).collect();
        let det = cofactor_det(&minor);
        assert!(det.is_associate(&p(0, &[1, -1, 1])));
        assert!(alexander_minor(&d).is_associate(&det));
    }

    #[test]
    fn minor_choice_is_irrelevant() {
        let d = PlanarDiagram::parse("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        let m = alexander_matrix(&d);
        let n = m.len();
        let base = alexander_minor(&d);
        for r in 0..n {
            for c in 0..n {
                let sub: Vec<Vec<LaurentPoly>> = m
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != r)
                    .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
                    .collect();
                assert!(bareiss_determinant(sub).is_associate(&base));
            }
        }
    }
}
