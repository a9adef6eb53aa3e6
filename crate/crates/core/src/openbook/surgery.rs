//! Contact surgery descriptions and the `d3` invariant of the resulting
//! plane field.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::OpenBookError;

/// Legendrian link in the standard contact 3-sphere with contact `±1`
/// surgeries: smooth linking matrix, rotation numbers, and the number of
/// `+1` surgeries. The surgery file format.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct SurgeryDescription {
    pub linking: Vec<Vec<i64>>,
    pub rotations: Vec<i64>,
    pub q: u64,
}

impl SurgeryDescription {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn components(&self) -> usize {
        self.rotations.len()
    }

    pub fn validate(&self) -> Result<(), OpenBookError> {
        let k = self.linking.len();
        if self.rotations.len() != k || self.linking.iter().any(|r| r.len() != k) {
            return Err(OpenBookError::RotationLength { rotations: self.rotations.len(), size: k });
        }
        for i in 0..k {
            for j in 0..i {
                if self.linking[i][j] != self.linking[j][i] {
                    return Err(OpenBookError::NotSymmetric);
                }
            }
        }
        Ok(())
    }

    /// `c^2 = r^T M^{-1} r`
    pub fn c_squared(&self) -> Result<BigRational, OpenBookError> {
        self.validate()?;
        let x = solve(&self.linking, &self.rotations).ok_or(OpenBookError::Singular)?;
        Ok(x.iter().zip(&self.rotations).map(|(xi, &ri)| xi * rat(ri)).sum())
    }
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Solves `M x = r` over the rationals; `None` if `M` is singular.
fn solve(m: &[Vec<i64>], r: &[i64]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(r)
        .map(|(row, &ri)| row.iter().map(|&x| rat(x)).chain(std::iter::once(rat(ri))).collect())
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for j in k..=n {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
        }
    }
    Some((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
}

/// Signature of a symmetric integer matrix by congruence diagonalization
/// over the rationals.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect();
    let mut sig = 0;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // e_k -> e_k + e_j makes the pivot 2 a_kj
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for row in a.iter_mut() {
                    let v = row[j].clone();
                    row[k] += v;
                }
            } else {
                continue;
            }
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &a[k][k];
            for c in 0..n {
                let d = &f * &a[k][c];
                a[i][c] -= d;
            }
            for row in a.iter_mut() {
                let d = &f * &row[k];
                row[i] -= d;
            }
        }
        sig += if a[k][k].is_positive() { 1 } else { -1 };
    }
    sig
}

/// `(c^2 - 3 sigma - 2 chi) / 4 + q` with `chi = 1 + k` for the 4-ball with
/// one 2-handle per component.
pub fn d3(desc: &SurgeryDescription) -> Result<BigRational, OpenBookError> {
    let c2 = desc.c_squared()?;
    let k = desc.components() as i64;
    let sigma = signature(&desc.linking);
    Ok((c2 - rat(3 * sigma) - rat(2 * (1 + k))) / rat(4) + rat(desc.q as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]), 3);
        assert_eq!(signature(&[vec![1, 0], vec![0, -1]]), 0);
        assert_eq!(signature(&[vec![0, 1], vec![1, 0]]), 0);
        assert_eq!(signature(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(signature(&[]), 0);
        // E8-like negative definite piece: -2 on the diagonal of a chain
        let chain: Vec<Vec<i64>> = (0..5)
            .map(|i: usize| (0..5usize).map(|j| if i == j { -2 } else if i.abs_diff(j) == 1 { 1 } else { 0 }).collect())
            .collect();
        assert_eq!(signature(&chain), -5);
        assert_eq!(signature(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 0]]), 0);
        assert_eq!(signature(&[vec![0, 2], vec![2, 3]]), 0);
        assert_eq!(signature(&[vec![2, 1], vec![1, 2]]), 2);
    }

    #[test]
    fn d3_values() {
        assert_eq!(d3(&SurgeryDescription::empty()).unwrap(), frac(-1, 2));
        // one Legendrian unknot, tb = -1, r = 0, contact (-1): smooth -2
        let one = SurgeryDescription { linking: vec![vec![-2]], rotations: vec![0], q: 0 };
        assert_eq!(d3(&one).unwrap(), frac(-1, 4));
        // contact (+1) on the same unknot: smooth 0, singular
        let zero = SurgeryDescription { linking: vec![vec![0]], rotations: vec![0], q: 1 };
        assert_eq!(d3(&zero), Err(OpenBookError::Singular));
    }

    #[test]
    fn malformed() {
        let bad = SurgeryDescription { linking: vec![vec![1, 2], vec![3, 1]], rotations: vec![0, 0], q: 0 };
        assert_eq!(d3(&bad), Err(OpenBookError::NotSymmetric));
        let short = SurgeryDescription { linking: vec![vec![1]], rotations: vec![], q: 0 };
        assert!(matches!(d3(&short), Err(OpenBookError::RotationLength { .. })));
    }

    #[test]
    fn solver() {
        let x = solve(&[vec![2, 1], vec![1, 3]], &[1, 2]).unwrap();
        assert_eq!(x, vec![frac(1, 5), frac(3, 5)]);
        assert!(solve(&[vec![1, 2], vec![2, 4]], &[1, 1]).is_none());
    }
}
