//! Factorization over the integers by Kronecker's interpolation method.
//!
//! A primitive polynomial of degree `n` that is reducible has a factor of
//! degree `d <= n/2`. Such a factor `g` satisfies `g(x) | f(x)` at every
//! integer `x`, so evaluating `f` at `d + 1` points and interpolating every
//! combination of divisors finds all candidates. Exact and deterministic;
//! fast enough for the spans that occur for small knots.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{LaurentError, LaurentPoly, UnitNormalForm};

/// `sign * content * t^shift * prod(factor^multiplicity)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    pub shift: i64,
    /// Positive gcd of the coefficients.
    pub content: BigInt,
    /// Irreducible, primitive factors in unit normal form, sorted, each with
    /// its multiplicity.
    pub factors: Vec<(UnitNormalForm, u32)>,
}

impl Factorization {
    /// Multiplies everything back together.
    pub fn expand(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::monomial(&self.content * BigInt::from(self.sign), self.shift);
        for (f, m) in &self.factors {
            acc = &acc * &f.poly().pow(*m);
        }
        acc
    }

    pub fn multiplicity(&self, f: &UnitNormalForm) -> u32 {
        self.factors
            .iter()
            .find(|(g, _)| g == f)
            .map_or(0, |(_, m)| *m)
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, m)| m).sum()
    }
}

pub fn factor(p: &LaurentPoly) -> Result<Factorization, LaurentError> {
    let shift = p.min_exp().ok_or(LaurentError::ZeroPolynomial)?;
    let q = p.shift(-shift);
    let content = q.content();
    let prim = q
        .div_exact(&LaurentPoly::constant(content.clone()))
        .expect("content divides every coefficient");

    let coeffs: Vec<BigInt> = (0..=prim.max_exp().unwrap()).map(|e| prim.coeff(e)).collect();
    let mut pieces = Vec::new();
    split(coeffs, &mut pieces);

    let mut counts: BTreeMap<UnitNormalForm, u32> = BTreeMap::new();
    for piece in pieces {
        let nf = to_poly(&piece).normalize()?;
        *counts.entry(nf).or_default() += 1;
    }
    let mut out = Factorization {
        sign: 1,
        shift,
        content,
        factors: counts.into_iter().collect(),
    };
    if out.expand() != *p {
        out.sign = -1;
        debug_assert_eq!(out.expand(), *p);
    }
    Ok(out)
}

/// True when `p` is a primitive polynomial with exactly one irreducible factor
/// spanning its whole degree range.
pub fn is_irreducible(p: &LaurentPoly) -> Result<bool, LaurentError> {
    if p.is_zero() {
        return Err(LaurentError::ZeroPolynomial);
    }
    if p.span() == 0 {
        return Err(LaurentError::ConstantPolynomial);
    }
    let f = factor(p)?;
    Ok(f.content.is_one()
        && f.factors.len() == 1
        && f.factors[0].1 == 1
        && f.factors[0].0.poly().span() == p.span())
}

fn to_poly(coeffs: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(coeffs.iter().enumerate().map(|(i, c)| (i as i64, c.clone())))
}

fn degree(coeffs: &[BigInt]) -> usize {
    coeffs.len() - 1
}

fn eval(coeffs: &[BigInt], x: i64) -> BigInt {
    let x = BigInt::from(x);
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * &x + c)
}

// `f` is primitive with nonzero constant term.
fn split(f: Vec<BigInt>, out: &mut Vec<Vec<BigInt>>) {
    let n = degree(&f);
    if n == 0 {
        return;
    }
    for d in 1..=n / 2 {
        if let Some(g) = find_factor(&f, d) {
            let h = to_poly(&f)
                .div_exact(&to_poly(&g))
                .expect("candidate was verified to divide");
            let h: Vec<BigInt> = (0..=h.max_exp().unwrap()).map(|e| h.coeff(e)).collect();
            // g has minimal degree among factors, hence is irreducible
            out.push(g);
            split(h, out);
            return;
        }
    }
    out.push(f);
}

/// Interpolation points tried in order: 0, 1, -1, 2, -2, ...
fn point_sequence() -> impl Iterator<Item = i64> {
    (0..).map(|i: i64| if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 })
}

fn find_factor(f: &[BigInt], d: usize) -> Option<Vec<BigInt>> {
    let mut samples: Vec<(i64, BigInt)> = Vec::new();
    for x in point_sequence().take(3 * (d + 1) + 6) {
        let v = eval(f, x);
        if v.is_zero() {
            // integer root x: t - x is a linear factor
            if d == 1 {
                return Some(vec![BigInt::from(-x), BigInt::one()]);
            }
            continue;
        }
        samples.push((x, v));
    }
    // fewer divisors first keeps the combination count small
    samples.sort_by_key(|(x, v)| (v.abs(), x.abs()));
    if samples.len() < d + 1 {
        return None;
    }
    let (basis, checks) = samples.split_at(d + 1);
    let xs: Vec<i64> = basis.iter().map(|(x, _)| *x).collect();
    let divisor_lists: Vec<Vec<BigInt>> = basis
        .iter()
        .enumerate()
        .map(|(i, (_, v))| signed_divisors(&v.abs(), i > 0))
        .collect();

    let target = to_poly(f);
    let mut idx = vec![0usize; d + 1];
    loop {
        let ys: Vec<BigInt> = idx
            .iter()
            .zip(&divisor_lists)
            .map(|(&i, list)| list[i].clone())
            .collect();
        if let Some(g) = interpolate(&xs, &ys) {
            if degree(&g) == d
                && checks
                    .iter()
                    .all(|(x, v)| {
                        let gx = eval(&g, *x);
                        !gx.is_zero() && (v % gx).is_zero()
                    })
                && target.div_exact(&to_poly(&g)).is_some()
            {
                return Some(g);
            }
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == idx.len() {
                return None;
            }
            idx[k] += 1;
            if idx[k] < divisor_lists[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Positive divisors of `n`, plus their negatives when `signed`.
fn signed_divisors(n: &BigInt, signed: bool) -> Vec<BigInt> {
    let mut pos = positive_divisors(n);
    if signed {
        let neg: Vec<BigInt> = pos.iter().map(|d| -d).collect();
        pos.extend(neg);
    }
    pos
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut m = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += if p.to_u32() == Some(2) { 1 } else { 2 };
    }
    if m > BigInt::one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Newton interpolation through `(xs[i], ys[i])`; `None` unless every
/// monomial coefficient is an integer.
fn interpolate(xs: &[i64], ys: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().map(|y| BigRational::from_integer(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let denom = BigInt::from(xs[i] - xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / BigRational::from_integer(denom);
        }
    }
    // Horner on the Newton basis, building monomial coefficients.
    let mut coeffs: Vec<BigRational> = vec![dd[n - 1].clone()];
    for i in (0..n - 1).rev() {
        // coeffs * (t - xs[i]) + dd[i]
        let xi = BigRational::from_integer(BigInt::from(xs[i]));
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (k, c) in coeffs.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xi;
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    coeffs
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, c)
    }

    fn nf(c: &[i64]) -> UnitNormalForm {
        p(0, c).normalize().unwrap()
    }

    #[test]
    fn splits_product_of_linear_factors() {
        let f = factor(&p(0, &[2, -5, 2])).unwrap();
        assert_eq!(f.factors, vec![(nf(&[1, -2]), 1), (nf(&[2, -1]), 1)]);
        assert_eq!(f.expand(), p(0, &[2, -5, 2]));
        // the product the factorization claims, checked independently
        assert_eq!(&p(0, &[2, -1]) * &p(0, &[1, -2]), p(0, &[2, -5, 2]));
    }

    #[test]
    fn alexander_quartic_is_irreducible() {
        let d = p(0, &[1, -3, 5, -3, 1]);
        let f = factor(&d).unwrap();
        assert_eq!(f.factors, vec![(nf(&[1, -3, 5, -3, 1]), 1)]);
        assert!(is_irreducible(&d).unwrap());
        assert!(!is_irreducible(&p(0, &[2, -5, 2])).unwrap());
        assert!(is_irreducible(&p(0, &[1, 1])).unwrap());
    }

    #[test]
    fn pure_unit_has_no_factors() {
        let f = factor(&LaurentPoly::monomial(1, 2)).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.shift, 2);
        assert_eq!(f.sign, 1);
        let g = factor(&LaurentPoly::monomial(-6, -3)).unwrap();
        assert_eq!((g.sign, g.shift, g.content.clone()), (-1, -3, BigInt::from(6)));
    }

    #[test]
    fn errors() {
        assert_eq!(factor(&LaurentPoly::zero()), Err(LaurentError::ZeroPolynomial));
        assert_eq!(
            is_irreducible(&LaurentPoly::constant(5)),
            Err(LaurentError::ConstantPolynomial)
        );
    }

    #[test]
    fn content_and_sign_roundtrip() {
        let q = p(-3, &[-6, 0, 6]); // -6 t^-3 (1 - t^2)
        let f = factor(&q).unwrap();
        assert_eq!(f.content, BigInt::from(6));
        assert_eq!(f.expand(), q);
        assert_eq!(f.factor_count(), 2);
        assert!(!is_irreducible(&p(0, &[2, 2])).unwrap());
    }

    #[test]
    fn repeated_quartic() {
        let d = p(0, &[1, -3, 5, -3, 1]);
        let f = factor(&d.pow(2)).unwrap();
        assert_eq!(f.factors, vec![(nf(&[1, -3, 5, -3, 1]), 2)]);
    }

    #[test]
    fn higher_degree_products() {
        // cyclotomic-style and non-reciprocal pieces mixed together
        let parts = [p(0, &[1, 1, 1]), p(0, &[1, -1, 0, 0, 1]), p(0, &[3, 0, 1]), p(0, &[1, -3, 5, -3, 1])];
        let prod: LaurentPoly = parts.iter().cloned().product();
        let f = factor(&prod).unwrap();
        assert_eq!(f.expand(), prod);
        assert_eq!(f.factor_count(), 4);
        for part in &parts {
            assert_eq!(f.multiplicity(&part.normalize().unwrap()), 1);
        }
    }

    #[test]
    fn divisors_and_interpolation() {
        assert_eq!(
            positive_divisors(&BigInt::from(12)),
            [1, 2, 3, 4, 6, 12].map(BigInt::from).to_vec()
        );
        assert_eq!(positive_divisors(&BigInt::from(1)), vec![BigInt::one()]);
        let g = interpolate(&[0, 1, -1], &[1, 3, 3].map(BigInt::from)).unwrap();
        assert_eq!(g, [1, 0, 2].map(BigInt::from).to_vec());
        assert!(interpolate(&[0, 2], &[0, 1].map(BigInt::from)).is_none());
    }
}
