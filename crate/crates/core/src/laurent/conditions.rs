//! Polynomial-level slice and ribbon conditions.

use num_bigint::BigInt;
use num_traits::One;

use super::{factor, LaurentPoly, UnitNormalForm};

fn reciprocal(f: &UnitNormalForm) -> UnitNormalForm {
    f.poly()
        .involute()
        .normalize()
        .expect("involute of a nonzero polynomial is nonzero")
}

/// Searches for `f` with `f(t) f(t^{-1})` associate to `p`.
///
/// Every irreducible factor `g` of `p` must be matched by its reciprocal
/// with equal multiplicity; a self-reciprocal factor needs even
/// multiplicity. From each reciprocal pair the smaller factor (in the
/// deterministic factor order) goes into the witness.
pub fn fox_milnor(p: &LaurentPoly) -> Option<UnitNormalForm> {
    let fac = factor(p).ok()?;
    let root = fac.content.sqrt();
    if &root * &root != fac.content {
        return None;
    }
    let mut witness = LaurentPoly::constant(root);
    for (g, m) in &fac.factors {
        let gr = reciprocal(g);
        if &gr == g {
            if m % 2 != 0 {
                return None;
            }
            witness = &witness * &g.poly().pow(m / 2);
        } else {
            if fac.multiplicity(&gr) != *m {
                return None;
            }
            if g < &gr {
                witness = &witness * &g.poly().pow(*m);
            }
        }
    }
    let witness = witness.normalize().ok()?;
    debug_assert!((witness.poly() * &witness.poly().involute()).is_associate(p));
    Some(witness)
}

/// True when some non-unit `f` in `Z[t]` has `f(t) f(t^{-1})` dividing `p`.
///
/// Searching over sub-multisets of the irreducible factors reduces to a
/// single factor: either a reciprocal pair `g, g*` both present, a
/// self-reciprocal `g` of multiplicity at least two, or a constant prime
/// whose square divides the content. The zero polynomial is divisible by
/// everything.
pub fn miyazaki_divisor(p: &LaurentPoly) -> bool {
    let Ok(fac) = factor(p) else {
        return true;
    };
    if has_square_factor(&fac.content) {
        return true;
    }
    fac.factors.iter().any(|(g, m)| {
        let gr = reciprocal(g);
        if &gr == g {
            *m >= 2
        } else {
            fac.multiplicity(&gr) >= 1
        }
    })
}

fn has_square_factor(n: &BigInt) -> bool {
    let mut m = n.clone();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % (&d * &d)) == BigInt::from(0) {
            return true;
        }
        while (&m % &d) == BigInt::from(0) {
            m /= &d;
        }
        d += BigInt::one();
    }
    false
}
