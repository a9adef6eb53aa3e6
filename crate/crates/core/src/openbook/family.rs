//! The fiber surface of 6_3 and the monodromies `f_n` of its annulus
//! twists.
//!
//! The surface is a plumbing of four Hopf bands with core curves
//! `a, b, c, d`, consecutive cores meeting once, so in the basis
//! `a, b, c, d` the intersection form is the chain matrix. The curve `c'1`
//! is homologous to `c`, `c'2` to `a + b + c + d`, and `e` to `d`.

use std::collections::BTreeMap;

use super::{OpenBook, OpenBookError, SurgeryDescription, TwistWord};

/// Largest `|n|` accepted by [`family_surgery_description`].
pub const FAMILY_BOUND: i64 = 8;

pub(crate) const C1: &str = "c'1";
pub(crate) const C2: &str = "c'2";

pub(crate) fn chain_omega() -> Vec<Vec<i64>> {
    vec![vec![0, 1, 0, 0], vec![-1, 0, 1, 0], vec![0, -1, 0, 1], vec![0, 0, -1, 0]]
}

fn curves() -> BTreeMap<String, Vec<i64>> {
    [
        ("a", [1, 0, 0, 0]),
        ("b", [0, 1, 0, 0]),
        ("c", [0, 0, 1, 0]),
        ("d", [0, 0, 0, 1]),
        ("e", [0, 0, 0, 1]),
        (C1, [0, 0, 1, 0]),
        (C2, [1, 1, 1, 1]),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.to_vec()))
    .collect()
}

/// The 6_3 fiber surface with the given monodromy word.
pub fn family_open_book(word: &TwistWord) -> OpenBook {
    OpenBook { genus: 2, boundary: 1, omega: chain_omega(), curves: curves(), word: word.clone() }
}

fn f0() -> TwistWord {
    TwistWord::new().then("d", -1).then("b", 1).then("c", -1).then("a", 1)
}

/// `f_n = t_{c'2}^n t_{c'1}^{-n} t_d^{-1} t_b t_c^{-1} t_a`
pub fn word_for_an(n: i64) -> TwistWord {
    TwistWord::new().then(C2, n).then(C1, -n).concat(&f0())
}

/// `t_a^{-1} t_b^{-1} t_e t_c^n t_e^{-1} t_b t_a t_c^{-n} f_0`, the same
/// mapping class written with `c'2` as the image of `c`.
pub fn word_for_an_conjugated(n: i64) -> TwistWord {
    TwistWord::new()
        .then("a", -1)
        .then("b", -1)
        .then("e", 1)
        .then("c", n)
        .then("e", -1)
        .then("b", 1)
        .then("a", 1)
        .then("c", -n)
        .concat(&f0())
}

/// Legendrian realization of a page curve in the standard contact sphere:
/// Thurston-Bennequin number and rotation number.
struct Legendrian {
    tb: i64,
    rot: i64,
}

fn legendrian(curve: &str) -> Option<Legendrian> {
    let (tb, rot) = match curve {
        "a" => (-1, 0),
        "b" => (-1, 0),
        "c" => (-3, 2),
        "d" => (-2, 1),
        C1 => (1, 0),
        C2 => (1, 2),
        _ => return None,
    };
    Some(Legendrian { tb, rot })
}

/// Linking numbers between realizations of distinct curves.
fn linking(x: &str, y: &str) -> i64 {
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    match (x, y) {
        ("a", "b") | ("b", "c") => 1,
        ("c", "d") => -1,
        (C1, C2) => 1,
        _ => 0,
    }
}

/// Contact surgery description of the open book with monodromy `f_n`: one
/// component per twist after expanding powers, in word order. A
/// right-handed twist is a contact `(-1)`-surgery (smooth framing
/// `tb - 1`), a left-handed one a contact `(+1)`-surgery (`tb + 1`).
/// Parallel copies of one curve link `tb` times.
pub fn family_surgery_description(n: i64) -> Result<SurgeryDescription, OpenBookError> {
    if n.abs() > FAMILY_BOUND {
        return Err(OpenBookError::Bound { n, bound: FAMILY_BOUND });
    }
    let mut letters: Vec<(&str, i64)> = Vec::new();
    let word = word_for_an(n);
    for l in &word.letters {
        for _ in 0..l.exp.unsigned_abs() {
            letters.push((&l.curve, l.exp.signum()));
        }
    }
    let data: Vec<Legendrian> = letters
        .iter()
        .map(|(c, _)| legendrian(c).ok_or_else(|| OpenBookError::UnknownCurve(c.to_string())))
        .collect::<Result<_, _>>()?;
    let k = letters.len();
    let mut m = vec![vec![0; k]; k];
    for i in 0..k {
        for j in 0..k {
            m[i][j] = if i == j {
                data[i].tb - letters[i].1
            } else if letters[i].0 == letters[j].0 {
                data[i].tb
            } else {
                linking(letters[i].0, letters[j].0)
            };
        }
    }
    Ok(SurgeryDescription {
        linking: m,
        rotations: data.iter().map(|d| d.rot).collect(),
        q: letters.iter().filter(|l| l.1 < 0).count() as u64,
    })
}

/// Whether `K_n` and `K_m` are the same fibered knot.
pub fn same_fibered_knot(n: i64, m: i64) -> bool {
    n == m || n + m == -1
}
