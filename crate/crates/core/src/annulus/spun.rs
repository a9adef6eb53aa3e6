//! Annulus presentations realized in space.
//!
//! The annulus is a flat ring of core radius `R` and half width `W` in the
//! plane `z = 0`, turned through `full_twists` full rotations about its core
//! near angle 0. Its boundary circles are `c1` (outer edge) and `c2` (inner
//! edge). A band leaves `c1` at angle `start`, runs around the ring, and
//! passes it at each entry of `passes`: over it, under it, or straight
//! through it. It ends on `c2` at angle `end`. The knot is the boundary of
//! annulus plus band.
//!
//! An `n`-fold annulus twist is the homeomorphism of the complement of the
//! shrunken annulus that drags everything crossing it `n` times around the
//! core. Only the band pieces passing through the annulus are moved, so the
//! twisted knot is computed directly in space and projected to a diagram.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::AnnulusError;
use crate::diagram::PlanarDiagram;

const R: f64 = 10.0;
const W: f64 = 2.0;
const BAND_HALF_WIDTH: f64 = 0.4;
const PASS_HEIGHT: f64 = 1.0;
/// The slab `|z| < SLAB_Z, |rho - R| < SLAB_R` contains the core of the
/// shrunken annulus and nothing else but the piercing band pieces.
const SLAB_Z: f64 = 0.3;
const SLAB_R: f64 = 0.6;
const TWIST_HALF_ANGLE: f64 = 0.35;
const SAMPLE_STEP: f64 = 0.12;
const SMOOTH_WINDOW: usize = 9;
const SMOOTH_PASSES: usize = 3;
const ARC_POINTS: usize = 400;
/// Turns the projection away from the symmetric position of the model.
const VIEW_ANGLE: f64 = 0.1234567;

/// A twist by `n` spins pierced strands by `TWIST_DIRECTION * n` turns.
const TWIST_DIRECTION: i64 = -1;

type P3 = [f64; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PassKind {
    Over,
    Under,
    /// Through the annulus, descending when seen from outside.
    Down,
    Up,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pass {
    pub angle: f64,
    pub kind: PassKind,
}

/// Circular stretch of the band at distance `gap` beyond the annulus edge
/// and height `height`. `dir` is +1 or -1 for the direction of travel, 0
/// for the shorter way.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Leg {
    pub gap: f64,
    pub height: f64,
    #[serde(default)]
    pub dir: i8,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BandedAnnulus {
    pub full_twists: i64,
    pub start: f64,
    pub end: f64,
    pub passes: Vec<Pass>,
    /// One more leg than passes.
    pub legs: Vec<Leg>,
    /// Annulus twists already applied.
    #[serde(default)]
    pub turns: i64,
}

fn smoothstep(x: f64) -> f64 {
    let x = x.clamp(0.0, 1.0);
    x * x * (3.0 - 2.0 * x)
}

fn linspace(a: f64, b: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 { (b - a) / (n - 1) as f64 } else { 0.0 };
    (0..n).map(move |i| if i + 1 == n && n > 1 { b } else { a + step * i as f64 })
}

fn cyl(rho: f64, th: f64, z: f64) -> P3 {
    [rho * th.cos(), rho * th.sin(), z]
}

fn dist(a: &P3, b: &P3) -> f64 {
    ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt()
}

/// Piecewise linear interpolation of `ys` over increasing `xs`.
fn interp(x: f64, xs: &[f64], ys: &[f64]) -> f64 {
    if x <= xs[0] {
        return ys[0];
    }
    let last = xs.len() - 1;
    if x >= xs[last] {
        return ys[last];
    }
    let j = xs.partition_point(|&v| v <= x);
    let (x0, x1) = (xs[j - 1], xs[j]);
    ys[j - 1] + (ys[j] - ys[j - 1]) * (x - x0) / (x1 - x0)
}

fn resample(pts: &[P3], step: f64) -> Vec<P3> {
    let mut clean = vec![pts[0]];
    for w in pts.windows(2) {
        if dist(&w[0], &w[1]) > 1e-9 {
            clean.push(w[1]);
        }
    }
    let mut len = vec![0.0];
    for w in clean.windows(2) {
        len.push(len.last().unwrap() + dist(&w[0], &w[1]));
    }
    let total = *len.last().unwrap();
    let n = (total / step) as usize;
    let coord: Vec<Vec<f64>> = (0..3).map(|c| clean.iter().map(|p| p[c]).collect()).collect();
    linspace(0.0, total, n)
        .map(|u| [interp(u, &len, &coord[0]), interp(u, &len, &coord[1]), interp(u, &len, &coord[2])])
        .collect()
}

/// Centered moving average with the ends held fixed by padding.
fn box_smooth(pts: &[P3], k: usize) -> Vec<P3> {
    let h = k / 2;
    let n = pts.len();
    let at = |i: isize| pts[i.clamp(0, n as isize - 1) as usize];
    (0..n as isize)
        .map(|i| {
            let mut s = [0.0; 3];
            for j in i - h as isize..=i + h as isize {
                let p = at(j);
                for c in 0..3 {
                    s[c] += p[c];
                }
            }
            s.map(|v| v / k as f64)
        })
        .collect()
}

impl BandedAnnulus {
    pub fn validate(&self) -> Result<(), AnnulusError> {
        let bad = |why: &str| Err(AnnulusError::BadModel(why.to_string()));
        if self.legs.len() != self.passes.len() + 1 {
            return bad("need exactly one more leg than passes");
        }
        if self.passes.len() % 2 == 0 {
            return bad("the band must pass the annulus an odd number of times to reach the inner edge");
        }
        for l in &self.legs {
            if !(l.gap > 0.3 && l.gap < 4.0) || !(l.height.abs() < PASS_HEIGHT) {
                return bad("leg gap or height out of range");
            }
            if !(-1..=1).contains(&l.dir) {
                return bad("leg direction must be -1, 0 or 1");
            }
        }
        if self.full_twists.abs() > 4 {
            return bad("too many annulus full twists");
        }
        let angles = std::iter::once(self.start).chain(std::iter::once(self.end)).chain(self.passes.iter().map(|p| p.angle));
        for a in angles {
            let d = (a + PI).rem_euclid(2.0 * PI) - PI;
            if !a.is_finite() || d.abs() < TWIST_HALF_ANGLE + 0.1 {
                return bad("band attachments and passes must avoid the twisted part of the annulus");
            }
        }
        Ok(())
    }

    fn twist_angle(&self, th: f64) -> f64 {
        let d = (th + PI).rem_euclid(2.0 * PI) - PI;
        2.0 * PI * self.full_twists as f64 * smoothstep((d + TWIST_HALF_ANGLE) / (2.0 * TWIST_HALF_ANGLE))
    }

    /// Point at angle `th`, offset `r` across and `s` normal to the annulus.
    fn frame(&self, th: f64, r: f64, s: f64) -> P3 {
        let a = self.twist_angle(th);
        let rad = R + r * a.cos() - s * a.sin();
        [rad * th.cos(), rad * th.sin(), r * a.sin() + s * a.cos()]
    }

    fn band_core(&self) -> Vec<P3> {
        let mut pts = Vec::new();
        let mut side = 1.0;
        let mut th = self.start;
        let first = &self.legs[0];
        for r in linspace(R + W + 0.05, R + W + first.gap, 10) {
            pts.push(cyl(r, th, first.height * (r - R - W) / first.gap));
        }
        let stops = self.passes.iter().map(|p| (p.angle, Some(p.kind))).chain(std::iter::once((self.end, None)));
        for (i, (to, kind)) in stops.enumerate() {
            let leg = &self.legs[i];
            let rho = R + side * (W + leg.gap);
            let delta = (to - th).rem_euclid(2.0 * PI);
            let dir = match leg.dir {
                0 if delta <= PI => 1,
                0 => -1,
                d => d,
            };
            let span = if dir == 1 { delta } else { delta - 2.0 * PI };
            let last = pts[pts.len() - 1];
            for r in linspace(last[0].hypot(last[1]), rho, 8).skip(1) {
                pts.push(cyl(r, th, leg.height));
            }
            for t in linspace(th, th + span, 20.max((span.abs() * 60.0) as usize)).skip(1) {
                pts.push(cyl(rho, t, leg.height));
            }
            th = to;
            let Some(kind) = kind else {
                for r in linspace(rho, R - W - 0.05, 12).skip(1) {
                    pts.push(cyl(r, th, leg.height * (r - (R - W)) / (rho - (R - W))));
                }
                break;
            };
            let next = &self.legs[i + 1];
            let rho2 = R - side * (W + next.gap);
            for r in linspace(rho, rho2, 400).skip(1) {
                let x = (r - R) * side;
                let mut z = match kind {
                    PassKind::Over => PASS_HEIGHT,
                    PassKind::Under => -PASS_HEIGHT,
                    PassKind::Down => PASS_HEIGHT * x.clamp(-1.0, 1.0),
                    PassKind::Up => -PASS_HEIGHT * x.clamp(-1.0, 1.0),
                };
                // ease from the leg heights into the pass
                if x > W {
                    z = leg.height + (z - leg.height) * smoothstep((W + leg.gap - x) / (leg.gap * 0.8));
                } else if -x > W {
                    z = next.height + (z - next.height) * smoothstep((W + next.gap + x) / (next.gap * 0.8));
                }
                pts.push(cyl(r, th, z));
            }
            side = -side;
        }
        let mut core = resample(&pts, SAMPLE_STEP);
        for _ in 0..SMOOTH_PASSES {
            core = box_smooth(&core, SMOOTH_WINDOW);
        }
        core
    }

    /// The two edges of the band.
    fn band_edges(&self) -> (Vec<P3>, Vec<P3>) {
        let b = self.band_core();
        let n = b.len();
        let mut plus = Vec::with_capacity(n);
        let mut minus = Vec::with_capacity(n);
        for i in 0..n {
            let (p, q, h) = match i {
                0 => (b[1], b[0], 1.0),
                _ if i == n - 1 => (b[n - 1], b[n - 2], 1.0),
                _ => (b[i + 1], b[i - 1], 2.0),
            };
            let t = [(p[0] - q[0]) / h, (p[1] - q[1]) / h];
            // horizontal normal z x T
            let norm = t[0].hypot(t[1]);
            let m = [-t[1] / norm, t[0] / norm];
            plus.push([b[i][0] + BAND_HALF_WIDTH * m[0], b[i][1] + BAND_HALF_WIDTH * m[1], b[i][2]]);
            minus.push([b[i][0] - BAND_HALF_WIDTH * m[0], b[i][1] - BAND_HALF_WIDTH * m[1], b[i][2]]);
        }
        (plus, minus)
    }

    fn in_slab(p: &P3) -> bool {
        p[2].abs() < SLAB_Z && (p[0].hypot(p[1]) - R).abs() < SLAB_R
    }

    /// Replaces every run of points inside the slab by a path that winds
    /// `turns` times around the annulus core on its way through.
    fn spin(&self, e: &[P3], turns: i64) -> Vec<P3> {
        let mut out = Vec::with_capacity(e.len());
        let mut i = 0;
        while i < e.len() {
            if !Self::in_slab(&e[i]) {
                out.push(e[i]);
                i += 1;
                continue;
            }
            let mut j = i;
            while j < e.len() && Self::in_slab(&e[j]) {
                j += 1;
            }
            let run = &e[i..j];
            let idx: Vec<f64> = linspace(0.0, 1.0, run.len()).collect();
            let s: Vec<f64> = run.iter().map(|p| p[2]).collect();
            let r: Vec<f64> = run.iter().map(|p| p[0].hypot(p[1]) - R).collect();
            let mut th: Vec<f64> = Vec::with_capacity(run.len());
            for p in run {
                let a = p[1].atan2(p[0]);
                let a = match th.last() {
                    Some(&prev) => a + 2.0 * PI * ((prev - a) / (2.0 * PI)).round(),
                    None => a,
                };
                th.push(a);
            }
            let m = 300 * turns.unsigned_abs() as usize + 50;
            for u in linspace(0.0, 1.0, m) {
                let t = interp(u, &idx, &th) + 2.0 * PI * turns as f64 * u;
                out.push(self.frame(t, interp(u, &idx, &r), interp(u, &idx, &s)));
            }
            i = j;
        }
        out
    }

    /// Closed polyline of the knot after `turns` spins.
    pub fn knot_polyline(&self, turns: i64) -> Vec<P3> {
        let (mut plus, mut minus) = self.band_edges();
        if turns != 0 {
            plus = self.spin(&plus, turns);
            minus = self.spin(&minus, turns);
        }
        let ea = BAND_HALF_WIDTH / (R + W) * 1.2;
        let eb = BAND_HALF_WIDTH / (R - W) * 1.2;
        let mut pts: Vec<P3> = linspace(self.start + ea, self.start + 2.0 * PI - ea, ARC_POINTS)
            .map(|t| self.frame(t, W, 0.0))
            .collect();
        pts.extend(minus);
        pts.extend(linspace(self.end - eb, self.end - 2.0 * PI + eb, ARC_POINTS).map(|t| self.frame(t, -W, 0.0)));
        pts.extend(plus.into_iter().rev());
        pts
    }

    /// Diagram of the knot after `n` further annulus twists.
    pub fn diagram(&self, n: i64) -> Result<PlanarDiagram, AnnulusError> {
        self.validate()?;
        let turns = TWIST_DIRECTION * (self.turns + n);
        let tuples = project(&self.knot_polyline(turns))?;
        Ok(PlanarDiagram::from_tuples(&tuples)?)
    }

    pub fn twisted(&self, n: i64) -> Self {
        Self { turns: self.turns + n, ..self.clone() }
    }
}

struct Event {
    seg: usize,
    t: f64,
    crossing: usize,
    over: bool,
    dir: [f64; 2],
}

/// PD code of a closed polyline, read from above after a small rotation.
/// Fails if two strands meet at equal height.
pub fn project(pts: &[P3]) -> Result<Vec<[u32; 4]>, AnnulusError> {
    let (sn, cs) = VIEW_ANGLE.sin_cos();
    let p: Vec<P3> = pts.iter().map(|q| [cs * q[0] - sn * q[1], sn * q[0] + cs * q[1], q[2]]).collect();
    let n = p.len();
    let seg = |i: usize| (p[i], p[(i + 1) % n]);
    let bbox: Vec<[f64; 4]> = (0..n)
        .map(|i| {
            let (a, b) = seg(i);
            [a[0].min(b[0]), a[0].max(b[0]), a[1].min(b[1]), a[1].max(b[1])]
        })
        .collect();
    // sweep over segments sorted by left end
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| bbox[a][0].total_cmp(&bbox[b][0]));
    let mut events = Vec::new();
    let mut crossing = 0;
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if bbox[j][0] > bbox[i][1] {
                break;
            }
            let adjacent = (i + 1) % n == j || (j + 1) % n == i;
            if adjacent || bbox[j][2] > bbox[i][3] || bbox[i][2] > bbox[j][3] {
                continue;
            }
            let (a, b) = seg(i);
            let (c, d) = seg(j);
            let (dx1, dy1) = (b[0] - a[0], b[1] - a[1]);
            let (dx2, dy2) = (d[0] - c[0], d[1] - c[1]);
            let den = dx1 * dy2 - dy1 * dx2;
            if den.abs() <= 1e-15 {
                continue;
            }
            let (rx, ry) = (c[0] - a[0], c[1] - a[1]);
            let t = (rx * dy2 - ry * dx2) / den;
            let u = (rx * dy1 - ry * dx1) / den;
            if !(0.0..1.0).contains(&t) || !(0.0..1.0).contains(&u) {
                continue;
            }
            let zi = a[2] + t * (b[2] - a[2]);
            let zj = c[2] + u * (d[2] - c[2]);
            if (zi - zj).abs() < 1e-9 {
                return Err(AnnulusError::BadModel("strands meet in space".into()));
            }
            events.push(Event { seg: i, t, crossing, over: zi > zj, dir: [dx1, dy1] });
            events.push(Event { seg: j, t: u, crossing, over: zj > zi, dir: [dx2, dy2] });
            crossing += 1;
        }
    }
    events.sort_by(|a, b| a.seg.cmp(&b.seg).then(a.t.total_cmp(&b.t)));
    let m = events.len() as u32;
    let mut under = vec![None; crossing];
    let mut over = vec![None; crossing];
    for (k, e) in events.iter().enumerate() {
        let slot = if e.over { &mut over } else { &mut under };
        slot[e.crossing] = Some((k as u32, e.dir));
    }
    // the edge arriving at event k is labelled k + 1
    let out = (0..crossing)
        .map(|c| {
            let (ku, du) = under[c].expect("each crossing has an under strand");
            let (ko, dov) = over[c].expect("each crossing has an over strand");
            let (ui, uo) = (ku + 1, (ku + 1) % m + 1);
            let (oi, oo) = (ko + 1, (ko + 1) % m + 1);
            if dov[0] * du[1] - dov[1] * du[0] > 0.0 {
                [ui, oo, uo, oi]
            } else {
                [ui, oi, uo, oo]
            }
        })
        .collect();
    Ok(out)
}
