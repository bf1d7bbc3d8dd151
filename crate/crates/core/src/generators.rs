//! Drawing constructions: the layered octagon family with `2n - 6` edges,
//! regular polygons and seeded random drawings.

use alloc::vec;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drawing::Drawing;
use crate::geometry::{Coord, Point};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("parameter out of range: {0}")]
    Parameter(&'static str),
    #[error("{m} edges requested but at most {max} fit")]
    TooManyEdges { m: usize, max: usize },
    #[error("no valid placement found within the resampling budget")]
    BudgetExhausted,
}

/// Directions of the octagon corners, close to multiples of 45° offset by 22.5°.
const OCTAGON: [(i64, i64); 8] = [(12, 5), (5, 12), (-5, 12), (-12, 5), (-12, -5), (-5, -12), (5, -12), (12, -5)];

/// `k` nested octagons joined corner to corner, with two parallel chords in
/// the innermost one: `n = 8k`, `m = 16k - 6`, plane, TAR above 60°.
///
/// The innermost octagon is stretched horizontally so that the chords,
/// which are vertical, meet its sides at about 63° and 67°.
pub fn layered_8gon(k: usize) -> Result<Drawing, GeneratorError> {
    if k == 0 {
        return Err(GeneratorError::Parameter("k must be positive"));
    }
    let mut pos = Vec::with_capacity(8 * k);
    let mut edges = Vec::with_capacity(16 * k - 6);
    for layer in 0..k {
        for (i, &(x, y)) in OCTAGON.iter().enumerate() {
            let p = if layer == 0 { (2 * x, y) } else { let r = 5 + 3 * (layer as i64 - 1); (r * x, r * y) };
            pos.push(Point::new(p.0, p.1));
            let v = 8 * layer + i;
            edges.push((v, 8 * layer + (i + 1) % 8));
            if layer > 0 {
                edges.push((v - 8, v));
            }
        }
    }
    edges.push((1, 6));
    edges.push((2, 5));
    let g = Graph::new(8 * k, edges).expect("layered octagon edges are simple");
    Ok(Drawing::new(g, pos).expect("one position per vertex"))
}

/// Regular `k`-gon on the cycle `0-1-...-(k-1)`. Exact for `k` in
/// {3, 4, 6, 12}, where every corner lies in `Q(√3)`; otherwise corners are
/// rounded to a grid of step `10^-6` on the unit circle, far too fine to
/// move an interior angle across 60°, 90° or 120°.
pub fn regular_polygon(k: usize) -> Result<Drawing, GeneratorError> {
    if k < 3 {
        return Err(GeneratorError::Parameter("polygon needs at least 3 corners"));
    }
    let pos: Vec<Point> = (0..k).map(|i| exact_corner(k, i).unwrap_or_else(|| rounded_corner(k, i))).collect();
    Ok(Drawing::new(Graph::cycle(k), pos).expect("one position per vertex"))
}

/// Corner `i` of the regular `k`-gon when its coordinates lie in `Q(√3)`.
fn exact_corner(k: usize, i: usize) -> Option<Point> {
    if 12 % k != 0 || k < 3 {
        return None;
    }
    // multiples of 30°: cos and sin from the first quadrant table
    let step = (12 / k) * i % 12;
    let half = Coord::frac(1, 2);
    let root = &Coord::sqrt3() * &half;
    let table = [
        (Coord::one(), Coord::zero()),
        (root.clone(), half.clone()),
        (half, root),
    ];
    let (q, r) = (step / 3, step % 3);
    let (c, s) = table[r].clone();
    let (x, y) = match q {
        0 => (c, s),
        1 => (-s, c),
        2 => (-c, -s),
        _ => (s, -c),
    };
    Some(Point { x, y })
}

fn rounded_corner(k: usize, i: usize) -> Point {
    const SCALE: f64 = 1e6;
    let t = 2.0 * core::f64::consts::PI * i as f64 / k as f64;
    let x = libm::round(libm::cos(t) * SCALE) as i64;
    let y = libm::round(libm::sin(t) * SCALE) as i64;
    Point::new(Coord::frac(x, 1_000_000), Coord::frac(y, 1_000_000))
}

const RESAMPLE_BUDGET: usize = 1000;

fn random_points(rng: &mut ChaCha8Rng, n: usize, range: i64) -> Vec<Point> {
    (0..n).map(|_| Point::new(rng.gen_range(-range..=range), rng.gen_range(-range..=range))).collect()
}

fn place(
    rng: &mut ChaCha8Rng,
    g: Graph,
    range: i64,
) -> Result<Drawing, GeneratorError> {
    for _ in 0..RESAMPLE_BUDGET {
        let d = Drawing::new(g.clone(), random_points(rng, g.n(), range)).expect("one position per vertex");
        if d.validate().is_ok() {
            return Ok(d);
        }
    }
    Err(GeneratorError::BudgetExhausted)
}

/// Random valid placement of a given graph on integer points in
/// `[-range, range]²`. Deterministic in `seed`.
pub fn random_layout(g: &Graph, seed: u64, range: i64) -> Result<Drawing, GeneratorError> {
    if range < 1 {
        return Err(GeneratorError::Parameter("range must be positive"));
    }
    place(&mut ChaCha8Rng::seed_from_u64(seed), g.clone(), range)
}

/// Random graph with `m` edges on integer points in `[-range, range]²`,
/// resampled until valid. Deterministic in `seed`.
pub fn random_drawing(n: usize, m: usize, seed: u64, range: i64) -> Result<Drawing, GeneratorError> {
    let max = n * n.saturating_sub(1) / 2;
    if m > max {
        return Err(GeneratorError::TooManyEdges { m, max });
    }
    if range < 1 {
        return Err(GeneratorError::Parameter("range must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Graph::complete(n).edges().to_vec();
    pairs.shuffle(&mut rng);
    pairs.truncate(m);
    place(&mut rng, Graph::new(n, pairs).expect("distinct pairs"), range)
}

/// Like [`random_drawing`] but connected: a random spanning tree plus
/// `m - n + 1` further random edges.
pub fn random_connected_drawing(n: usize, m: usize, seed: u64, range: i64) -> Result<Drawing, GeneratorError> {
    let max = n * n.saturating_sub(1) / 2;
    if n == 0 || m + 1 < n {
        return Err(GeneratorError::Parameter("need n >= 1 and m >= n - 1"));
    }
    if m > max {
        return Err(GeneratorError::TooManyEdges { m, max });
    }
    if range < 1 {
        return Err(GeneratorError::Parameter("range must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges: Vec<(usize, usize)> = (1..n)
        .map(|i| {
            let j = rng.gen_range(0..i);
            (order[i].min(order[j]), order[i].max(order[j]))
        })
        .collect();
    let mut rest: Vec<_> = Graph::complete(n).edges().iter().copied().filter(|e| !edges.contains(e)).collect();
    rest.shuffle(&mut rng);
    edges.extend(rest.into_iter().take(m + 1 - n));
    place(&mut rng, Graph::new(n, edges).expect("distinct pairs"), range)
}

/// Random plane drawing: edges between random points are inserted in random
/// order whenever they cross nothing, then each non-hull edge survives with
/// probability `keep`. The hull edges always stay, so a drawing with at
/// least three non-collinear points is bounded by its convex hull.
pub fn random_plane_drawing(n: usize, seed: u64, range: i64, keep: f64) -> Result<Drawing, GeneratorError> {
    if n < 3 || range < 1 {
        return Err(GeneratorError::Parameter("need n >= 3 and positive range"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RESAMPLE_BUDGET {
        let pts = random_points(&mut rng, n, range);
        let bare = Drawing::new(Graph::empty(n), pts.clone()).expect("one position per vertex");
        if bare.validate().is_err() {
            continue;
        }
        let mut cand = Graph::complete(n).edges().to_vec();
        cand.shuffle(&mut rng);
        let mut chosen: Vec<(usize, usize)> = Vec::new();
        for e in cand {
            let mut trial = chosen.clone();
            trial.push(e);
            let d = Drawing::new(Graph::new(n, trial).unwrap(), pts.clone()).unwrap();
            if d.validate().is_ok() && d.crossings().map(|c| c.is_empty()).unwrap_or(false) {
                chosen.push(e);
            }
        }
        let hull = hull_edges(&pts);
        if hull.len() < 3 {
            continue;
        }
        let kept: Vec<_> = chosen.into_iter().filter(|e| hull.contains(e) || rng.gen_bool(keep)).collect();
        let d = Drawing::new(Graph::new(n, kept).unwrap(), pts).unwrap();
        return Ok(d);
    }
    Err(GeneratorError::BudgetExhausted)
}

/// Edges of the convex hull between consecutive extreme points (points in
/// the relative interior of a hull side are not extreme).
fn hull_edges(pts: &[Point]) -> Vec<(usize, usize)> {
    use crate::geometry::orient;
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    idx.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
    let half = |iter: &mut dyn Iterator<Item = usize>| {
        let mut h: Vec<usize> = Vec::new();
        for i in iter {
            while h.len() >= 2 && !orient(&pts[h[h.len() - 2]], &pts[h[h.len() - 1]], &pts[i]).is_positive() {
                h.pop();
            }
            h.push(i);
        }
        h
    };
    let lower = half(&mut idx.iter().copied());
    let upper = half(&mut idx.iter().rev().copied());
    let mut ring: Vec<usize> = lower[..lower.len() - 1].to_vec();
    ring.extend_from_slice(&upper[..upper.len() - 1]);
    if ring.len() < 3 {
        return vec![];
    }
    (0..ring.len())
        .map(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % ring.len()]);
            (a.min(b), a.max(b))
        })
        .collect()
}
