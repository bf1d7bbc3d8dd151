//! Heuristic TAR maximization and a brute-force grid oracle.
//!
//! The hill climber works on `f64` coordinates and only the final drawing is
//! classified exactly. The oracle enumerates integer placements of tiny
//! graphs with its own `i128` predicates, independent of the exact field
//! arithmetic used elsewhere.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::drawing::{Drawing, TarValue};
use crate::geometry::{AngleClass, Coord, Point, Threshold};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OptError {
    #[error("invalid configuration: {0}")]
    Config(&'static str),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("grid oracle needs at most {max} vertices, got {n}")]
    TooManyVertices { n: usize, max: usize },
    #[error("grid search of {placements} placements exceeds the budget of {budget}")]
    BudgetExceeded { placements: u128, budget: u128 },
    #[error("no valid placement exists on this grid")]
    NoPlacement,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptConfig {
    pub restarts: usize,
    pub steps: usize,
    pub initial_step: f64,
    /// Step length multiplier per step, in `(0, 1)`.
    pub cooling: f64,
    pub seed: u64,
    /// Start positions are integers in `[-half_width, half_width]²`.
    pub half_width: i64,
}

impl Default for OptConfig {
    fn default() -> Self {
        OptConfig { restarts: 24, steps: 3000, initial_step: 25.0, cooling: 0.998, seed: 0, half_width: 100 }
    }
}

impl OptConfig {
    pub fn check(&self) -> Result<(), OptError> {
        if self.restarts == 0 || self.steps == 0 {
            return Err(OptError::Config("restarts and steps must be positive"));
        }
        if !(self.initial_step > 0.0) {
            return Err(OptError::Config("initial step must be positive"));
        }
        if !(self.cooling > 0.0 && self.cooling < 1.0) {
            return Err(OptError::Config("cooling must lie in (0, 1)"));
        }
        if self.half_width <= 0 {
            return Err(OptError::Config("half width must be positive"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct OptResult {
    pub best: Drawing,
    pub best_tar: TarValue,
    pub best_tar_degrees: f64,
    pub exact_class_60: AngleClass,
    pub exact_class_90: AngleClass,
    pub exact_class_120: AngleClass,
    /// Best float TAR of each restart, in restart order.
    pub trace: Vec<f64>,
}

impl OptResult {
    fn from_drawing(best: Drawing, trace: Vec<f64>) -> Self {
        let best_tar = best.tar().expect("result drawing is valid");
        OptResult {
            best_tar_degrees: best_tar.degrees(),
            exact_class_60: best_tar.classify(Threshold::Deg60),
            exact_class_90: best_tar.classify(Threshold::Deg90),
            exact_class_120: best_tar.classify(Threshold::Deg120),
            best_tar,
            best,
            trace,
        }
    }
}

/// Outcome of a single restart.
#[derive(Debug, Clone)]
pub struct RestartOutcome {
    pub index: usize,
    pub tar: f64,
    pub positions: Vec<(f64, f64)>,
}

/// Runs all restarts one after another and keeps the best.
pub fn maximize_tar(g: &Graph, cfg: &OptConfig) -> Result<OptResult, OptError> {
    cfg.check()?;
    if g.n() == 0 {
        return Err(OptError::EmptyGraph);
    }
    let outcomes: Vec<_> = (0..cfg.restarts).map(|i| run_restart(g, cfg, i)).collect();
    Ok(merge_restarts(g, outcomes))
}

/// Combines restart outcomes: highest TAR wins, ties go to the lower index,
/// so any execution order gives the same result.
pub fn merge_restarts(g: &Graph, mut outcomes: Vec<RestartOutcome>) -> OptResult {
    outcomes.sort_by_key(|o| o.index);
    let trace: Vec<f64> = outcomes.iter().map(|o| o.tar).collect();
    let mut best = &outcomes[0];
    for o in &outcomes[1..] {
        if o.tar > best.tar {
            best = o;
        }
    }
    OptResult::from_drawing(snap(g, &best.positions), trace)
}

/// One seeded hill climb. Restart `i` draws from stream `i` of the
/// configured seed, so restarts are independent of each other.
pub fn run_restart(g: &Graph, cfg: &OptConfig, index: usize) -> RestartOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let eval = FloatEval::new(g);
    let hw = cfg.half_width;
    let mut pos: Vec<(f64, f64)>;
    let mut cur;
    loop {
        pos = (0..g.n()).map(|_| (rng.gen_range(-hw..=hw) as f64, rng.gen_range(-hw..=hw) as f64)).collect();
        if let Some(t) = eval.tar(&pos) {
            cur = t;
            break;
        }
    }
    let mut step = cfg.initial_step;
    for _ in 0..cfg.steps {
        let v = if rng.gen_bool(0.5) {
            let (a, b) = cur.1;
            [a, b][rng.gen_range(0..2)]
        } else {
            rng.gen_range(0..g.n())
        };
        let old = pos[v];
        pos[v] = (old.0 + rng.gen_range(-step..=step), old.1 + rng.gen_range(-step..=step));
        match eval.tar(&pos) {
            Some(t) if t.0 >= cur.0 => cur = t,
            _ => pos[v] = old,
        }
        step = (step * cfg.cooling).max(1e-9);
    }
    RestartOutcome { index, tar: cur.0, positions: pos }
}

/// Converts float positions to exact ones, preferring short binary
/// fractions and falling back to the exact value of each `f64`.
fn snap(g: &Graph, pos: &[(f64, f64)]) -> Drawing {
    let scale = pos.iter().fold(1.0f64, |s, &(x, y)| s.max(x.abs()).max(y.abs()));
    let unit = libm::exp2(libm::floor(libm::log2(scale)) - 30.0);
    let rounded = |v: f64| Coord::from_f64(libm::round(v / unit) * unit).expect("finite");
    let coarse: Vec<Point> = pos.iter().map(|&(x, y)| Point { x: rounded(x), y: rounded(y) }).collect();
    let d = Drawing::new(g.clone(), coarse).expect("one position per vertex");
    if d.validate().is_ok() {
        return d;
    }
    let exact = pos.iter().map(|&(x, y)| Point { x: Coord::from_f64(x).unwrap(), y: Coord::from_f64(y).unwrap() });
    Drawing::new(g.clone(), exact.collect()).expect("one position per vertex")
}

/// Float TAR with a crude validity filter, used inside the search.
struct FloatEval {
    edges: Vec<(usize, usize)>,
    inc: Vec<Vec<usize>>,
}

impl FloatEval {
    fn new(g: &Graph) -> Self {
        FloatEval { edges: g.edges().to_vec(), inc: g.neighbors() }
    }

    /// Minimum angle in degrees and two vertices at its site; `None` for
    /// near-degenerate placements. Angle-free drawings score 180.
    fn tar(&self, p: &[(f64, f64)]) -> Option<(f64, (usize, usize))> {
        let scale = p.iter().fold(1.0f64, |s, &(x, y)| s.max(x.abs()).max(y.abs()));
        let eps = scale * 1e-7;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if (p[i].0 - p[j].0).abs() < eps && (p[i].1 - p[j].1).abs() < eps {
                    return None;
                }
            }
        }
        let mut best = (180.0f64, (0, 0));
        for (v, nb) in self.inc.iter().enumerate() {
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    let a = ray_angle(sub(p[nb[i]], p[v]), sub(p[nb[j]], p[v]));
                    if a < best.0 {
                        best = (a, (nb[i], nb[j]));
                    }
                }
            }
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (v, &q) in p.iter().enumerate() {
                if v != a && v != b && dist_to_segment(q, p[a], p[b]) < eps {
                    return None;
                }
            }
            for &(c, d) in &self.edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if proper_cross(p[a], p[b], p[c], p[d]) {
                    let t = ray_angle(sub(p[b], p[a]), sub(p[d], p[c]));
                    let t = t.min(180.0 - t);
                    if t < best.0 {
                        best = (t, (a, c));
                    }
                }
            }
        }
        Some(best)
    }
}

fn sub(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    (a.0 - b.0, a.1 - b.1)
}

fn ray_angle(u: (f64, f64), v: (f64, f64)) -> f64 {
    let d = u.0 * v.0 + u.1 * v.1;
    let c = u.0 * v.1 - u.1 * v.0;
    libm::atan2(c.abs(), d).to_degrees()
}

fn cross3(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> f64 {
    (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)
}

fn proper_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let (o1, o2) = (cross3(a, b, c), cross3(a, b, d));
    let (o3, o4) = (cross3(c, d, a), cross3(c, d, b));
    o1 * o2 < 0.0 && o3 * o4 < 0.0
}

fn dist_to_segment(q: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let ab = sub(b, a);
    let len2 = ab.0 * ab.0 + ab.1 * ab.1;
    let t = (((q.0 - a.0) * ab.0 + (q.1 - a.1) * ab.1) / len2).clamp(0.0, 1.0);
    let r = (a.0 + t * ab.0 - q.0, a.1 + t * ab.1 - q.1);
    libm::sqrt(r.0 * r.0 + r.1 * r.1)
}

/// Largest grid search the oracle will run.
pub const GRID_BUDGET: u128 = 20_000_000;
pub const GRID_MAX_VERTICES: usize = 5;

/// Exhaustive search over placements on the `grid_size × grid_size` grid of
/// integer points spanning `[-half_width, half_width]²`. Placements are
/// compared exactly; the winner is re-evaluated in exact arithmetic.
pub fn grid_oracle(g: &Graph, grid_size: usize, half_width: i64) -> Result<OptResult, OptError> {
    let n = g.n();
    if n == 0 {
        return Err(OptError::EmptyGraph);
    }
    if n > GRID_MAX_VERTICES {
        return Err(OptError::TooManyVertices { n, max: GRID_MAX_VERTICES });
    }
    if grid_size < 2 || half_width <= 0 {
        return Err(OptError::Config("grid needs at least 2 points per axis and a positive box"));
    }
    let cells = (grid_size * grid_size) as u128;
    let placements = cells.checked_pow(n as u32).unwrap_or(u128::MAX);
    if placements > GRID_BUDGET {
        return Err(OptError::BudgetExceeded { placements, budget: GRID_BUDGET });
    }
    let pts: Vec<(i128, i128)> = (0..grid_size)
        .flat_map(|i| (0..grid_size).map(move |j| (i as i128, j as i128)))
        .collect();
    let search = GridSearch { edges: g.edges().to_vec(), inc: g.neighbors(), pts };
    let mut choice = vec![0usize; n];
    let mut best: Option<(IntTar, Vec<usize>)> = None;
    search.enumerate(0, &mut choice, &mut best);
    let (_, idx) = best.ok_or(OptError::NoPlacement)?;
    let step = Coord::frac(2 * half_width, grid_size as i64 - 1);
    let to_coord = |k: i128| &(&Coord::from_int(k as i64) * &step) - &Coord::from_int(half_width);
    let positions = idx.iter().map(|&k| Point { x: to_coord(search.pts[k].0), y: to_coord(search.pts[k].1) }).collect();
    let d = Drawing::valid(g.clone(), positions).expect("oracle placement is valid");
    let t = d.tar().unwrap().degrees();
    Ok(OptResult::from_drawing(d, vec![t]))
}

type IVec = (i128, i128);

/// Exact angle between integer vectors, or no angle at all.
#[derive(Debug, Clone, Copy)]
enum IntTar {
    Angle(IVec, IVec),
    Free,
}

impl IntTar {
    fn cmp(&self, other: &IntTar) -> Ordering {
        match (self, other) {
            (IntTar::Free, IntTar::Free) => Ordering::Equal,
            (IntTar::Free, _) => Ordering::Greater,
            (_, IntTar::Free) => Ordering::Less,
            (IntTar::Angle(u1, v1), IntTar::Angle(u2, v2)) => cmp_int_angles(*u1, *v1, *u2, *v2),
        }
    }
}

fn idot(u: IVec, v: IVec) -> i128 {
    u.0 * v.0 + u.1 * v.1
}

fn icross(u: IVec, v: IVec) -> i128 {
    u.0 * v.1 - u.1 * v.0
}

/// Orders two ray angles via the sign of the cosine, then cos² scaled by
/// the squared norms.
fn cmp_int_angles(u1: IVec, v1: IVec, u2: IVec, v2: IVec) -> Ordering {
    let (d1, d2) = (idot(u1, v1), idot(u2, v2));
    let (s1, s2) = (d1.signum(), d2.signum());
    if s1 != s2 {
        return s2.cmp(&s1);
    }
    if s1 == 0 {
        return Ordering::Equal;
    }
    let lhs = d1 * d1 * (idot(u2, u2) * idot(v2, v2));
    let rhs = d2 * d2 * (idot(u1, u1) * idot(v1, v1));
    if s1 > 0 {
        rhs.cmp(&lhs)
    } else {
        lhs.cmp(&rhs)
    }
}

struct GridSearch {
    edges: Vec<(usize, usize)>,
    inc: Vec<Vec<usize>>,
    pts: Vec<IVec>,
}

impl GridSearch {
    fn enumerate(&self, depth: usize, choice: &mut [usize], best: &mut Option<(IntTar, Vec<usize>)>) {
        if depth == choice.len() {
            let p: Vec<IVec> = choice.iter().map(|&k| self.pts[k]).collect();
            if let Some(t) = self.tar(&p) {
                if best.as_ref().map_or(true, |(b, _)| t.cmp(b) == Ordering::Greater) {
                    *best = Some((t, choice.to_vec()));
                }
            }
            return;
        }
        for k in 0..self.pts.len() {
            if choice[..depth].contains(&k) {
                continue;
            }
            choice[depth] = k;
            self.enumerate(depth + 1, choice, best);
        }
    }

    fn tar(&self, p: &[IVec]) -> Option<IntTar> {
        let s = |a: IVec, b: IVec| (b.0 - a.0, b.1 - a.1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for (v, &q) in p.iter().enumerate() {
                if v != a && v != b && on_int_segment(q, p[a], p[b]) {
                    return None;
                }
            }
            for &(c, d) in &self.edges[i + 1..] {
                if a != c && a != d && b != c && b != d && collinear_overlap(p[a], p[b], p[c], p[d]) {
                    return None;
                }
            }
        }
        let mut best = IntTar::Free;
        let mut offer = |t: IntTar| {
            if t.cmp(&best) == Ordering::Less {
                best = t;
            }
        };
        for (v, nb) in self.inc.iter().enumerate() {
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    offer(IntTar::Angle(s(p[v], p[nb[i]]), s(p[v], p[nb[j]])));
                }
            }
        }
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            for &(c, d) in &self.edges[i + 1..] {
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let (o1, o2) = (icross(s(p[a], p[b]), s(p[a], p[c])), icross(s(p[a], p[b]), s(p[a], p[d])));
                let (o3, o4) = (icross(s(p[c], p[d]), s(p[c], p[a])), icross(s(p[c], p[d]), s(p[c], p[b])));
                if o1.signum() * o2.signum() < 0 && o3.signum() * o4.signum() < 0 {
                    let u = s(p[a], p[b]);
                    let mut v = s(p[c], p[d]);
                    if idot(u, v) < 0 {
                        v = (-v.0, -v.1);
                    }
                    offer(IntTar::Angle(u, v));
                }
            }
        }
        Some(best)
    }
}

fn on_int_segment(q: IVec, a: IVec, b: IVec) -> bool {
    let ab = (b.0 - a.0, b.1 - a.1);
    let aq = (q.0 - a.0, q.1 - a.1);
    icross(ab, aq) == 0 && idot(ab, aq) >= 0 && idot(ab, aq) <= idot(ab, ab)
}

fn collinear_overlap(a: IVec, b: IVec, c: IVec, d: IVec) -> bool {
    let ab = (b.0 - a.0, b.1 - a.1);
    icross(ab, (c.0 - a.0, c.1 - a.1)) == 0
        && icross(ab, (d.0 - a.0, d.1 - a.1)) == 0
        && (on_int_segment(c, a, b) || on_int_segment(d, a, b) || on_int_segment(a, c, d))
}
