//! Edge-count bounds for drawings with TAR above 60° and the structural
//! statements around them.
//!
//! Checkers compute and report. Whether a violated bound comes with a small
//! angle is left to the caller, which is how the tests assert the
//! statements: every drawing that breaks a bound must classify at or below
//! 60°.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::drawing::{CellStructure, Drawing, DrawingError};
use crate::exceptions::{recognize_graph, ExceptionId};
use crate::generators::regular_polygon;
use crate::geometry::{segment_intersection, AngleClass, Coord, Point, SegmentRelation, Threshold};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error("drawing is disconnected")]
    Disconnected,
    #[error("drawing is connected")]
    Connected,
    #[error("drawing has crossings")]
    NotPlane,
    #[error("need at least {0} vertices")]
    TooFewVertices(usize),
    #[error("unbounded cell is not bounded by a simple polygon")]
    NotSimplePolygon,
    #[error("boundary polygon has {0} vertices, need more than 3")]
    PolygonTooSmall(usize),
    #[error("excluded shape: {0}")]
    Excluded(&'static str),
    #[error("witness is not a drawing of the graph")]
    WitnessMismatch,
    #[error("vertex {vertex} has degree {degree}, expected 4")]
    Degree { vertex: usize, degree: usize },
    #[error("replacement edges do not cross properly")]
    NoCrossing,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statement {
    Lemma1,
    Observation1,
    Lemma2,
    Disconnected,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statement::Lemma1 => "lemma1",
            Statement::Observation1 => "observation1",
            Statement::Lemma2 => "lemma2",
            Statement::Disconnected => "disconnected",
        })
    }
}

/// Outcome of one bound check. `value` is the bounded quantity: the edge
/// count, or the inner-degree sum for the polygon statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub statement: Statement,
    pub n: usize,
    pub m: usize,
    pub k: Option<usize>,
    pub p: Option<usize>,
    pub value: i64,
    pub bound: i64,
    pub holds: bool,
    pub tar_class_60: AngleClass,
    /// Per-component reports for disconnected drawings.
    pub components: Vec<BoundReport>,
}

impl BoundReport {
    fn new(statement: Statement, d: &Drawing, value: i64, bound: i64, tar_class_60: AngleClass) -> Self {
        BoundReport {
            statement,
            n: d.n(),
            m: d.m(),
            k: None,
            p: None,
            value,
            bound,
            holds: value <= bound,
            tar_class_60,
            components: Vec::new(),
        }
    }

    /// A violated bound together with an angle above 60° contradicts the
    /// statement.
    pub fn refutes(&self) -> bool {
        !self.holds && self.tar_class_60 == AngleClass::Above
    }
}

fn class60(d: &Drawing) -> Result<AngleClass, BoundError> {
    Ok(d.tar()?.vs60())
}

fn unbounded_size(d: &Drawing) -> Result<usize, BoundError> {
    let p = d.planarize()?;
    let cells = CellStructure::of_plane(&p.drawing).map_err(|_| BoundError::Disconnected)?;
    Ok(cells.unbounded_size())
}

/// `m <= 2n - 2 - ceil(k/2)` for a connected drawing whose unbounded cell
/// has size `k`.
pub fn check_lemma1(d: &Drawing) -> Result<BoundReport, BoundError> {
    d.validate().map_err(DrawingError::Invalid)?;
    if d.n() == 0 {
        return Err(BoundError::TooFewVertices(1));
    }
    if !d.is_connected() {
        return Err(BoundError::Disconnected);
    }
    let k = unbounded_size(d)?;
    let bound = 2 * d.n() as i64 - 2 - k.div_ceil(2) as i64;
    let mut r = BoundReport::new(Statement::Lemma1, d, d.m() as i64, bound, class60(d)?);
    r.k = Some(k);
    Ok(r)
}

/// Vertices of the unbounded cell when its boundary is a simple polygon.
fn boundary_polygon(d: &Drawing) -> Result<Vec<usize>, BoundError> {
    if !d.crossings()?.is_empty() {
        return Err(BoundError::NotPlane);
    }
    let cells = CellStructure::of_plane(d).map_err(|_| BoundError::Disconnected)?;
    let outer = &cells.cells[cells.unbounded_cell];
    let mut verts: Vec<usize> = outer.iter().map(|s| s.from).collect();
    let len = verts.len();
    verts.sort_unstable();
    verts.dedup();
    if verts.len() != len || len < 3 {
        return Err(BoundError::NotSimplePolygon);
    }
    Ok(outer.iter().map(|s| s.from).collect())
}

/// Inner-degree sum of the boundary polygon against `2p - 7`.
///
/// Everything not on the boundary lies inside it, so a boundary vertex's
/// inner degree is its degree minus two.
pub fn check_observation1(d: &Drawing) -> Result<BoundReport, BoundError> {
    d.validate().map_err(DrawingError::Invalid)?;
    let poly = boundary_polygon(d)?;
    let p = poly.len();
    if p <= 3 {
        return Err(BoundError::PolygonTooSmall(p));
    }
    let deg = d.graph().degrees();
    let sum: usize = poly.iter().map(|&v| deg[v] - 2).sum();
    let mut r = BoundReport::new(Statement::Observation1, d, sum as i64, 2 * p as i64 - 7, class60(d)?);
    r.p = Some(p);
    Ok(r)
}

/// `m <= 2n - 5` for connected plane drawings other than the path on three
/// vertices and the 4-gon.
pub fn check_lemma2(d: &Drawing) -> Result<BoundReport, BoundError> {
    d.validate().map_err(DrawingError::Invalid)?;
    if d.n() < 3 {
        return Err(BoundError::TooFewVertices(3));
    }
    if !d.is_connected() {
        return Err(BoundError::Disconnected);
    }
    if !d.crossings()?.is_empty() {
        return Err(BoundError::NotPlane);
    }
    let g = d.graph();
    if d.n() == 3 && g.is_path() {
        return Err(BoundError::Excluded("path on 3 vertices"));
    }
    if d.n() == 4 && g.is_cycle() {
        return Err(BoundError::Excluded("4-gon"));
    }
    let mut r = BoundReport::new(Statement::Lemma2, d, d.m() as i64, 2 * d.n() as i64 - 5, class60(d)?);
    r.k = Some(unbounded_size(d)?);
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem1Outcome {
    BoundHolds { n: usize, m: usize, bound: i64 },
    Exception(ExceptionId),
    /// Above the bound and not an exception; the witness, if any, has
    /// TAR at most 60° as the theorem predicts.
    ExceedsBound { witness_class: Option<AngleClass> },
    /// Above the bound, not an exception, yet the witness has TAR above 60°.
    RefutedWitness,
}

/// `m <= 2n - 6` unless the graph is in the exception catalog.
pub fn check_theorem1(g: &Graph, witness: Option<&Drawing>) -> Result<Theorem1Outcome, BoundError> {
    if g.n() < 3 {
        return Err(BoundError::TooFewVertices(3));
    }
    if let Some(w) = witness {
        if !same_graph(w.graph(), g) {
            return Err(BoundError::WitnessMismatch);
        }
    }
    let bound = 2 * g.n() as i64 - 6;
    if g.m() as i64 <= bound {
        return Ok(Theorem1Outcome::BoundHolds { n: g.n(), m: g.m(), bound });
    }
    if let Some(id) = recognize_graph(g) {
        return Ok(Theorem1Outcome::Exception(id));
    }
    match witness {
        None => Ok(Theorem1Outcome::ExceedsBound { witness_class: None }),
        Some(w) => {
            let c = class60(w)?;
            if c == AngleClass::Above {
                Ok(Theorem1Outcome::RefutedWitness)
            } else {
                Ok(Theorem1Outcome::ExceedsBound { witness_class: Some(c) })
            }
        }
    }
}

fn same_graph(a: &Graph, b: &Graph) -> bool {
    let mut x = a.edges().to_vec();
    let mut y = b.edges().to_vec();
    x.sort_unstable();
    y.sort_unstable();
    a.n() == b.n() && x == y
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DisconnectedOutcome {
    Exception(ExceptionId),
    Report(BoundReport),
}

/// Component-wise argument for disconnected drawings: each component obeys
/// the single-cell bound, and the only way to exceed `2n - 6` is one edge
/// plus an isolated vertex.
pub fn check_disconnected(d: &Drawing) -> Result<DisconnectedOutcome, BoundError> {
    d.validate().map_err(DrawingError::Invalid)?;
    if d.n() < 3 {
        return Err(BoundError::TooFewVertices(3));
    }
    let comps = d.graph().components();
    if comps.len() < 2 {
        return Err(BoundError::Connected);
    }
    if d.n() == 3 && d.m() == 1 {
        return Ok(DisconnectedOutcome::Exception(ExceptionId::E0));
    }
    let mut parts = Vec::new();
    for c in &comps {
        let sub = Drawing::new(d.graph().induced(c), c.iter().map(|&v| d.position(v).clone()).collect())?;
        parts.push(check_lemma1(&sub)?);
    }
    let mut r = BoundReport::new(Statement::Disconnected, d, d.m() as i64, 2 * d.n() as i64 - 6, class60(d)?);
    r.components = parts;
    Ok(DisconnectedOutcome::Report(r))
}

/// Removes the degree-4 vertex `v` and joins its neighbors pairwise across
/// it (first with third, second with fourth in rotation order), so the two
/// new edges cross near `v`'s former position, exactly at it when opposite
/// rays are collinear.
pub fn replace_degree4_with_crossing(d: &Drawing, v: usize) -> Result<Drawing, BoundError> {
    d.validate().map_err(DrawingError::Invalid)?;
    let deg = d.graph().degree(v);
    if deg != 4 {
        return Err(BoundError::Degree { vertex: v, degree: deg });
    }
    let rot: Vec<usize> = d.rotation_system()[v].iter().map(|&(w, _)| w).collect();
    let pairs = [(rot[0], rot[2]), (rot[1], rot[3])];
    let pos = |w: usize| d.position(w);
    match segment_intersection(pos(pairs[0].0), pos(pairs[0].1), pos(pairs[1].0), pos(pairs[1].1)) {
        Ok(SegmentRelation::ProperCrossing(_)) => {}
        _ => return Err(BoundError::NoCrossing),
    }
    let relabel = |w: usize| if w > v { w - 1 } else { w };
    let mut edges: Vec<(usize, usize)> = d
        .graph()
        .edges()
        .iter()
        .filter(|&&(a, b)| a != v && b != v)
        .map(|&(a, b)| (relabel(a), relabel(b)))
        .collect();
    edges.extend(pairs.iter().map(|&(a, b)| (relabel(a), relabel(b))));
    let g = Graph::new(d.n() - 1, edges).map_err(DrawingError::from)?;
    let positions = (0..d.n()).filter(|&w| w != v).map(|w| d.position(w).clone()).collect();
    Ok(Drawing::valid(g, positions)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gt120 {
    Yes(Drawing),
    No(String),
}

/// TAR above 120° is possible exactly for disjoint unions of paths and
/// cycles on at least 7 vertices. On success the witness draws cycles as
/// near-regular polygons and paths straight, side by side.
pub fn characterize_gt120(g: &Graph) -> Gt120 {
    let deg = g.degrees();
    if let Some(v) = (0..g.n()).find(|&v| deg[v] >= 3) {
        return Gt120::No(format!("vertex of degree {}", deg[v]));
    }
    let comps = g.components();
    for c in &comps {
        let sub = g.induced(c);
        if sub.is_cycle() && sub.n() <= 6 {
            return Gt120::No(format!("cycle of length {}", sub.n()));
        }
    }
    let mut positions = alloc::vec![Point::origin(); g.n()];
    let mut offset: i64 = 0;
    let inc = g.neighbors();
    for c in &comps {
        let sub = g.induced(c);
        let placed: Vec<(usize, Point)> = if sub.is_cycle() {
            let poly = regular_polygon(sub.n()).expect("n >= 7");
            cycle_order(&inc, c).into_iter().zip(poly.positions().iter().cloned()).collect()
        } else {
            path_order(&inc, c).into_iter().enumerate().map(|(i, v)| (v, Point::new(i as i64, 0))).collect()
        };
        let min_x = placed.iter().map(|(_, p)| p.x.to_f64()).fold(f64::INFINITY, f64::min);
        let max_x = placed.iter().map(|(_, p)| p.x.to_f64()).fold(f64::NEG_INFINITY, f64::max);
        let shift = Coord::from_int(offset - libm::floor(min_x) as i64);
        for (v, p) in placed {
            positions[v] = Point { x: &p.x + &shift, y: p.y };
        }
        offset += libm::ceil(max_x - min_x) as i64 + 2;
    }
    let d = Drawing::valid(g.clone(), positions).expect("side-by-side layout is valid");
    debug_assert_eq!(d.tar().unwrap().classify(Threshold::Deg120), AngleClass::Above);
    Gt120::Yes(d)
}

fn cycle_order(adj: &[Vec<usize>], comp: &[usize]) -> Vec<usize> {
    let mut order = alloc::vec![comp[0]];
    let mut prev = usize::MAX;
    let mut cur = comp[0];
    while order.len() < comp.len() {
        let next = adj[cur].iter().copied().find(|&w| w != prev && !order.contains(&w)).unwrap();
        prev = cur;
        cur = next;
        order.push(cur);
    }
    order
}

fn path_order(adj: &[Vec<usize>], comp: &[usize]) -> Vec<usize> {
    let start = comp.iter().copied().find(|&v| adj[v].len() <= 1).unwrap();
    let mut order = alloc::vec![start];
    while order.len() < comp.len() {
        let last = *order.last().unwrap();
        let next = adj[last].iter().copied().find(|w| !order.contains(w)).unwrap();
        order.push(next);
    }
    order
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Drawing {
        Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn lemma1_examples() {
        let r = check_lemma1(&square()).unwrap();
        assert_eq!((r.n, r.m, r.k, r.bound, r.holds), (4, 4, Some(4), 4, true));
        let e = Drawing::from_ints(2, &[(0, 1)], &[(0, 0), (1, 0)]).unwrap();
        let r = check_lemma1(&e).unwrap();
        assert_eq!((r.k, r.bound, r.holds), (Some(2), 1, true));
        let t = Drawing::from_ints(3, &[(0, 1), (1, 2), (2, 0)], &[(0, 0), (1, 0), (0, 1)]).unwrap();
        let r = check_lemma1(&t).unwrap();
        assert_eq!((r.k, r.bound, r.holds), (Some(3), 2, false));
        assert!(r.tar_class_60.at_most());
    }

    #[test]
    fn observation1_examples() {
        let r = check_observation1(&square()).unwrap();
        assert_eq!((r.p, r.value, r.bound, r.holds), (Some(4), 0, 1, true));
        // two adjacent corners joined to one interior vertex
        let d = Drawing::from_ints(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)],
            &[(0, 0), (4, 0), (4, 4), (0, 4), (2, 1)],
        )
        .unwrap();
        let r = check_observation1(&d).unwrap();
        assert_eq!((r.value, r.holds), (2, false));
        assert!(r.tar_class_60.at_most());
    }

    #[test]
    fn lemma2_excludes_four_gon() {
        assert_eq!(check_lemma2(&square()), Err(BoundError::Excluded("4-gon")));
        let hex = Drawing::from_ints(
            6,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 3)],
            &[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)],
        )
        .unwrap();
        let r = check_lemma2(&hex).unwrap();
        assert_eq!((r.m, r.bound, r.holds), (7, 7, true));
    }

    #[test]
    fn disconnected_cases() {
        let e0 = Drawing::from_ints(3, &[(0, 1)], &[(0, 0), (1, 0), (5, 5)]).unwrap();
        assert_eq!(check_disconnected(&e0), Ok(DisconnectedOutcome::Exception(ExceptionId::E0)));
        let two = Drawing::from_ints(4, &[(0, 1), (2, 3)], &[(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap();
        match check_disconnected(&two).unwrap() {
            DisconnectedOutcome::Report(r) => assert_eq!((r.bound, r.holds, r.components.len()), (2, true, 2)),
            other => panic!("{other:?}"),
        }
        let three = Drawing::from_ints(3, &[], &[(0, 0), (1, 0), (2, 1)]).unwrap();
        assert!(matches!(check_disconnected(&three), Ok(DisconnectedOutcome::Report(r)) if r.bound == 0 && r.holds));
        assert_eq!(check_disconnected(&square()), Err(BoundError::Connected));
    }

    #[test]
    fn plus_sign_becomes_crossing() {
        let plus = Drawing::from_ints(
            5,
            &[(0, 1), (0, 2), (0, 3), (0, 4)],
            &[(0, 0), (1, 0), (0, 1), (-1, 0), (0, -1)],
        )
        .unwrap();
        let x = replace_degree4_with_crossing(&plus, 0).unwrap();
        assert_eq!((x.n(), x.m()), (4, 2));
        let cs = x.crossings().unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].point, Point::origin());
        assert_eq!(x.tar().unwrap().classify(Threshold::Deg90), AngleClass::Equal);
        assert!(matches!(replace_degree4_with_crossing(&plus, 1), Err(BoundError::Degree { degree: 1, .. })));
    }

    #[test]
    fn gt120() {
        assert!(matches!(characterize_gt120(&Graph::cycle(7)), Gt120::Yes(_)));
        assert_eq!(characterize_gt120(&Graph::cycle(6)), Gt120::No("cycle of length 6".into()));
        assert_eq!(characterize_gt120(&Graph::star(3)), Gt120::No("vertex of degree 3".into()));
        let mixed = Graph::new(12, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 3)]).unwrap();
        match characterize_gt120(&mixed) {
            Gt120::Yes(d) => assert_eq!(d.tar().unwrap().classify(Threshold::Deg120), AngleClass::Above),
            Gt120::No(r) => panic!("{r}"),
        }
    }
}
