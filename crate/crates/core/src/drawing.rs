//! Straight-line drawings: validation, exact TAR, planarization, cells and
//! combinatorial signatures.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use thiserror::Error;

use crate::geometry::{
    on_segment, segment_intersection, Angle, AngleClass, Coord, Direction, GeometryError, Point,
    SegmentRelation, Threshold,
};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    CoincidentVertices(usize, usize),
    VertexOnEdge { vertex: usize, edge: usize },
    OverlappingEdges(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CoincidentVertices(a, b) => write!(f, "coincident vertices {a} and {b}"),
            Violation::VertexOnEdge { vertex, edge } => {
                write!(f, "vertex on edge interior: vertex {vertex}, edge {edge}")
            }
            Violation::OverlappingEdges(a, b) => write!(f, "overlapping edges {a} and {b}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("expected {expected} positions, got {got}")]
    PositionCount { expected: usize, got: usize },
    #[error("invalid drawing: {}", .0.first().map(|v| alloc::format!("{v}")).unwrap_or_default())]
    Invalid(Vec<Violation>),
    #[error("drawing is disconnected")]
    Disconnected,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// A graph together with one exact position per vertex.
///
/// Construction only checks the number of positions; [`Drawing::validate`]
/// checks the geometric invariants and every analysis calls it first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    graph: Graph,
    positions: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub edge_a: usize,
    pub edge_b: usize,
    pub point: Point,
}

/// Where the minimum angle of a drawing occurs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AngleSite {
    Vertex { vertex: usize, edge_a: usize, edge_b: usize },
    Crossing { edge_a: usize, edge_b: usize },
}

/// Total angular resolution. `Unconstrained` is the minimum over no angles
/// at all and sits above every threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TarValue {
    Angle { angle: Angle, site: AngleSite },
    Unconstrained,
}

impl TarValue {
    pub fn classify(&self, threshold: Threshold) -> AngleClass {
        match self {
            TarValue::Angle { angle, .. } => angle.classify(threshold),
            TarValue::Unconstrained => AngleClass::Above,
        }
    }

    pub fn vs60(&self) -> AngleClass {
        self.classify(Threshold::Deg60)
    }

    /// Float view in degrees; infinite when unconstrained.
    pub fn degrees(&self) -> f64 {
        match self {
            TarValue::Angle { angle, .. } => angle.degrees(),
            TarValue::Unconstrained => f64::INFINITY,
        }
    }

    pub fn cmp_exact(&self, other: &TarValue) -> Ordering {
        match (self, other) {
            (TarValue::Unconstrained, TarValue::Unconstrained) => Ordering::Equal,
            (TarValue::Unconstrained, _) => Ordering::Greater,
            (_, TarValue::Unconstrained) => Ordering::Less,
            (TarValue::Angle { angle: a, .. }, TarValue::Angle { angle: b, .. }) => a.cmp_exact(b),
        }
    }
}

impl fmt::Display for TarValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TarValue::Unconstrained => f.write_str("inf"),
            t => write!(f, "{:.6}", t.degrees()),
        }
    }
}

/// Float bounding boxes used to skip exact tests on far-apart segments.
struct Boxes {
    pts: Vec<(f64, f64)>,
    eps: f64,
}

impl Boxes {
    fn new(positions: &[Point]) -> Self {
        let pts: Vec<_> = positions.iter().map(Point::to_f64).collect();
        let scale = pts.iter().fold(1.0f64, |s, &(x, y)| s.max(x.abs()).max(y.abs()));
        Boxes { pts, eps: scale * 1e-9 }
    }

    fn seg(&self, a: usize, b: usize) -> [f64; 4] {
        let (p, q) = (self.pts[a], self.pts[b]);
        [p.0.min(q.0), p.1.min(q.1), p.0.max(q.0), p.1.max(q.1)]
    }

    fn overlap(&self, s: [f64; 4], t: [f64; 4]) -> bool {
        s[0] <= t[2] + self.eps && t[0] <= s[2] + self.eps && s[1] <= t[3] + self.eps && t[1] <= s[3] + self.eps
    }

    fn contains(&self, s: [f64; 4], v: usize) -> bool {
        let (x, y) = self.pts[v];
        self.overlap(s, [x, y, x, y])
    }
}

impl Drawing {
    pub fn new(graph: Graph, positions: Vec<Point>) -> Result<Self, DrawingError> {
        if positions.len() != graph.n() {
            return Err(DrawingError::PositionCount { expected: graph.n(), got: positions.len() });
        }
        Ok(Drawing { graph, positions })
    }

    /// Builds a drawing and requires it to be valid.
    pub fn valid(graph: Graph, positions: Vec<Point>) -> Result<Self, DrawingError> {
        let d = Drawing::new(graph, positions)?;
        d.validate().map_err(DrawingError::Invalid)?;
        Ok(d)
    }

    /// Integer coordinates, convenient for fixtures.
    pub fn from_ints(n: usize, edges: &[(usize, usize)], coords: &[(i64, i64)]) -> Result<Self, DrawingError> {
        let g = Graph::new(n, edges.iter().copied())?;
        Drawing::new(g, coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn positions(&self) -> &[Point] {
        &self.positions
    }

    pub fn position(&self, v: usize) -> &Point {
        &self.positions[v]
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn is_connected(&self) -> bool {
        self.graph.is_connected()
    }

    /// Applies `f` to every position, keeping the graph.
    pub fn map_positions(&self, f: impl Fn(&Point) -> Point) -> Drawing {
        Drawing { graph: self.graph.clone(), positions: self.positions.iter().map(f).collect() }
    }

    /// Direction of edge `id` leaving `from`.
    pub fn edge_direction(&self, id: usize, from: usize) -> Direction {
        let (a, b) = self.graph.edge(id);
        let to = if from == a { b } else { a };
        self.positions[from]
            .direction_to(&self.positions[to])
            .expect("edge endpoints of a valid drawing are distinct")
    }

    /// Checks distinct positions, no vertex inside a non-incident edge and
    /// no collinear overlap of edges.
    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        let mut order: Vec<usize> = (0..self.n()).collect();
        order.sort_by(|&a, &b| self.positions[a].cmp(&self.positions[b]));
        for w in order.windows(2) {
            if self.positions[w[0]] == self.positions[w[1]] {
                out.push(Violation::CoincidentVertices(w[0].min(w[1]), w[0].max(w[1])));
            }
        }
        if !out.is_empty() {
            return Err(out);
        }
        let boxes = Boxes::new(&self.positions);
        let edges = self.graph.edges();
        let eboxes: Vec<_> = edges.iter().map(|&(a, b)| boxes.seg(a, b)).collect();
        for (id, &(a, b)) in edges.iter().enumerate() {
            for v in 0..self.n() {
                if v == a || v == b || !boxes.contains(eboxes[id], v) {
                    continue;
                }
                if on_segment(&self.positions[v], &self.positions[a], &self.positions[b]) {
                    out.push(Violation::VertexOnEdge { vertex: v, edge: id });
                }
            }
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if !boxes.overlap(eboxes[i], eboxes[j]) {
                    continue;
                }
                if let SegmentRelation::Degenerate = self.relation(i, j) {
                    out.push(Violation::OverlappingEdges(i, j));
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    fn relation(&self, i: usize, j: usize) -> SegmentRelation {
        let (a, b) = self.graph.edge(i);
        let (c, d) = self.graph.edge(j);
        let p = &self.positions;
        segment_intersection(&p[a], &p[b], &p[c], &p[d]).expect("distinct endpoints")
    }

    fn require_valid(&self) -> Result<(), DrawingError> {
        self.validate().map_err(DrawingError::Invalid)
    }

    /// Every pair of edges whose interiors cross, in edge-id order.
    pub fn crossings(&self) -> Result<Vec<Crossing>, DrawingError> {
        self.require_valid()?;
        Ok(self.crossings_unchecked())
    }

    fn crossings_unchecked(&self) -> Vec<Crossing> {
        let boxes = Boxes::new(&self.positions);
        let edges = self.graph.edges();
        let eboxes: Vec<_> = edges.iter().map(|&(a, b)| boxes.seg(a, b)).collect();
        let mut out = Vec::new();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d || !boxes.overlap(eboxes[i], eboxes[j]) {
                    continue;
                }
                if let SegmentRelation::ProperCrossing(point) = self.relation(i, j) {
                    out.push(Crossing { edge_a: i, edge_b: j, point });
                }
            }
        }
        out
    }

    /// Exact minimum over vertex angles and crossing angles.
    pub fn tar(&self) -> Result<TarValue, DrawingError> {
        self.require_valid()?;
        let mut best = TarValue::Unconstrained;
        let offer = |angle: Angle, site: AngleSite, best: &mut TarValue| {
            let better = match best {
                TarValue::Unconstrained => true,
                TarValue::Angle { angle: cur, .. } => angle.cmp_exact(cur) == Ordering::Less,
            };
            if better {
                *best = TarValue::Angle { angle, site };
            }
        };
        for (v, inc) in self.graph.incidence().iter().enumerate() {
            let dirs: Vec<_> = inc.iter().map(|&(_, id)| (id, self.edge_direction(id, v))).collect();
            for i in 0..dirs.len() {
                for j in i + 1..dirs.len() {
                    let site = AngleSite::Vertex { vertex: v, edge_a: dirs[i].0, edge_b: dirs[j].0 };
                    offer(Angle::new(dirs[i].1.clone(), dirs[j].1.clone()), site, &mut best);
                }
            }
        }
        for c in self.crossings_unchecked() {
            let (a, _) = self.graph.edge(c.edge_a);
            let (b, _) = self.graph.edge(c.edge_b);
            let angle = Angle::between_lines(self.edge_direction(c.edge_a, a), self.edge_direction(c.edge_b, b));
            offer(angle, AngleSite::Crossing { edge_a: c.edge_a, edge_b: c.edge_b }, &mut best);
        }
        Ok(best)
    }

    /// Replaces every crossing point by a vertex and splits edges there.
    pub fn planarize(&self) -> Result<PlanarizedDrawing, DrawingError> {
        self.require_valid()?;
        let crossings = self.crossings_unchecked();
        let n = self.n();
        let mut point_vertex: BTreeMap<Point, usize> = BTreeMap::new();
        let mut origin: Vec<VertexOrigin> = (0..n).map(VertexOrigin::Original).collect();
        let mut positions = self.positions.clone();
        let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); self.m()];
        for (cid, c) in crossings.iter().enumerate() {
            let v = *point_vertex.entry(c.point.clone()).or_insert_with(|| {
                positions.push(c.point.clone());
                origin.push(VertexOrigin::Crossing(Vec::new()));
                positions.len() - 1
            });
            if let VertexOrigin::Crossing(ids) = &mut origin[v] {
                ids.push(cid);
            }
            for e in [c.edge_a, c.edge_b] {
                if !on_edge[e].contains(&v) {
                    on_edge[e].push(v);
                }
            }
        }
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, &(a, b)) in self.graph.edges().iter().enumerate() {
            let pa = &positions[a];
            let dir = pa.direction_to(&positions[b]).expect("distinct endpoints");
            let mut stops = core::mem::take(&mut on_edge[id]);
            stops.sort_by_cached_key(|&v| pa.vector_to(&positions[v]).dot(&dir));
            let chain: Vec<usize> = core::iter::once(a).chain(stops).chain(core::iter::once(b)).collect();
            for (seg, w) in chain.windows(2).enumerate() {
                edges.push((w[0], w[1]));
                edge_origin.push(EdgeOrigin { edge: id, segment: seg });
            }
        }
        let graph = Graph::new(positions.len(), edges)?;
        Ok(PlanarizedDrawing {
            drawing: Drawing { graph, positions },
            origin,
            edge_origin,
            crossings,
        })
    }

    /// Canonical combinatorial signature; equal exactly for drawings that
    /// are combinatorially equivalent up to relabeling and reflection.
    ///
    /// Disconnected drawings are accepted only when every component is a
    /// tree, since then no component can sit inside a bounded cell of
    /// another.
    pub fn comb_signature(&self) -> Result<CombSignature, DrawingError> {
        let p = self.planarize()?;
        let g = &p.drawing.graph;
        let comps = g.components();
        if comps.len() > 1 && !g.is_forest() {
            return Err(DrawingError::Disconnected);
        }
        let rot = p.drawing.rotation_system();
        let mut codes: Vec<Vec<usize>> = comps.iter().map(|c| component_code(&p, &rot, c)).collect();
        codes.sort();
        Ok(CombSignature(codes))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexOrigin {
    Original(usize),
    /// Crossing ids (into [`PlanarizedDrawing::crossings`]) merged at this point.
    Crossing(Vec<usize>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeOrigin {
    pub edge: usize,
    /// Index of this piece along the original edge, from its smaller endpoint.
    pub segment: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarizedDrawing {
    pub drawing: Drawing,
    pub origin: Vec<VertexOrigin>,
    pub edge_origin: Vec<EdgeOrigin>,
    pub crossings: Vec<Crossing>,
}

impl PlanarizedDrawing {
    /// True when some crossing point is shared by three or more edges.
    pub fn has_merged_points(&self) -> bool {
        self.origin.iter().any(|o| matches!(o, VertexOrigin::Crossing(ids) if ids.len() > 1))
    }

    pub fn cell_structure(&self) -> Result<CellStructure, DrawingError> {
        CellStructure::of_plane(&self.drawing)
    }
}

/// A side of an edge, written as the directed edge `from -> to` that has
/// the cell on its left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Side {
    pub from: usize,
    pub to: usize,
    pub edge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellStructure {
    pub cells: Vec<Vec<Side>>,
    pub unbounded_cell: usize,
}

impl CellStructure {
    /// Faces of a connected plane drawing, traced from its rotation system.
    pub fn of_plane(d: &Drawing) -> Result<CellStructure, DrawingError> {
        if !d.is_connected() {
            return Err(DrawingError::Disconnected);
        }
        if d.m() == 0 {
            return Ok(CellStructure { cells: vec![Vec::new()], unbounded_cell: 0 });
        }
        let rot = d.rotation_system();
        let mut face_of: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut cells = Vec::new();
        for v in 0..d.n() {
            for &(w, _) in &rot[v] {
                if face_of.contains_key(&(v, w)) {
                    continue;
                }
                let id = cells.len();
                let mut cell = Vec::new();
                let (mut a, mut b) = (v, w);
                while !face_of.contains_key(&(a, b)) {
                    face_of.insert((a, b), id);
                    let edge = rot[a].iter().find(|&&(x, _)| x == b).map(|&(_, e)| e).unwrap();
                    cell.push(Side { from: a, to: b, edge });
                    let c = next_around(&rot, a, b);
                    a = b;
                    b = c;
                }
                cells.push(cell);
            }
        }
        let v = (0..d.n()).filter(|&v| !rot[v].is_empty()).min_by(|&a, &b| d.positions[a].cmp(&d.positions[b])).unwrap();
        let half = Direction::from_ints(-1, 0).unwrap();
        let out = &rot[v];
        let pick = out
            .iter()
            .rev()
            .find(|&&(w, _)| d.positions[v].direction_to(&d.positions[w]).unwrap().cmp_polar(&half) == Ordering::Less)
            .unwrap_or_else(|| out.last().unwrap());
        let unbounded_cell = face_of[&(v, pick.0)];
        Ok(CellStructure { cells, unbounded_cell })
    }

    pub fn size(&self, cell: usize) -> usize {
        self.cells[cell].len()
    }

    pub fn unbounded_size(&self) -> usize {
        self.size(self.unbounded_cell)
    }

    pub fn count(&self) -> usize {
        self.cells.len()
    }
}

/// Successor of the side `a -> b` along its cell: the clockwise neighbor of
/// `b -> a` around `b`.
fn next_around(rot: &[Vec<(usize, usize)>], a: usize, b: usize) -> usize {
    let around = &rot[b];
    let i = around.iter().position(|&(x, _)| x == a).unwrap();
    around[(i + around.len() - 1) % around.len()].0
}

impl Drawing {
    /// Neighbors of each vertex sorted counterclockwise from the positive
    /// x axis, as `(neighbor, edge id)`.
    pub fn rotation_system(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = self.graph.incidence();
        for (v, list) in inc.iter_mut().enumerate() {
            let p = &self.positions[v];
            list.sort_by(|&(a, _), &(b, _)| {
                let da = p.direction_to(&self.positions[a]).unwrap();
                let db = p.direction_to(&self.positions[b]).unwrap();
                da.cmp_polar(&db)
            });
        }
        inc
    }
}

/// Opaque canonical form compared by equality.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CombSignature(Vec<Vec<usize>>);

/// Smallest BFS code of one component over every starting side and both
/// orientations. The code lists, per vertex in discovery order, its kind,
/// degree and neighbor labels in rotation order, followed by the sides of
/// the unbounded cell.
fn component_code(p: &PlanarizedDrawing, rot: &[Vec<(usize, usize)>], comp: &[usize]) -> Vec<usize> {
    let d = &p.drawing;
    let kind = |v: usize| match p.origin[v] {
        VertexOrigin::Original(_) => 0,
        VertexOrigin::Crossing(_) => 1,
    };
    if comp.len() == 1 {
        return vec![kind(comp[0]), 0];
    }
    let sub_vertices = comp.to_vec();
    let sub = d.graph.induced(&sub_vertices);
    let sub_d = Drawing { graph: sub, positions: sub_vertices.iter().map(|&v| d.positions[v].clone()).collect() };
    let cells = CellStructure::of_plane(&sub_d).expect("component is connected");
    let outer: Vec<(usize, usize)> = cells.cells[cells.unbounded_cell]
        .iter()
        .map(|s| (sub_vertices[s.from], sub_vertices[s.to]))
        .collect();
    let mut best: Option<Vec<usize>> = None;
    for &s in comp {
        for &(t, _) in &rot[s] {
            for mirrored in [false, true] {
                let code = bfs_code(rot, &kind, s, t, mirrored, &outer);
                if best.as_ref().map_or(true, |b| code < *b) {
                    best = Some(code);
                }
            }
        }
    }
    best.unwrap()
}

fn bfs_code(
    rot: &[Vec<(usize, usize)>],
    kind: &dyn Fn(usize) -> usize,
    start: usize,
    first: usize,
    mirrored: bool,
    outer: &[(usize, usize)],
) -> Vec<usize> {
    let mut label: BTreeMap<usize, usize> = BTreeMap::new();
    let mut queue = vec![(start, first)];
    label.insert(start, 0);
    let mut code = Vec::new();
    let mut head = 0;
    while head < queue.len() {
        let (v, from) = queue[head];
        head += 1;
        let around = &rot[v];
        let k = around.len();
        let i0 = around.iter().position(|&(x, _)| x == from).unwrap();
        code.push(kind(v));
        code.push(k);
        for step in 0..k {
            let idx = if mirrored { (i0 + k - step) % k } else { (i0 + step) % k };
            let w = around[idx].0;
            let next = label.len();
            let l = *label.entry(w).or_insert_with(|| {
                queue.push((w, v));
                next
            });
            code.push(l);
        }
    }
    code.push(usize::MAX);
    let mut sides: Vec<(usize, usize)> = outer
        .iter()
        .map(|&(a, b)| if mirrored { (label[&b], label[&a]) } else { (label[&a], label[&b]) })
        .collect();
    sides.sort_unstable();
    for (a, b) in sides {
        code.push(a);
        code.push(b);
    }
    code
}

/// Mirror image through the y axis.
pub fn reflect(d: &Drawing) -> Drawing {
    d.map_positions(|p| Point { x: -&p.x, y: p.y.clone() })
}

/// Uniform scaling by `s` followed by translation by `(tx, ty)`.
pub fn scale_translate(d: &Drawing, s: &Coord, tx: &Coord, ty: &Coord) -> Drawing {
    d.map_positions(|p| Point { x: &(&p.x * s) + tx, y: &(&p.y * s) + ty })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn square() -> Drawing {
        Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 0), (1, 0), (1, 1), (0, 1)]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(square().validate().is_ok());
        let same = Drawing::from_ints(2, &[(0, 1)], &[(0, 0), (0, 0)]).unwrap();
        assert_eq!(same.validate(), Err(vec![Violation::CoincidentVertices(0, 1)]));
        let on = Drawing::from_ints(3, &[(0, 1)], &[(0, 0), (2, 0), (1, 0)]).unwrap();
        let errs = on.validate().unwrap_err();
        assert_eq!(errs[0], Violation::VertexOnEdge { vertex: 2, edge: 0 });
        assert!(errs[0].to_string().starts_with("vertex on edge interior"));
    }

    #[test]
    fn tar_fixtures() {
        let t = square().tar().unwrap();
        assert_eq!(t.classify(Threshold::Deg90), AngleClass::Equal);
        assert_eq!(t.vs60(), AngleClass::Above);
        let tri = Drawing::from_ints(3, &[(0, 1), (1, 2), (2, 0)], &[(0, 0), (1, 0), (0, 1)]).unwrap();
        let t = tri.tar().unwrap();
        assert!((t.degrees() - 45.0).abs() < 1e-9);
        assert_eq!(t.vs60(), AngleClass::Below);
        let x = Drawing::from_ints(4, &[(0, 1), (2, 3)], &[(-1, 0), (1, 0), (0, -1), (0, 1)]).unwrap();
        let t = x.tar().unwrap();
        assert_eq!(t.classify(Threshold::Deg90), AngleClass::Equal);
        assert!(matches!(t, TarValue::Angle { site: AngleSite::Crossing { .. }, .. }));
        let edge = Drawing::from_ints(2, &[(0, 1)], &[(0, 0), (1, 0)]).unwrap();
        assert_eq!(edge.tar().unwrap(), TarValue::Unconstrained);
        assert_eq!(edge.tar().unwrap().to_string(), "inf");
    }

    #[test]
    fn concurrent_crossings_merge() {
        let d = Drawing::from_ints(
            6,
            &[(0, 1), (2, 3), (4, 5)],
            &[(-2, 0), (2, 0), (0, -2), (0, 2), (-1, -1), (1, 1)],
        )
        .unwrap();
        let cs = d.crossings().unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs.iter().all(|c| c.point == Point::origin()));
        let p = d.planarize().unwrap();
        assert_eq!(p.drawing.n(), 7);
        assert_eq!(p.drawing.graph().degree(6), 6);
        assert!(p.has_merged_points());
    }

    #[test]
    fn planarize_x() {
        let x = Drawing::from_ints(4, &[(0, 2), (1, 3)], &[(0, 0), (2, 0), (2, 2), (0, 2)]).unwrap();
        let p = x.planarize().unwrap();
        assert_eq!((p.drawing.n(), p.drawing.m()), (5, 4));
        assert_eq!(p.drawing.position(4), &Point::new(1, 1));
        assert_eq!(p.edge_origin[1], EdgeOrigin { edge: 0, segment: 1 });
    }

    #[test]
    fn cells() {
        let c = CellStructure::of_plane(&square()).unwrap();
        assert_eq!(c.count(), 2);
        assert_eq!(c.unbounded_size(), 4);
        let edge = Drawing::from_ints(2, &[(0, 1)], &[(0, 0), (1, 0)]).unwrap();
        let c = CellStructure::of_plane(&edge).unwrap();
        assert_eq!((c.count(), c.size(0)), (1, 2));
        let p3 = Drawing::from_ints(3, &[(0, 1), (1, 2)], &[(0, 0), (1, 0), (1, 1)]).unwrap();
        let c = CellStructure::of_plane(&p3).unwrap();
        assert_eq!((c.count(), c.size(0)), (1, 4));
        // pendant edge inside the unbounded cell of a square
        let sq = Drawing::from_ints(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)], &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 2)])
            .unwrap();
        let c = CellStructure::of_plane(&sq).unwrap();
        assert_eq!(c.unbounded_size(), 6);
    }

    #[test]
    fn signatures() {
        let s1 = square().comb_signature().unwrap();
        let big = scale_translate(&square(), &Coord::from_int(3), &Coord::from_int(5), &Coord::frac(1, 2));
        assert_eq!(s1, big.comb_signature().unwrap());
        assert_eq!(s1, reflect(&square()).comb_signature().unwrap());
        let p3 = Drawing::from_ints(3, &[(0, 1), (1, 2)], &[(0, 0), (1, 0), (1, 1)]).unwrap();
        assert_ne!(s1, p3.comb_signature().unwrap());
    }

    #[test]
    fn signature_sees_the_outer_cell() {
        // same plane graph, different unbounded cell: a square with a
        // pendant vertex inside versus outside
        let inside = Drawing::from_ints(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)], &[(0, 0), (4, 0), (4, 4), (0, 4), (1, 2)])
            .unwrap();
        let outside = Drawing::from_ints(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)], &[(0, 0), (4, 0), (4, 4), (0, 4), (-1, -2)])
            .unwrap();
        assert_ne!(inside.comb_signature().unwrap(), outside.comb_signature().unwrap());
    }
}
