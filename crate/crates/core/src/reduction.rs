//! The 3SAT reduction for deciding `TAR(G) >= 60°`.
//!
//! Every building block is made of triangles, which a drawing with TAR at
//! least 60° must draw equilateral. Layouts therefore live on the
//! triangular lattice. Internally a point is stored as `(x, h)` with
//! rational `x` and `h`, where the actual height is `y = h·√3`. A unit
//! lattice edge is then `(1, 0)` horizontally or `(±1/2, 1/2)` at ±60°.
//!
//! Frame, for `L = n + m` and `T = m + 1`:
//!
//! * bottom path: `b_i = (i, 0)` for `i = 0..=L`, `t_i = (i + 1/2, 1/2)`,
//!   which is `2L - 1` triangles;
//! * top path: the mirror image, `u_i = (i, T)`, `t'_i = (i + 1/2, T - 1/2)`;
//! * `X_i = t_{i-1}`, `B1 = t_n`, `X'_i = t'_{i-1}`, `B2 = t'_n`;
//! * clause gadget `j`: a fan of four triangles around the hub
//!   `(L, j)`, with the clause vertex `C_j = (L + 1, j)` in the middle of the
//!   rim. Consecutive fans share an edge, the lowest touches `t_{L-1}` and
//!   the highest touches `t'_{L-1}`.
//!
//! Variable gadget `i` hangs from `X_i` with scale `s_i = 1/p_i` for
//! distinct primes `p_i`, so literal vertices of different gadgets never
//! share a height. Its connector rhombus fills the remaining height up to
//! `X'_i`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::drawing::Drawing;
use crate::geometry::{AngleClass, Coord, Point, Rat, Threshold};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    /// 1-based variable index.
    pub var: usize,
    pub positive: bool,
}

impl Literal {
    pub fn from_dimacs(v: i64) -> Literal {
        Literal { var: v.unsigned_abs() as usize, positive: v > 0 }
    }

    pub fn holds(self, a: &Assignment) -> bool {
        a.value(self.var) == self.positive
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "x{}", self.var)
        } else {
            write!(f, "-x{}", self.var)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("clause {clause}: expected exactly 3 literals, found {found}")]
    Arity { clause: usize, found: usize },
    #[error("clause {clause}: literal {literal} repeated")]
    Duplicate { clause: usize, literal: Literal },
    #[error("clause {clause}: variable {var} outside 1..={num_vars}")]
    VariableRange { clause: usize, var: usize, num_vars: usize },
}

/// A CNF formula in which every clause has exactly three different literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatInstance {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl SatInstance {
    /// Validates clauses given as DIMACS integers. Clause numbers in
    /// errors are 1-based.
    pub fn new(num_vars: usize, clauses: &[Vec<i64>]) -> Result<Self, SatError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, c) in clauses.iter().enumerate() {
            let clause = j + 1;
            if c.len() != 3 {
                return Err(SatError::Arity { clause, found: c.len() });
            }
            let lits: Vec<Literal> = c.iter().map(|&v| Literal::from_dimacs(v)).collect();
            for (k, l) in lits.iter().enumerate() {
                if l.var == 0 || l.var > num_vars {
                    return Err(SatError::VariableRange { clause, var: l.var, num_vars });
                }
                if lits[..k].contains(l) {
                    return Err(SatError::Duplicate { clause, literal: *l });
                }
            }
            out.push([lits[0], lits[1], lits[2]]);
        }
        Ok(SatInstance { num_vars, clauses: out })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    pub fn satisfied_by(&self, a: &Assignment) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(a)))
    }

    /// Every satisfying assignment, by brute force.
    pub fn satisfying_assignments(&self) -> Vec<Assignment> {
        assert!(self.num_vars < 24, "brute force only for small formulas");
        (0u32..1 << self.num_vars)
            .map(|bits| Assignment((0..self.num_vars).map(|i| bits >> i & 1 == 1).collect()))
            .filter(|a| self.satisfied_by(a))
            .collect()
    }
}

/// Parses DIMACS CNF: `c` comment lines, one `p cnf <vars> <clauses>` line,
/// then clauses as integers terminated by `0`, possibly spanning lines.
pub fn parse_cnf(text: &str) -> Result<SatInstance, SatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i64>> = Vec::new();
    let mut current: Vec<i64> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        if t.starts_with('%') {
            break;
        }
        if t.starts_with('p') {
            if header.is_some() {
                return Err(syntax(line, "second problem line"));
            }
            let f: Vec<&str> = t.split_whitespace().collect();
            if f.len() != 4 || f[0] != "p" || f[1] != "cnf" {
                return Err(syntax(line, "expected `p cnf <vars> <clauses>`"));
            }
            let v = f[2].parse().map_err(|_| syntax(line, "bad variable count"))?;
            let c = f[3].parse().map_err(|_| syntax(line, "bad clause count"))?;
            header = Some((v, c));
            continue;
        }
        if header.is_none() {
            return Err(syntax(line, "clause before problem line"));
        }
        for tok in t.split_whitespace() {
            let v: i64 = tok.parse().map_err(|_| syntax(line, "expected an integer literal"))?;
            if v == 0 {
                clauses.push(core::mem::take(&mut current));
            } else {
                current.push(v);
            }
        }
    }
    let (num_vars, count) = header.ok_or_else(|| syntax(last_line.max(1), "missing problem line"))?;
    if !current.is_empty() {
        return Err(syntax(last_line, "last clause not terminated by 0"));
    }
    if clauses.len() != count {
        return Err(syntax(last_line, "clause count differs from problem line"));
    }
    SatInstance::new(num_vars, &clauses)
}

fn syntax(line: usize, msg: &str) -> SatError {
    SatError::Syntax { line, msg: msg.into() }
}

/// Truth values of variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(pub Vec<bool>);

impl Assignment {
    pub fn value(&self, var: usize) -> bool {
        self.0[var - 1]
    }

    /// Parses a string of `0`/`1` or `F`/`T`, one character per variable.
    pub fn from_bits(bits: &str) -> Option<Assignment> {
        bits.chars()
            .map(|c| match c {
                '1' | 'T' | 't' => Some(true),
                '0' | 'F' | 'f' => Some(false),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Assignment)
    }

    pub fn to_bits(&self) -> String {
        self.0.iter().map(|&b| if b { '1' } else { '0' }).collect()
    }
}

/// Which building block a vertex belongs to. Indices are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Part {
    BottomPath,
    TopPath,
    Clause(usize),
    Variable(usize),
    Connector(usize),
    ClausePath(usize),
}

/// A clause-literal path `C_j - p - q - V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClausePath {
    pub clause: usize,
    pub literal: Literal,
    pub vertices: [usize; 4],
}

/// Named vertices of the construction. Per-variable vectors are indexed by
/// 0-based variable, per-clause vectors by 0-based clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Roles {
    pub clause_vertex: Vec<usize>,
    /// `X_{i,j}`, indexed `[i][j]`.
    pub pos_literal: Vec<Vec<usize>>,
    /// `X̄_{i,j}`, indexed `[i][j]`.
    pub neg_literal: Vec<Vec<usize>>,
    pub x: Vec<usize>,
    pub x_prime: Vec<usize>,
    pub b1: usize,
    pub b2: usize,
    /// `A_{i,1}, A_{i,2} = A_{i,3}, A_{i,4}`.
    pub anchors: Vec<[usize; 3]>,
    /// Left and right end of the bottom path's lower side.
    pub bottom_ends: (usize, usize),
    pub paths: Vec<ClausePath>,
    pub parts: Vec<Vec<Part>>,
}

impl Roles {
    pub fn literal_vertex(&self, l: Literal, clause: usize) -> usize {
        let side = if l.positive { &self.pos_literal } else { &self.neg_literal };
        side[l.var - 1][clause]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub instance: SatInstance,
    pub graph: Graph,
    pub roles: Roles,
}

/// Counts per building block, either predicted or counted on a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Audit {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub bottom_triangles: usize,
    pub top_triangles: usize,
    pub clause_triangles: Vec<usize>,
    pub variable_triangles: Vec<usize>,
    pub hexagons: Vec<usize>,
    pub connector_triangles: Vec<usize>,
    pub path_edges: Vec<usize>,
}

impl Audit {
    /// Closed forms for `n` variables and `m` clauses.
    pub fn expected(n: usize, m: usize) -> Audit {
        let l = n + m;
        Audit {
            vertices: 2 * (2 * l + 1) + 4 * m + n * (5 * m + 5) + 6 * m,
            edges: 2 * (4 * l - 1) + (8 * m + 1) + n * (11 * m + 5) + 5 * n + 9 * m,
            triangles: 2 * (2 * l - 1) + 4 * m + n * (6 * m + 4),
            bottom_triangles: 2 * n + 2 * m - 1,
            top_triangles: 2 * n + 2 * m - 1,
            clause_triangles: vec![4; m],
            variable_triangles: vec![6 * m + 2; n],
            hexagons: vec![m; n],
            connector_triangles: vec![2; n],
            path_edges: vec![3; 3 * m],
        }
    }
}

impl ReductionOutput {
    /// Counts the emitted structure directly: triangles by enumeration,
    /// per-part triangles as those with all corners in the part, hexagons
    /// as degree-6 vertices of a variable gadget whose neighbors form a
    /// 6-cycle.
    pub fn audit(&self) -> Audit {
        let g = &self.graph;
        let adj = g.neighbors();
        let mut nb = vec![Vec::new(); g.n()];
        for (v, list) in adj.iter().enumerate() {
            nb[v] = list.clone();
            nb[v].sort_unstable();
        }
        let mut tris = Vec::new();
        for &(a, b) in g.edges() {
            for &c in &nb[a] {
                if c > b && nb[b].binary_search(&c).is_ok() {
                    tris.push([a, b, c]);
                }
            }
        }
        let parts = &self.roles.parts;
        let count = |p: Part| tris.iter().filter(|t| t.iter().all(|&v| parts[v].contains(&p))).count();
        let n = self.instance.num_vars();
        let m = self.instance.num_clauses();
        let hexagons = (0..n)
            .map(|i| {
                (0..g.n())
                    .filter(|&v| parts[v].contains(&Part::Variable(i)) && nb[v].len() == 6 && is_wheel_center(&nb, v))
                    .count()
            })
            .collect();
        let path_edges = (0..3 * m)
            .map(|k| {
                g.edges()
                    .iter()
                    .filter(|&&(a, b)| parts[a].contains(&Part::ClausePath(k)) && parts[b].contains(&Part::ClausePath(k)))
                    .count()
            })
            .collect();
        Audit {
            vertices: g.n(),
            edges: g.m(),
            triangles: tris.len(),
            bottom_triangles: count(Part::BottomPath),
            top_triangles: count(Part::TopPath),
            clause_triangles: (0..m).map(|j| count(Part::Clause(j))).collect(),
            variable_triangles: (0..n).map(|i| count(Part::Variable(i))).collect(),
            hexagons,
            connector_triangles: (0..n).map(|i| count(Part::Connector(i))).collect(),
            path_edges,
        }
    }
}

fn is_wheel_center(nb: &[Vec<usize>], v: usize) -> bool {
    let ring = &nb[v];
    ring.iter().all(|&w| nb[w].iter().filter(|x| ring.contains(x)).count() == 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("assignment has {got} values for {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error("assignment unsatisfying")]
    Unsatisfying,
    #[error("no valid layout found")]
    LayoutFailed,
    #[error("drawing does not match the construction")]
    Mismatch,
    #[error("drawing has TAR below 60°")]
    BelowSixty,
    #[error("clause {0}: no clause-literal path leaves horizontally")]
    NoHorizontalPath(usize),
    #[error("clause {0}: more than one clause-literal path leaves horizontally")]
    SeveralHorizontalPaths(usize),
    #[error("clause {clause}: horizontal path ends at {literal}, which faces left")]
    WrongSide { clause: usize, literal: Literal },
    #[error("variable x{0} decoded both true and false")]
    Contradiction(usize),
}

/// Lattice position `(x, h)`, actual point `(x, h·√3)`.
type Xh = (Rat, Rat);

fn r(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

fn ri(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

struct Builder {
    pos: Vec<Xh>,
    parts: Vec<Vec<Part>>,
    edges: Vec<(usize, usize)>,
    lattice: BTreeMap<Xh, usize>,
}

impl Builder {
    fn add(&mut self, p: Xh, part: Part) -> usize {
        self.pos.push(p);
        self.parts.push(vec![part]);
        self.pos.len() - 1
    }

    /// Frame vertex at a lattice point, shared between parts.
    fn frame(&mut self, p: Xh, part: Part) -> usize {
        if let Some(&v) = self.lattice.get(&p) {
            if !self.parts[v].contains(&part) {
                self.parts[v].push(part);
            }
            return v;
        }
        let v = self.add(p.clone(), part);
        self.lattice.insert(p, v);
        v
    }

    fn tag(&mut self, v: usize, part: Part) {
        if !self.parts[v].contains(&part) {
            self.parts[v].push(part);
        }
    }

    fn edge(&mut self, a: usize, b: usize) {
        self.edges.push((a, b));
    }
}

/// Free parameters of a layout.
struct Params {
    /// Gadget scale `1/p_i`.
    scale: Vec<Rat>,
    /// Offsets for the clause-literal paths, indexed `[clause][slot]`:
    /// slot 0 is the horizontal path, slots 1 and 2 leave at +60° and -60°.
    offset: Vec<[Rat; 3]>,
}

fn primes_above(start: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut c = start + 1;
    while out.len() < count {
        if c >= 2 && (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
            out.push(c);
        }
        c += 1;
    }
    out
}

impl Params {
    /// All denominators are distinct primes above `2m + 3`, so no two
    /// independent heights or diagonals can coincide by accident.
    fn new(n: usize, m: usize, attempt: usize) -> Params {
        let base = (2 * m + 3).max(5) as u64 + 11 * attempt as u64;
        let ps = primes_above(base, n + 3 * m);
        let scale = ps[..n].iter().map(|&p| r(1, p as i64)).collect();
        let offset = (0..m)
            .map(|j| {
                let q = &ps[n + 3 * j..n + 3 * j + 3];
                // the horizontal path runs out by a bit more than one unit
                [r(q[0] as i64 + 1, q[0] as i64), r(1, q[1] as i64), r(1, q[2] as i64)]
            })
            .collect();
        Params { scale, offset }
    }
}

/// Builds the construction. With `layout`, vertices are placed for the given
/// satisfying assignment; without it, positions are those of the all-true
/// orientation and only the graph is meaningful.
fn build(f: &SatInstance, layout: Option<(&Assignment, &Params)>) -> (ReductionOutput, Vec<Xh>) {
    let n = f.num_vars();
    let m = f.num_clauses();
    let l = (n + m) as i64;
    let t = m as i64 + 1;
    let half = r(1, 2);
    let default_params;
    let (assign, params) = match layout {
        Some((a, p)) => (Some(a), p),
        None => {
            default_params = Params::new(n, m, 0);
            (None, &default_params)
        }
    };
    let mut b = Builder { pos: Vec::new(), parts: Vec::new(), edges: Vec::new(), lattice: BTreeMap::new() };

    // bottom and top paths
    let strip = |b: &mut Builder, base: Rat, apex: Rat, part: Part| -> (Vec<usize>, Vec<usize>) {
        let low: Vec<usize> = (0..=l).map(|i| b.frame((ri(i), base.clone()), part)).collect();
        let high: Vec<usize> = (0..l).map(|i| b.frame((ri(i) + &half, apex.clone()), part)).collect();
        for i in 0..l as usize {
            b.edge(low[i], low[i + 1]);
            b.edge(low[i], high[i]);
            b.edge(high[i], low[i + 1]);
            if i + 1 < l as usize {
                b.edge(high[i], high[i + 1]);
            }
        }
        (low, high)
    };
    let (bottom_low, bottom_high) = strip(&mut b, ri(0), half.clone(), Part::BottomPath);
    let (_, top_high) = strip(&mut b, ri(t), ri(t) - &half, Part::TopPath);

    // clause column
    let mut clause_vertex = Vec::with_capacity(m);
    for j in 0..m {
        let part = Part::Clause(j);
        let hj = ri(j as i64 + 1);
        let hub = b.frame((ri(l), hj.clone()), part);
        let rim = [
            b.frame((ri(l) - &half, &hj + &half), part),
            b.frame((ri(l) + &half, &hj + &half), part),
            b.frame((ri(l + 1), hj.clone()), part),
            b.frame((ri(l) + &half, &hj - &half), part),
            b.frame((ri(l) - &half, &hj - &half), part),
        ];
        for k in 0..5 {
            b.edge(hub, rim[k]);
            if k < 4 {
                b.edge(rim[k], rim[k + 1]);
            }
        }
        clause_vertex.push(rim[2]);
    }
    // consecutive fans share their rim edge; drop the duplicates
    let mut seen = alloc::collections::BTreeSet::new();
    b.edges.retain(|&(x, y)| seen.insert((x.min(y), x.max(y))));

    // variable gadgets and connectors
    let mut pos_literal = Vec::with_capacity(n);
    let mut neg_literal = Vec::with_capacity(n);
    let mut anchors = Vec::with_capacity(n);
    let mut x_roles = Vec::with_capacity(n);
    let mut x_prime = Vec::with_capacity(n);
    for i in 0..n {
        let part = Part::Variable(i);
        let s = params.scale[i].clone();
        let sigma = match assign {
            Some(a) if !a.0[i] => ri(-1),
            _ => ri(1),
        };
        let x0 = ri(i as i64) + &half;
        let at = |u: Rat, h: Rat| (&x0 + &(&sigma * &u), &half + &h);
        let apex = bottom_high[i];
        b.tag(apex, part);
        // horizontal rim edges at levels 0..=m
        let levels: Vec<[usize; 2]> = (0..=m)
            .map(|k| {
                let h = &s * &(ri(k as i64) + &half);
                let lv = b.add(at(-(&s * &half), h.clone()), part);
                let rv = b.add(at(&s * &half, h), part);
                b.edge(lv, rv);
                [lv, rv]
            })
            .collect();
        b.edge(apex, levels[0][0]);
        b.edge(apex, levels[0][1]);
        let mut pos_i = Vec::with_capacity(m);
        let mut neg_i = Vec::with_capacity(m);
        for j in 1..=m {
            let h = &s * &ri(j as i64);
            let center = b.add(at(ri(0), h.clone()), part);
            let plus = b.add(at(s.clone(), h.clone()), part);
            let minus = b.add(at(-s.clone(), h), part);
            let (lo, hi) = (levels[j - 1], levels[j]);
            for v in [plus, minus, lo[0], lo[1], hi[0], hi[1]] {
                b.edge(center, v);
            }
            b.edge(lo[1], plus);
            b.edge(plus, hi[1]);
            b.edge(lo[0], minus);
            b.edge(minus, hi[0]);
            pos_i.push(plus);
            neg_i.push(minus);
        }
        let a2 = b.add(at(ri(0), &s * &ri(m as i64 + 1)), part);
        b.edge(levels[m][0], a2);
        b.edge(levels[m][1], a2);
        // connector rhombus from A_{i,2} up to X'_i
        let cpart = Part::Connector(i);
        b.tag(a2, cpart);
        let top = top_high[i];
        b.tag(top, cpart);
        let h_a2 = &half + &(&s * &ri(m as i64 + 1));
        let c = (ri(t) - &half) - &h_a2;
        let mid = &h_a2 + &(&c * &half) - &half;
        let sl = b.add(at(-(&c * &half), mid.clone()), cpart);
        let sr = b.add(at(&c * &half, mid), cpart);
        for (p, q) in [(a2, sl), (a2, sr), (sl, sr), (sl, top), (sr, top)] {
            b.edge(p, q);
        }
        pos_literal.push(pos_i);
        neg_literal.push(neg_i);
        anchors.push([apex, a2, top]);
        x_roles.push(apex);
        x_prime.push(top);
    }

    // clause-literal paths
    let mut paths = Vec::with_capacity(3 * m);
    for (j, clause) in f.clauses().iter().enumerate() {
        let cv = clause_vertex[j];
        let (xc, hc) = b.pos[cv].clone();
        let chosen = assign.map_or(0, |a| clause.iter().position(|lit| lit.holds(a)).unwrap_or(0));
        let mut slot = 1;
        for (k, &lit) in clause.iter().enumerate() {
            let side = if lit.positive { &pos_literal } else { &neg_literal };
            let target = side[lit.var - 1][j];
            let (xv, hv) = b.pos[target].clone();
            let id = 3 * j + k;
            let part = Part::ClausePath(id);
            let (p1, p2) = if k == chosen {
                // right, diagonal to the literal's height, then left to it
                let x1 = &xc + &params.offset[j][0];
                let dh = (&hc - &hv).abs();
                ((x1.clone(), hc.clone()), (&x1 + &dh, hv.clone()))
            } else {
                // ±60° out, left along a free height, ±60° into the literal
                // from the side it faces
                let d = params.offset[j][slot].clone();
                let up = slot == 1;
                slot += 1;
                let h1 = if up { &hc + &d } else { &hc - &d };
                let x1 = &xc + &d;
                let faces_right = xv > ri(i64::try_from(lit.var).unwrap() - 1) + &half;
                let run = (&h1 - &hv).abs();
                let x2 = if faces_right { &xv + &run } else { &xv - &run };
                ((x1, h1.clone()), (x2, h1))
            };
            let v1 = b.add(p1, part);
            let v2 = b.add(p2, part);
            b.tag(cv, part);
            b.tag(target, part);
            b.edge(cv, v1);
            b.edge(v1, v2);
            b.edge(v2, target);
            paths.push(ClausePath { clause: j, literal: lit, vertices: [cv, v1, v2, target] });
        }
    }

    let graph = Graph::new(b.pos.len(), b.edges.iter().copied()).expect("construction is a simple graph");
    let b1 = bottom_high[n];
    let b2 = top_high[n];
    let roles = Roles {
        clause_vertex,
        pos_literal,
        neg_literal,
        x: x_roles,
        x_prime,
        b1,
        b2,
        anchors,
        bottom_ends: (bottom_low[0], bottom_low[l as usize]),
        paths,
        parts: b.parts,
    };
    (ReductionOutput { instance: f.clone(), graph, roles }, b.pos)
}

fn to_point((x, h): &Xh) -> Point {
    Point { x: Coord::from_rat(x.clone()), y: Coord::new(ri(0), h.clone()) }
}

/// The gadget graph of `f` with its named vertices.
pub fn build_reduction_graph(f: &SatInstance) -> ReductionOutput {
    build(f, None).0
}

const LAYOUT_ATTEMPTS: usize = 20;

/// A drawing of `r.graph` with TAR exactly 60° for a satisfying assignment.
///
/// Each variable gadget faces its true literals to the right. In clause `j`
/// the first true literal gets the horizontal path; the other two paths
/// leave at +60° and -60° in clause order.
pub fn layout_satisfying(r: &ReductionOutput, a: &Assignment) -> Result<Drawing, ReductionError> {
    let f = &r.instance;
    if a.0.len() != f.num_vars() {
        return Err(ReductionError::AssignmentLength { expected: f.num_vars(), got: a.0.len() });
    }
    if !f.satisfied_by(a) {
        return Err(ReductionError::Unsatisfying);
    }
    for attempt in 0..LAYOUT_ATTEMPTS {
        let params = Params::new(f.num_vars(), f.num_clauses(), attempt);
        let (out, pos) = build(f, Some((a, &params)));
        debug_assert_eq!(out.graph, r.graph);
        let d = Drawing::new(out.graph, pos.iter().map(to_point).collect()).expect("one position per vertex");
        if d.validate().is_ok() {
            return Ok(d);
        }
    }
    Err(ReductionError::LayoutFailed)
}

/// Reads an assignment off a drawing with TAR at least 60°: per clause, the
/// path leaving `C_j` parallel to the bottom path must end at a literal
/// vertex lying on the far side of its partner in the bottom path's
/// direction, and that literal is set true. Unset variables default to
/// false.
pub fn decode_assignment(r: &ReductionOutput, d: &Drawing) -> Result<Assignment, ReductionError> {
    if d.graph() != &r.graph {
        return Err(ReductionError::Mismatch);
    }
    if d.tar().map_err(|_| ReductionError::Mismatch)?.classify(Threshold::Deg60) == AngleClass::Below {
        return Err(ReductionError::BelowSixty);
    }
    let (b0, bl) = r.roles.bottom_ends;
    let frame = d.position(b0).direction_to(d.position(bl)).map_err(|_| ReductionError::Mismatch)?;
    let mut value: Vec<Option<bool>> = vec![None; r.instance.num_vars()];
    for j in 0..r.instance.num_clauses() {
        let horizontal: Vec<&ClausePath> = r
            .roles
            .paths
            .iter()
            .filter(|p| p.clause == j)
            .filter(|p| {
                let dir = d.position(p.vertices[0]).direction_to(d.position(p.vertices[1])).unwrap();
                dir.cross(&frame).is_zero() && dir.dot(&frame).is_positive()
            })
            .collect();
        let path = match horizontal.as_slice() {
            [] => return Err(ReductionError::NoHorizontalPath(j + 1)),
            [p] => *p,
            _ => return Err(ReductionError::SeveralHorizontalPaths(j + 1)),
        };
        let lit = path.literal;
        let partner = r.roles.literal_vertex(Literal { var: lit.var, positive: !lit.positive }, j);
        let v = path.vertices[3];
        let toward = d.position(partner).direction_to(d.position(v)).unwrap();
        if !toward.dot(&frame).is_positive() {
            return Err(ReductionError::WrongSide { clause: j + 1, literal: lit });
        }
        match value[lit.var - 1] {
            Some(b) if b != lit.positive => return Err(ReductionError::Contradiction(lit.var)),
            _ => value[lit.var - 1] = Some(lit.positive),
        }
    }
    Ok(Assignment(value.into_iter().map(|v| v.unwrap_or(false)).collect()))
}
