//! The small graphs that exceed `2n - 6` edges yet have drawings with TAR
//! above 60°, each with a witness drawing.

use alloc::vec::Vec;
use core::fmt;

use crate::drawing::{CombSignature, Drawing, DrawingError};
use crate::geometry::{AngleClass, Coord, Point};
use crate::graph::Graph;
use crate::isomorphism::isomorphic;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExceptionId {
    pub family: u8,
    /// 1-based; 0 for single-variant families.
    pub variant: u8,
}

impl ExceptionId {
    pub const E0: ExceptionId = ExceptionId { family: 0, variant: 0 };
    pub const E1_EDGE: ExceptionId = ExceptionId { family: 1, variant: 1 };
    pub const E1_PATH3: ExceptionId = ExceptionId { family: 1, variant: 2 };
    pub const E1_PATH4: ExceptionId = ExceptionId { family: 1, variant: 3 };
    pub const E1_STAR: ExceptionId = ExceptionId { family: 1, variant: 4 };
    pub const E2: ExceptionId = ExceptionId { family: 2, variant: 0 };
    pub const E3: ExceptionId = ExceptionId { family: 3, variant: 0 };
    pub const E4: ExceptionId = ExceptionId { family: 4, variant: 0 };
    pub const E5: ExceptionId = ExceptionId { family: 5, variant: 0 };
    pub const E6: ExceptionId = ExceptionId { family: 6, variant: 0 };
    pub const E7: ExceptionId = ExceptionId { family: 7, variant: 0 };
    pub const E8_VERTEX: ExceptionId = ExceptionId { family: 8, variant: 1 };
    pub const E8_EDGE: ExceptionId = ExceptionId { family: 8, variant: 2 };
    pub const E9_PATH: ExceptionId = ExceptionId { family: 9, variant: 1 };
    pub const E9_CYCLE: ExceptionId = ExceptionId { family: 9, variant: 2 };

    pub const ALL: [ExceptionId; 15] = [
        Self::E0,
        Self::E1_EDGE,
        Self::E1_PATH3,
        Self::E1_PATH4,
        Self::E1_STAR,
        Self::E2,
        Self::E3,
        Self::E4,
        Self::E5,
        Self::E6,
        Self::E7,
        Self::E8_VERTEX,
        Self::E8_EDGE,
        Self::E9_PATH,
        Self::E9_CYCLE,
    ];

    /// Stable short name, e.g. `E4`, `E1(path3)` or `E9(2)`.
    pub fn name(self) -> &'static str {
        match (self.family, self.variant) {
            (0, _) => "E0",
            (1, 1) => "E1(edge)",
            (1, 2) => "E1(path3)",
            (1, 3) => "E1(path4)",
            (1, _) => "E1(star)",
            (2, _) => "E2",
            (3, _) => "E3",
            (4, _) => "E4",
            (5, _) => "E5",
            (6, _) => "E6",
            (7, _) => "E7",
            (8, 1) => "E8(1)",
            (8, _) => "E8(2)",
            (9, 1) => "E9(1)",
            _ => "E9(2)",
        }
    }

    pub fn from_name(s: &str) -> Option<ExceptionId> {
        Self::ALL.into_iter().find(|id| id.name() == s)
    }
}

impl fmt::Display for ExceptionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: ExceptionId,
    pub graph: Graph,
    pub witness: Drawing,
    pub signature: CombSignature,
}

type Raw = (ExceptionId, usize, &'static [(usize, usize)], &'static [(i64, i64)]);

const HEX: [(usize, usize); 6] = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];

/// Integer witnesses. Entries needing `√3` are built in [`surd_witnesses`].
const RAW: &[Raw] = &[
    (ExceptionId::E0, 3, &[(0, 1)], &[(0, 0), (1, 0), (0, 1)]),
    (ExceptionId::E1_EDGE, 2, &[(0, 1)], &[(0, 0), (1, 0)]),
    (ExceptionId::E1_PATH3, 3, &[(0, 1), (1, 2)], &[(0, 0), (1, 0), (2, 0)]),
    (ExceptionId::E1_PATH4, 4, &[(0, 1), (1, 2), (2, 3)], &[(0, 0), (1, 0), (2, 0), (3, 0)]),
    (ExceptionId::E2, 4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[(0, 0), (1, 0), (1, 1), (0, 1)]),
    (
        ExceptionId::E3,
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4)],
        &[(0, 0), (1, 0), (1, 1), (0, 1), (2, 2)],
    ),
    (
        ExceptionId::E4,
        5,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
        &[(0, 10), (-9, 3), (-6, -8), (6, -8), (9, 3)],
    ),
    // pentagon, inner vertex on corners 0 and 2
    (
        ExceptionId::E5,
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)],
        &[(341, 97), (149, 564), (-227, 299), (-530, -246), (306, -490), (51, 49)],
    ),
    // pentagon, inner edge 5-6 with 5 on corner 0 and 6 on corners 2 and 4
    (
        ExceptionId::E6,
        7,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 6), (5, 0), (6, 2), (6, 4)],
        &[(368, -94), (259, 589), (-356, 212), (-514, -446), (193, -334), (135, -38), (31, -69)],
    ),
    (
        ExceptionId::E7,
        6,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 4)],
        &[(0, 0), (1, 0), (2, 0), (2, 1), (1, 1), (0, 1)],
    ),
    // hexagon, inner edge 6-7 with 6 on corners 0, 2 and 7 on corners 3, 5
    (
        ExceptionId::E8_EDGE,
        8,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7), (6, 0), (6, 2), (7, 3), (7, 5)],
        &[(-2, 2), (-4, 0), (-2, -2), (2, -2), (4, 0), (2, 2), (-1, 0), (1, 0)],
    ),
    // hexagon with inner path 6-7-8; corner 0 has degree 4
    (
        ExceptionId::E9_PATH,
        9,
        &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7), (7, 8), (0, 6), (0, 8), (2, 8), (3, 7), (4, 6)],
        &[
            (2127, 98),
            (3363, 5945),
            (-2517, 4630),
            (-4774, 439),
            (-3099, -3972),
            (2603, -6062),
            (-530, -1373),
            (-1693, 236),
            (-623, 2131),
        ],
    ),
    // hexagon with inner 4-cycle 6-7-8-9; inner vertex 6 has degree 4
    (
        ExceptionId::E9_CYCLE,
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 0),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 6),
            (0, 6),
            (1, 7),
            (2, 8),
            (3, 9),
            (4, 6),
        ],
        &[
            (4794, 786),
            (1414, 4200),
            (-1761, 3989),
            (-3930, 1121),
            (-2990, -3304),
            (4179, -7264),
            (303, -864),
            (507, 1804),
            (-929, 2448),
            (-2859, 882),
        ],
    ),
];

fn surd_witnesses() -> Vec<(ExceptionId, Graph, Vec<Point>)> {
    let half = Coord::frac(1, 2);
    let s = Coord::sqrt3();
    let hs = &s * &half;
    let zero = Coord::zero;
    // three rays at 120°
    let star = (
        ExceptionId::E1_STAR,
        Graph::star(3),
        alloc::vec![
            Point::origin(),
            Point::new(1, 0),
            Point { x: -&half, y: hs.clone() },
            Point { x: -&half, y: -&hs },
        ],
    );
    // hexagon whose even corners sit on the unit circle and odd corners
    // further out, center joined to the even corners
    let r = &(&Coord::one() + &s) * &half;
    let rc = &r * &hs;
    let rs = &r * &half;
    let hex = alloc::vec![
        Point { x: zero(), y: Coord::one() },
        Point { x: -&rc, y: rs.clone() },
        Point { x: -&hs, y: -&half },
        Point { x: zero(), y: -&r },
        Point { x: hs.clone(), y: -&half },
        Point { x: rc, y: rs },
        Point::origin(),
    ];
    let mut edges = HEX.to_vec();
    edges.extend([(6, 0), (6, 2), (6, 4)]);
    let e8 = (ExceptionId::E8_VERTEX, Graph::new(7, edges).unwrap(), hex);
    alloc::vec![star, e8]
}

/// Entry graphs and witnesses in catalog order, unverified.
fn raw_entries() -> Vec<(ExceptionId, Graph, Vec<Point>)> {
    let mut out: Vec<_> = RAW
        .iter()
        .map(|&(id, n, edges, pts)| {
            let g = Graph::new(n, edges.iter().copied()).expect("catalog edges are simple");
            (id, g, pts.iter().map(|&(x, y)| Point::new(x, y)).collect())
        })
        .collect();
    out.extend(surd_witnesses());
    out.sort_by_key(|e| e.0);
    out
}

/// The catalog graphs only, without witness checks.
pub fn catalog_graphs() -> Vec<(ExceptionId, Graph)> {
    raw_entries().into_iter().map(|(id, g, _)| (id, g)).collect()
}

/// The full catalog. Every witness is checked on load: valid, TAR above 60°.
pub fn catalog() -> Vec<CatalogEntry> {
    raw_entries()
        .into_iter()
        .map(|(id, graph, pts)| {
            let witness = Drawing::valid(graph.clone(), pts).unwrap_or_else(|e| panic!("{id} witness: {e}"));
            let tar = witness.tar().expect("valid witness");
            assert_eq!(tar.vs60(), AngleClass::Above, "{id} witness TAR is {tar}");
            let signature = witness.comb_signature().expect("witness signature");
            CatalogEntry { id, graph, witness, signature }
        })
        .collect()
}

pub fn entry(id: ExceptionId) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.id == id)
}

/// Catalog id of a graph isomorphic to `g`.
pub fn recognize_graph(g: &Graph) -> Option<ExceptionId> {
    catalog_graphs().into_iter().find(|(_, h)| isomorphic(g, h)).map(|(id, _)| id)
}

/// Catalog id of a drawing combinatorially equivalent to `d`.
pub fn recognize_drawing(d: &Drawing) -> Result<Option<ExceptionId>, DrawingError> {
    let sig = d.comb_signature()?;
    Ok(catalog().into_iter().find(|e| e.signature == sig).map(|e| e.id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drawing::{reflect, scale_translate};

    #[test]
    fn witnesses_load_and_self_recognize() {
        let cat = catalog();
        assert_eq!(cat.len(), ExceptionId::ALL.len());
        for e in &cat {
            assert_eq!(recognize_graph(&e.graph), Some(e.id));
            assert_eq!(recognize_drawing(&e.witness).unwrap(), Some(e.id));
            if e.graph.n() >= 3 {
                assert!(e.graph.m() + 6 > 2 * e.graph.n(), "{}", e.id);
            }
        }
    }

    #[test]
    fn entries_are_distinct() {
        let cat = catalog();
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[i + 1..] {
                assert_ne!(a.signature, b.signature);
                assert!(!isomorphic(&a.graph, &b.graph), "{} ~ {}", a.id, b.id);
            }
        }
    }

    #[test]
    fn recognition_examples() {
        assert_eq!(recognize_graph(&Graph::cycle(5)), Some(ExceptionId::E4));
        assert_eq!(recognize_graph(&Graph::complete(4)), None);
        assert_eq!(recognize_graph(&Graph::path(3)), Some(ExceptionId::E1_PATH3));
        let e8 = entry(ExceptionId::E8_EDGE).unwrap().witness;
        let moved = scale_translate(&reflect(&e8), &Coord::frac(7, 3), &Coord::from_int(-4), &Coord::frac(1, 9));
        assert_eq!(recognize_drawing(&moved).unwrap(), Some(ExceptionId::E8_EDGE));
        let both = Drawing::from_ints(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)], &[(0, 0), (1, 0), (1, 1), (0, 1)]);
        assert_eq!(recognize_drawing(&both.unwrap()).unwrap(), None);
    }

    #[test]
    fn names_round_trip() {
        for id in ExceptionId::ALL {
            assert_eq!(ExceptionId::from_name(id.name()), Some(id));
        }
    }
}
