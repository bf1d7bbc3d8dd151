//! Exact total angular resolution (TAR) of straight-line graph drawings.
//!
//! The crate evaluates the smallest angle of a drawing, taken over pairs of
//! edges sharing a vertex and pairs of crossing edges, and classifies it
//! exactly against 60°, 90° and 120°. Coordinates live in the field
//! `Q(√3)`, which contains every rational point and every vertex of the
//! triangular lattice, so the threshold comparisons never round.
//!
//! On top of the evaluator sit:
//!
//! * [`drawing`]: validation, crossings, planarization, cells and
//!   combinatorial signatures,
//! * [`bounds`]: checkers for the edge-density bounds of drawings with
//!   TAR above 60°,
//! * [`exceptions`]: the catalog of small graphs exceeding `2n - 6`,
//! * [`generators`]: the layered octagon family, regular polygons and
//!   random drawings,
//! * [`optimizer`]: a seeded hill climber and a grid brute-force oracle,
//! * [`reduction`]: the 3SAT gadget graph, satisfying layouts and decoding.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod drawing;
pub mod exceptions;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod optimizer;
pub mod reduction;

mod isomorphism;

pub use drawing::{Drawing, TarValue};
pub use geometry::{AngleClass, Coord, Direction, Point, Rat, Threshold};
pub use graph::Graph;
