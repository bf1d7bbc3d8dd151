//! Exact primitives: numbers in `Q(√3)`, points, directions, threshold
//! predicates for angles and segment intersection.
//!
//! Every decision in the crate goes through this module. Floating point
//! values are produced only for reporting.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rat = BigRational;

const SQRT3: f64 = 1.732_050_807_568_877_2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("zero direction")]
    ZeroDirection,
    #[error("zero-length segment")]
    ZeroLengthSegment,
    #[error("division by zero")]
    DivisionByZero,
}

/// An element `rat + surd·√3` of the real quadratic field `Q(√3)`.
///
/// The representation is unique, so structural equality is value equality.
/// Plain rationals have `surd == 0`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Coord {
    rat: Rat,
    surd: Rat,
}

impl Coord {
    pub fn new(rat: Rat, surd: Rat) -> Self {
        Coord { rat, surd }
    }

    pub fn zero() -> Self {
        Coord::default()
    }

    pub fn one() -> Self {
        Coord::from_int(1)
    }

    pub fn from_int(v: i64) -> Self {
        Coord::from_rat(Rat::from_integer(BigInt::from(v)))
    }

    pub fn from_rat(rat: Rat) -> Self {
        Coord {
            rat,
            surd: Rat::zero(),
        }
    }

    /// `num/den` as a rational coordinate. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Coord::from_rat(Rat::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `√3`.
    pub fn sqrt3() -> Self {
        Coord {
            rat: Rat::zero(),
            surd: Rat::one(),
        }
    }

    /// Exact conversion of a finite float.
    pub fn from_f64(v: f64) -> Option<Self> {
        Rat::from_float(v).map(Coord::from_rat)
    }

    pub fn rational_part(&self) -> &Rat {
        &self.rat
    }

    pub fn surd_part(&self) -> &Rat {
        &self.surd
    }

    /// `Some` when the value is rational.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.surd.is_zero().then_some(&self.rat)
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.surd.is_zero()
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        let a = self.rat.cmp(&Rat::zero());
        let b = self.surd.cmp(&Rat::zero());
        match (a, b) {
            (_, Ordering::Equal) => a,
            (Ordering::Equal, _) => b,
            _ if a == b => a,
            _ => {
                // opposite signs: the larger magnitude wins; a² = 3b² has no
                // nonzero rational solution
                let a2 = &self.rat * &self.rat;
                let b2 = &self.surd * &self.surd * Rat::from_integer(BigInt::from(3));
                if a2 > b2 {
                    a
                } else {
                    b
                }
            }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Coord {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Result<Coord, GeometryError> {
        if self.is_zero() {
            return Err(GeometryError::DivisionByZero);
        }
        let three = Rat::from_integer(BigInt::from(3));
        let norm = &self.rat * &self.rat - &self.surd * &self.surd * three;
        Ok(Coord {
            rat: &self.rat / &norm,
            surd: -(&self.surd / &norm),
        })
    }

    pub fn checked_div(&self, other: &Coord) -> Result<Coord, GeometryError> {
        Ok(self * &other.recip()?)
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.rat.to_f64().unwrap_or(f64::NAN);
        if self.surd.is_zero() {
            a
        } else {
            a + self.surd.to_f64().unwrap_or(f64::NAN) * SQRT3
        }
    }
}

impl Ord for Coord {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for Coord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `p/q`, `p/q*sqrt3` or `p/q+r/s*sqrt3`. Integers print without a slash.
impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            return write!(f, "{}", self.rat);
        }
        if !self.rat.is_zero() {
            write!(f, "{}", self.rat)?;
            if self.surd.is_positive() {
                write!(f, "+")?;
            }
        }
        write!(f, "{}*sqrt3", self.surd)
    }
}

impl<'a> Add<&'a Coord> for &'a Coord {
    type Output = Coord;
    fn add(self, rhs: &Coord) -> Coord {
        Coord {
            rat: &self.rat + &rhs.rat,
            surd: &self.surd + &rhs.surd,
        }
    }
}

impl<'a> Sub<&'a Coord> for &'a Coord {
    type Output = Coord;
    fn sub(self, rhs: &Coord) -> Coord {
        Coord {
            rat: &self.rat - &rhs.rat,
            surd: &self.surd - &rhs.surd,
        }
    }
}

impl<'a> Mul<&'a Coord> for &'a Coord {
    type Output = Coord;
    fn mul(self, rhs: &Coord) -> Coord {
        if self.surd.is_zero() && rhs.surd.is_zero() {
            return Coord::from_rat(&self.rat * &rhs.rat);
        }
        let three = Rat::from_integer(BigInt::from(3));
        Coord {
            rat: &self.rat * &rhs.rat + &self.surd * &rhs.surd * three,
            surd: &self.rat * &rhs.surd + &self.surd * &rhs.rat,
        }
    }
}

impl Neg for &Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord {
            rat: -&self.rat,
            surd: -&self.surd,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Coord> for Coord {
            type Output = Coord;
            fn $m(self, rhs: Coord) -> Coord {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Coord> for Coord {
            type Output = Coord;
            fn $m(self, rhs: &Coord) -> Coord {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Coord> for &'a Coord {
            type Output = Coord;
            fn $m(self, rhs: Coord) -> Coord {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        -&self
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord::from_int(v)
    }
}

impl From<Rat> for Coord {
    fn from(v: Rat) -> Self {
        Coord::from_rat(v)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Coord,
    pub y: Coord,
}

impl Point {
    pub fn new(x: impl Into<Coord>, y: impl Into<Coord>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn origin() -> Self {
        Point::new(0, 0)
    }

    /// Vector from `self` to `other`, unchecked for zero length.
    pub(crate) fn vector_to(&self, other: &Point) -> Direction {
        Direction {
            dx: &other.x - &self.x,
            dy: &other.y - &self.y,
        }
    }

    /// Direction from `self` to `other`.
    pub fn direction_to(&self, other: &Point) -> Result<Direction, GeometryError> {
        Direction::new(&other.x - &self.x, &other.y - &self.y)
    }

    pub fn translate(&self, dx: &Coord, dy: &Coord) -> Point {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A nonzero vector. Only its direction matters to the angle predicates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    dx: Coord,
    dy: Coord,
}

impl Direction {
    pub fn new(dx: Coord, dy: Coord) -> Result<Self, GeometryError> {
        if dx.is_zero() && dy.is_zero() {
            return Err(GeometryError::ZeroDirection);
        }
        Ok(Direction { dx, dy })
    }

    pub fn from_ints(dx: i64, dy: i64) -> Result<Self, GeometryError> {
        Direction::new(Coord::from_int(dx), Coord::from_int(dy))
    }

    pub fn dx(&self) -> &Coord {
        &self.dx
    }

    pub fn dy(&self) -> &Coord {
        &self.dy
    }

    pub fn dot(&self, other: &Direction) -> Coord {
        &self.dx * &other.dx + &self.dy * &other.dy
    }

    pub fn cross(&self, other: &Direction) -> Coord {
        &self.dx * &other.dy - &self.dy * &other.dx
    }

    pub fn norm_sq(&self) -> Coord {
        self.dot(self)
    }

    pub fn reversed(&self) -> Direction {
        Direction {
            dx: -&self.dx,
            dy: -&self.dy,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// Upper half-plane including the positive x axis: angle in `[0°, 180°)`.
    fn upper(&self) -> bool {
        self.dy.is_positive() || (self.dy.is_zero() && self.dx.is_positive())
    }

    /// Counterclockwise order of polar angles in `[0°, 360°)`.
    pub fn cmp_polar(&self, other: &Direction) -> Ordering {
        match (self.upper(), other.upper()) {
            (true, false) => Ordering::Less,
            (false, true) => Ordering::Greater,
            _ => Coord::zero().cmp(&self.cross(other)),
        }
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.dx.to_f64(), self.dy.to_f64())
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}, {}>", self.dx, self.dy)
    }
}

/// Outcome of comparing an angle with a threshold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AngleClass {
    Below,
    Equal,
    Above,
}

impl AngleClass {
    /// `Below` or `Equal`.
    pub fn at_most(self) -> bool {
        self != AngleClass::Above
    }

    pub fn as_str(self) -> &'static str {
        match self {
            AngleClass::Below => "BELOW",
            AngleClass::Equal => "EQUAL",
            AngleClass::Above => "ABOVE",
        }
    }
}

impl fmt::Display for AngleClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Threshold {
    Deg60,
    Deg90,
    Deg120,
}

impl Threshold {
    pub const ALL: [Threshold; 3] = [Threshold::Deg60, Threshold::Deg90, Threshold::Deg120];

    pub fn degrees(self) -> f64 {
        match self {
            Threshold::Deg60 => 60.0,
            Threshold::Deg90 => 90.0,
            Threshold::Deg120 => 120.0,
        }
    }
}

fn class_of(ord: Ordering) -> AngleClass {
    match ord {
        Ordering::Less => AngleClass::Below,
        Ordering::Equal => AngleClass::Equal,
        Ordering::Greater => AngleClass::Above,
    }
}

/// Classifies the undirected angle `θ ∈ [0°, 180°]` between `u` and `v`.
///
/// With `d = u·v` and `c = u×v`, `tan θ = |c| / d`, so the 60° and 120°
/// tests reduce to comparing `c²` with `3d²` once the sign of `d` is known.
pub fn angle_vs_threshold(u: &Direction, v: &Direction, threshold: Threshold) -> AngleClass {
    let d = u.dot(v);
    let sd = d.signum();
    match threshold {
        Threshold::Deg90 => class_of(sd.reverse()),
        Threshold::Deg60 => {
            if sd != Ordering::Greater {
                return AngleClass::Above;
            }
            let c = u.cross(v);
            let three_d2 = &d * &d * Coord::from_int(3);
            class_of((&c * &c).cmp(&three_d2))
        }
        Threshold::Deg120 => {
            if sd != Ordering::Less {
                return AngleClass::Below;
            }
            let c = u.cross(v);
            let three_d2 = &d * &d * Coord::from_int(3);
            class_of((&c * &c).cmp(&three_d2).reverse())
        }
    }
}

/// Angle between `u` and `v` in degrees, in `[0, 180]`.
pub fn angle_degrees(u: &Direction, v: &Direction) -> f64 {
    let (ux, uy) = u.to_f64();
    let (vx, vy) = v.to_f64();
    let d = ux * vx + uy * vy;
    let c = ux * vy - uy * vx;
    libm::atan2(libm::fabs(c), d).to_degrees()
}

/// Exact comparison of the angle between `(u1, v1)` with the angle between
/// `(u2, v2)`.
pub fn compare_angles(u1: &Direction, v1: &Direction, u2: &Direction, v2: &Direction) -> Ordering {
    let d1 = u1.dot(v1);
    let d2 = u2.dot(v2);
    let (s1, s2) = (d1.signum(), d2.signum());
    // cosines ordered by sign first; angles order opposite to cosines
    if s1 != s2 {
        return s2.cmp(&s1);
    }
    if s1 == Ordering::Equal {
        return Ordering::Equal;
    }
    let n1 = u1.norm_sq() * v1.norm_sq();
    let n2 = u2.norm_sq() * v2.norm_sq();
    let lhs = &d1 * &d1 * n2;
    let rhs = &d2 * &d2 * n1;
    // compares cos²; for positive cosines larger cos² means smaller angle
    let cos_sq = lhs.cmp(&rhs);
    if s1 == Ordering::Greater {
        cos_sq.reverse()
    } else {
        cos_sq
    }
}

/// The angle formed by a pair of rays. Ordered by exact angle value.
#[derive(Clone, PartialEq, Eq)]
pub struct Angle {
    pub u: Direction,
    pub v: Direction,
}

impl Angle {
    pub fn new(u: Direction, v: Direction) -> Self {
        Angle { u, v }
    }

    /// Acute-or-right angle between the lines spanned by `u` and `v`.
    pub fn between_lines(u: Direction, v: Direction) -> Self {
        if u.dot(&v).is_negative() {
            Angle { u, v: v.reversed() }
        } else {
            Angle { u, v }
        }
    }

    pub fn classify(&self, threshold: Threshold) -> AngleClass {
        angle_vs_threshold(&self.u, &self.v, threshold)
    }

    pub fn degrees(&self) -> f64 {
        angle_degrees(&self.u, &self.v)
    }

    pub fn cmp_exact(&self, other: &Angle) -> Ordering {
        compare_angles(&self.u, &self.v, &other.u, &other.v)
    }
}

impl fmt::Debug for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Angle({:?}, {:?} ≈ {:.6}°)", self.u, self.v, self.degrees())
    }
}

/// Twice the signed area of `(a, b, c)`; positive for a left turn.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Coord {
    a.vector_to(b).cross(&a.vector_to(c))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SegmentRelation {
    None,
    ProperCrossing(Point),
    SharedEndpoint(Point),
    /// Collinear overlap, or an endpoint of one segment inside the other.
    Degenerate,
}

/// Relation between closed segments `p1p2` and `q1q2`.
pub fn segment_intersection(
    p1: &Point,
    p2: &Point,
    q1: &Point,
    q2: &Point,
) -> Result<SegmentRelation, GeometryError> {
    if p1 == p2 || q1 == q2 {
        return Err(GeometryError::ZeroLengthSegment);
    }
    let o1 = orient(p1, p2, q1).signum();
    let o2 = orient(p1, p2, q2).signum();
    if o1 == Ordering::Equal && o2 == Ordering::Equal {
        return Ok(collinear_relation(p1, p2, q1, q2));
    }
    let o3 = orient(q1, q2, p1).signum();
    let o4 = orient(q1, q2, p2).signum();
    let same = |a: Ordering, b: Ordering| a != Ordering::Equal && a == b;
    if same(o1, o2) || same(o3, o4) {
        return Ok(SegmentRelation::None);
    }
    let touch = if o1 == Ordering::Equal {
        Some(q1)
    } else if o2 == Ordering::Equal {
        Some(q2)
    } else if o3 == Ordering::Equal {
        Some(p1)
    } else if o4 == Ordering::Equal {
        Some(p2)
    } else {
        None
    };
    match touch {
        Some(t) => {
            let on_p = t == p1 || t == p2;
            let on_q = t == q1 || t == q2;
            Ok(if on_p && on_q {
                SegmentRelation::SharedEndpoint(t.clone())
            } else {
                SegmentRelation::Degenerate
            })
        }
        None => {
            let r = p1.vector_to(p2);
            let s = q1.vector_to(q2);
            let t = p1
                .vector_to(q1)
                .cross(&s)
                .checked_div(&r.cross(&s))
                .expect("non-parallel segments");
            Ok(SegmentRelation::ProperCrossing(Point {
                x: &p1.x + &t * &r.dx,
                y: &p1.y + &t * &r.dy,
            }))
        }
    }
}

fn collinear_relation(p1: &Point, p2: &Point, q1: &Point, q2: &Point) -> SegmentRelation {
    let r = p1.vector_to(p2);
    let len = r.norm_sq();
    let t1 = p1.vector_to(q1).dot(&r);
    let t2 = p1.vector_to(q2).dot(&r);
    let (qmin, qmax) = if t1 <= t2 { (t1, t2) } else { (t2, t1) };
    let lo = core::cmp::max(Coord::zero(), qmin);
    let hi = core::cmp::min(len, qmax);
    match lo.cmp(&hi) {
        Ordering::Greater => SegmentRelation::None,
        Ordering::Less => SegmentRelation::Degenerate,
        Ordering::Equal => {
            // a single common point is an endpoint of both
            let pt = if lo.is_zero() { p1.clone() } else { p2.clone() };
            SegmentRelation::SharedEndpoint(pt)
        }
    }
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    if !orient(a, b, p).is_zero() {
        return false;
    }
    let r = a.vector_to(b);
    let t = a.vector_to(p).dot(&r);
    !t.is_negative() && t <= r.norm_sq()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dir(x: i64, y: i64) -> Direction {
        Direction::from_ints(x, y).unwrap()
    }

    #[test]
    fn sign_of_mixed_surds() {
        // 2 - √3 > 0, 1 - √3 < 0, 7 - 4√3 > 0 (≈ 0.0718)
        let v = Coord::from_int(2) - Coord::sqrt3();
        assert!(v.is_positive());
        let v = Coord::from_int(1) - Coord::sqrt3();
        assert!(v.is_negative());
        let v = Coord::from_int(7) - Coord::from_int(4) * Coord::sqrt3();
        assert!(v.is_positive());
        assert!((v.to_f64() - 0.071_796_769_724_490_8).abs() < 1e-12);
    }

    #[test]
    fn reciprocal_roundtrip() {
        let v = Coord::frac(3, 7) + Coord::frac(-2, 5) * Coord::sqrt3();
        assert_eq!(&v * &v.recip().unwrap(), Coord::one());
        assert_eq!(Coord::zero().recip(), Err(GeometryError::DivisionByZero));
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(angle_vs_threshold(&dir(1, 0), &dir(0, 1), Threshold::Deg60), AngleClass::Above);
        assert_eq!(angle_vs_threshold(&dir(1, 0), &dir(1, 0), Threshold::Deg60), AngleClass::Below);
        // arccos(3/5) ≈ 53.13°
        assert_eq!(angle_vs_threshold(&dir(1, 0), &dir(3, 4), Threshold::Deg60), AngleClass::Below);
        assert_eq!(angle_vs_threshold(&dir(1, 0), &dir(0, 1), Threshold::Deg90), AngleClass::Equal);
        assert_eq!(angle_vs_threshold(&dir(1, 0), &dir(-1, 0), Threshold::Deg120), AngleClass::Above);
    }

    #[test]
    fn exact_sixty_and_one_twenty() {
        let s = Coord::sqrt3();
        let u = Direction::new(Coord::one(), Coord::zero()).unwrap();
        let v60 = Direction::new(Coord::one(), s.clone()).unwrap();
        let v120 = Direction::new(Coord::from_int(-1), s).unwrap();
        assert_eq!(angle_vs_threshold(&u, &v60, Threshold::Deg60), AngleClass::Equal);
        assert_eq!(angle_vs_threshold(&u, &v120, Threshold::Deg120), AngleClass::Equal);
        assert_eq!(angle_vs_threshold(&u, &v120, Threshold::Deg90), AngleClass::Above);
        assert_eq!(angle_vs_threshold(&u, &v60, Threshold::Deg90), AngleClass::Below);
    }

    #[test]
    fn degree_examples() {
        assert!((angle_degrees(&dir(1, 0), &dir(0, 1)) - 90.0).abs() < 1e-12);
        assert!((angle_degrees(&dir(1, 0), &dir(-1, 0)) - 180.0).abs() < 1e-12);
        assert!((angle_degrees(&dir(1, 0), &dir(1, 1)) - 45.0).abs() < 1e-12);
    }

    #[test]
    fn zero_direction_rejected() {
        assert_eq!(Direction::from_ints(0, 0), Err(GeometryError::ZeroDirection));
        let p = Point::new(1, 1);
        assert_eq!(p.direction_to(&p), Err(GeometryError::ZeroDirection));
    }

    #[test]
    fn compare_angles_orders() {
        let a45 = (dir(1, 0), dir(1, 1));
        let a90 = (dir(1, 0), dir(0, 1));
        let a135 = (dir(1, 0), dir(-1, 1));
        assert_eq!(compare_angles(&a45.0, &a45.1, &a90.0, &a90.1), Ordering::Less);
        assert_eq!(compare_angles(&a135.0, &a135.1, &a90.0, &a90.1), Ordering::Greater);
        assert_eq!(compare_angles(&a135.0, &a135.1, &dir(0, 3), &dir(5, -5)), Ordering::Equal);
        assert_eq!(compare_angles(&dir(2, 0), &dir(3, 4), &dir(1, 0), &dir(1, 1)), Ordering::Greater);
    }

    #[test]
    fn polar_order() {
        let mut v = [dir(0, -1), dir(-1, 0), dir(1, 1), dir(1, 0), dir(1, -1)];
        v.sort_by(|a, b| a.cmp_polar(b));
        assert_eq!(v, [dir(1, 0), dir(1, 1), dir(-1, 0), dir(0, -1), dir(1, -1)]);
    }

    #[test]
    fn segment_examples() {
        let p = |x, y| Point::new(x, y);
        assert_eq!(
            segment_intersection(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).unwrap(),
            SegmentRelation::ProperCrossing(p(1, 1))
        );
        assert_eq!(
            segment_intersection(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)).unwrap(),
            SegmentRelation::SharedEndpoint(p(1, 0))
        );
        assert_eq!(
            segment_intersection(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)).unwrap(),
            SegmentRelation::Degenerate
        );
        // T junction
        assert_eq!(
            segment_intersection(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)).unwrap(),
            SegmentRelation::Degenerate
        );
        // collinear, touching end to end
        assert_eq!(
            segment_intersection(&p(0, 0), &p(2, 0), &p(3, 0), &p(2, 0)).unwrap(),
            SegmentRelation::SharedEndpoint(p(2, 0))
        );
        assert_eq!(
            segment_intersection(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)).unwrap(),
            SegmentRelation::None
        );
        assert_eq!(
            segment_intersection(&p(0, 0), &p(0, 0), &p(2, 0), &p(3, 0)),
            Err(GeometryError::ZeroLengthSegment)
        );
    }

    #[test]
    fn crossing_point_is_exact() {
        let p = |x, y| Point::new(x, y);
        let r = segment_intersection(&p(0, 0), &p(3, 1), &p(0, 1), &p(1, 0)).unwrap();
        assert_eq!(
            r,
            SegmentRelation::ProperCrossing(Point::new(Coord::frac(3, 4), Coord::frac(1, 4)))
        );
    }
}
