//! Exact rational points and segments.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always kept in canonical form.
pub type Rat = BigRational;

/// Builds a rational from an integer numerator and positive denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an integral rational.
pub fn int(v: i64) -> Rat {
    BigRational::from_integer(BigInt::from(v))
}

/// Parses `"a"` or `"a/b"` into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Formats a rational as `"a"` or `"a/b"`.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn approx(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// A point with exact rational coordinates.
///
/// A rounded `f64` copy of each coordinate is cached so that predicates can
/// run a floating-point filter before falling back to exact arithmetic.
#[derive(Clone)]
pub struct Point {
    pub x: Rat,
    pub y: Rat,
    fx: f64,
    fy: f64,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        let fx = approx(&x);
        let fy = approx(&y);
        Point { x, y, fx, fy }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    /// Approximate coordinates, for rendering and filtering only.
    pub fn to_f64(&self) -> (f64, f64) {
        (self.fx, self.fy)
    }

    pub(crate) fn fx(&self) -> f64 {
        self.fx
    }

    pub(crate) fn fy(&self) -> f64 {
        self.fy
    }

    pub fn midpoint(&self, other: &Point) -> Point {
        let two = int(2);
        Point::new((&self.x + &other.x) / &two, (&self.y + &other.y) / &two)
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &Point, t: &Rat) -> Point {
        Point::new(
            &self.x + (&other.x - &self.x) * t,
            &self.y + (&other.y - &self.y) * t,
        )
    }

    /// `self.y <= other.y`, deciding from the cached approximations when
    /// they differ (rounding is monotone).
    pub fn y_le(&self, other: &Point) -> bool {
        if self.fy < other.fy {
            true
        } else if self.fy > other.fy {
            false
        } else {
            self.y <= other.y
        }
    }

    pub fn x_le(&self, other: &Point) -> bool {
        if self.fx < other.fx {
            true
        } else if self.fx > other.fx {
            false
        } else {
            self.x <= other.x
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn max_abs_f64(&self) -> f64 {
        self.fx.abs().max(self.fy.abs())
    }

    /// Largest absolute coordinate, exactly.
    pub fn max_abs(&self) -> Rat {
        let ax = self.x.abs();
        let ay = self.y.abs();
        if ax > ay {
            ax
        } else {
            ay
        }
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for Point {}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", format_rat(&self.x), format_rat(&self.y))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point::new(&self.x + &rhs.x, &self.y + &rhs.y)
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point::new(&self.x - &rhs.x, &self.y - &rhs.y)
    }
}

impl Mul<&Rat> for &Point {
    type Output = Point;
    fn mul(self, rhs: &Rat) -> Point {
        Point::new(&self.x * rhs, &self.y * rhs)
    }
}

/// Exact cross product of two vectors.
pub fn cross(a: &Point, b: &Point) -> Rat {
    &a.x * &b.y - &a.y * &b.x
}

/// Exact dot product of two vectors.
pub fn dot(a: &Point, b: &Point) -> Rat {
    &a.x * &b.x + &a.y * &b.y
}

/// Shorthand for a point with integer coordinates.
pub fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

/// A closed segment between two distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Self {
        debug_assert!(a != b, "degenerate segment");
        Segment { a, b }
    }

    pub fn reversed(&self) -> Segment {
        Segment { a: self.b.clone(), b: self.a.clone() }
    }

    pub fn midpoint(&self) -> Point {
        self.a.midpoint(&self.b)
    }

    /// Equal as point sets, ignoring direction.
    pub fn same_as(&self, other: &Segment) -> bool {
        (self.a == other.a && self.b == other.b) || (self.a == other.b && self.b == other.a)
    }
}
