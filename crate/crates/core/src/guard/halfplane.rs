//! Closed half-planes with integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::geom::{Point, Rat};

/// The closed half-plane `a*x + b*y + c >= 0`.
///
/// Coefficients are integers with `gcd(|a|, |b|, |c|) = 1`. Only positive
/// scaling is divided out, so the sign pattern fixes the side.
#[derive(Clone)]
pub struct HalfPlane {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    fa: f64,
    fb: f64,
    fc: f64,
}

impl HalfPlane {
    /// Normalizes `(a, b, c)`. Returns `None` when `a = b = 0`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Option<HalfPlane> {
        if a.is_zero() && b.is_zero() {
            return None;
        }
        let g = a.gcd(&b).gcd(&c);
        let (a, b, c) = if g.is_one() { (a, b, c) } else { (a / &g, b / &g, c / &g) };
        let f = |v: &BigInt| v.to_f64().unwrap_or(f64::NAN);
        Some(HalfPlane { fa: f(&a), fb: f(&b), fc: f(&c), a, b, c })
    }

    /// Half-plane to the left of the directed line `p -> q` (inclusive).
    pub fn left_of(p: &Point, q: &Point) -> HalfPlane {
        assert!(p != q, "half-plane needs two distinct points");
        let a = -(&q.y - &p.y);
        let b = &q.x - &p.x;
        let c = -(&a * &p.x + &b * &p.y);
        Self::from_rationals(&a, &b, &c)
    }

    fn from_rationals(a: &Rat, b: &Rat, c: &Rat) -> HalfPlane {
        let l = a.denom().lcm(b.denom()).lcm(c.denom());
        let s = BigRational::from_integer(l);
        let int = |r: &Rat| (r * &s).to_integer();
        HalfPlane::new(int(a), int(b), int(c)).expect("direction is nonzero")
    }

    pub fn coeffs(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.a, &self.b, &self.c)
    }

    pub(crate) fn coeffs_f64(&self) -> (f64, f64, f64) {
        (self.fa, self.fb, self.fc)
    }

    /// The complementary closed half-plane sharing the same boundary line.
    pub fn flipped(&self) -> HalfPlane {
        HalfPlane::new(-&self.a, -&self.b, -&self.c).expect("nonzero")
    }

    /// Sign of `a*x + b*y + c` at `p`.
    pub fn side(&self, p: &Point) -> i8 {
        let (x, y) = p.to_f64();
        let v = self.fa * x + self.fb * y + self.fc;
        let bound = 8.0 * f64::EPSILON * (self.fa.abs() * x.abs() + self.fb.abs() * y.abs() + self.fc.abs());
        if v.is_finite() && bound.is_finite() {
            if v > bound {
                return 1;
            }
            if v < -bound {
                return -1;
            }
        }
        let v = self.eval(p);
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    pub fn eval(&self, p: &Point) -> Rat {
        let a = BigRational::from_integer(self.a.clone());
        let b = BigRational::from_integer(self.b.clone());
        let c = BigRational::from_integer(self.c.clone());
        a * &p.x + b * &p.y + c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.side(p) >= 0
    }

    pub fn on_line(&self, p: &Point) -> bool {
        self.side(p) == 0
    }

    /// Sign of the inward normal `(a, b)` dotted with the direction `to - from`.
    pub fn dir_sign(&self, from: &Point, to: &Point) -> i8 {
        let d = to - from;
        let a = BigRational::from_integer(self.a.clone());
        let b = BigRational::from_integer(self.b.clone());
        let v = a * &d.x + b * &d.y;
        if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        }
    }

    /// A direction along the boundary line, `(-b, a)`; the half-plane lies
    /// to its left.
    pub fn line_direction(&self) -> Point {
        Point::new(BigRational::from_integer(-&self.b), BigRational::from_integer(self.a.clone()))
    }

    /// Inward normal `(a, b)`.
    pub fn normal(&self) -> Point {
        Point::new(BigRational::from_integer(self.a.clone()), BigRational::from_integer(self.b.clone()))
    }
}

impl PartialEq for HalfPlane {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.c == other.c
    }
}

impl Eq for HalfPlane {}

impl std::hash::Hash for HalfPlane {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.c.hash(state);
    }
}

impl fmt::Debug for HalfPlane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} >= 0", self.a, self.b, self.c)
    }
}
