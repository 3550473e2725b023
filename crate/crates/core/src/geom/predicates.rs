//! Exact sign predicates with a floating-point filter.
//!
//! Every predicate first evaluates its determinant in `f64` and accepts the
//! sign only when the magnitude clears a forward error bound. Otherwise the
//! determinant is recomputed in rational arithmetic.

use std::cmp::Ordering;

use num_traits::Signed;

use super::point::{cross, dot, Point};

const FILTER: f64 = 512.0 * f64::EPSILON;

fn sign_of(r: &num_rational::BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

fn magnitude(pts: &[&Point]) -> f64 {
    pts.iter().fold(0.0f64, |m, p| m.max(p.max_abs_f64()))
}

/// Sign of `(a1 - a0) x (b1 - b0)`.
pub fn cross_sign(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> i8 {
    let m = magnitude(&[a0, a1, b0, b1]);
    if m.is_finite() {
        let dx1 = a1.fx() - a0.fx();
        let dy1 = a1.fy() - a0.fy();
        let dx2 = b1.fx() - b0.fx();
        let dy2 = b1.fy() - b0.fy();
        let det = dx1 * dy2 - dy1 * dx2;
        let bound = FILTER * m * m;
        if det > bound {
            return 1;
        }
        if det < -bound {
            return -1;
        }
    }
    sign_of(&cross(&(a1 - a0), &(b1 - b0)))
}

/// Sign of `(a1 - a0) . (b1 - b0)`.
pub fn dot_sign(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> i8 {
    let m = magnitude(&[a0, a1, b0, b1]);
    if m.is_finite() {
        let d = (a1.fx() - a0.fx()) * (b1.fx() - b0.fx()) + (a1.fy() - a0.fy()) * (b1.fy() - b0.fy());
        let bound = FILTER * m * m;
        if d > bound {
            return 1;
        }
        if d < -bound {
            return -1;
        }
    }
    sign_of(&dot(&(a1 - a0), &(b1 - b0)))
}

/// Sign of the cross product `(q - p) x (r - p)`: `+1` for a left turn,
/// `0` when collinear, `-1` for a right turn.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    cross_sign(p, q, p, r)
}

/// Sign of the cross product of two direction vectors.
pub fn vec_cross_sign(u: &Point, v: &Point) -> i8 {
    let o = Point::from_ints(0, 0);
    cross_sign(&o, u, &o, v)
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Point, a: &Point, b: &Point) -> bool {
    orientation(a, b, p) == 0 && dot_sign(p, a, p, b) <= 0
}

/// True when `p` lies strictly between `a` and `b` on segment `ab`.
pub fn on_open_segment(p: &Point, a: &Point, b: &Point) -> bool {
    p != a && p != b && on_segment(p, a, b)
}

/// True when the closed segments `ab` and `cd` share a point.
pub fn segments_intersect(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if o1 * o2 < 0 && o3 * o4 < 0 {
        return true;
    }
    (o1 == 0 && on_segment(c, a, b))
        || (o2 == 0 && on_segment(d, a, b))
        || (o3 == 0 && on_segment(a, c, d))
        || (o4 == 0 && on_segment(b, c, d))
}

/// True when the segments cross at a single point interior to both.
pub fn segments_cross_properly(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    orientation(a, b, c) * orientation(a, b, d) < 0 && orientation(c, d, a) * orientation(c, d, b) < 0
}

/// Compares the directions of `u` and `v` by angle in `[0, 2pi)` measured
/// counter-clockwise from the positive x-axis. Neither may be zero.
pub fn angle_cmp(u: &Point, v: &Point) -> Ordering {
    let hu = half(u);
    let hv = half(v);
    hu.cmp(&hv).then_with(|| match vec_cross_sign(u, v) {
        1 => Ordering::Less,
        -1 => Ordering::Greater,
        _ => Ordering::Equal,
    })
}

fn half(v: &Point) -> u8 {
    let sy = sign_of(&v.y);
    if sy > 0 || (sy == 0 && sign_of(&v.x) > 0) {
        0
    } else {
        1
    }
}

/// Sign of a rational.
pub fn sign(r: &num_rational::BigRational) -> i8 {
    sign_of(r)
}
