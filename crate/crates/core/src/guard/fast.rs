//! Floating-point fast path for `sees` and point membership.
//!
//! Every test either returns a decision whose sign is certified by an error
//! bound or gives up, in which case the caller falls back to exact
//! arithmetic.

use crate::geom::{Location, Polygon, VertexClass};

use super::HalfGuard;

/// Polygon in `f64` with a certified error scale.
pub(crate) struct FastPolygon {
    xs: Vec<f64>,
    ys: Vec<f64>,
    /// Absolute bound on orientation determinant errors.
    det_eps: f64,
    /// Absolute bound on coordinate errors.
    coord_eps: f64,
    scale: f64,
}

fn orient(ax: f64, ay: f64, bx: f64, by: f64, cx: f64, cy: f64) -> f64 {
    (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
}

impl FastPolygon {
    /// `scale` must bound the absolute value of every coordinate that will
    /// be passed in, including sample points.
    pub(crate) fn new(p: &Polygon, scale: f64) -> Option<FastPolygon> {
        if !scale.is_finite() || scale > 1e100 {
            return None;
        }
        let m = scale.max(1.0);
        Some(FastPolygon {
            xs: p.vertices().iter().map(|v| v.fx()).collect(),
            ys: p.vertices().iter().map(|v| v.fy()).collect(),
            det_eps: 1024.0 * f64::EPSILON * m * m,
            coord_eps: 64.0 * f64::EPSILON * m,
            scale: m,
        })
    }

    fn n(&self) -> usize {
        self.xs.len()
    }

    fn sign(&self, d: f64) -> Option<i8> {
        if d > self.det_eps {
            Some(1)
        } else if d < -self.det_eps {
            Some(-1)
        } else {
            None
        }
    }

    /// `Some(true)` when `(x, y)` is certainly in the open interior,
    /// `Some(false)` when certainly outside the closed polygon.
    pub(crate) fn inside(&self, x: f64, y: f64) -> Option<bool> {
        let n = self.n();
        let mut crossings = 0usize;
        for i in 0..n {
            let j = (i + 1) % n;
            let (ax, ay, bx, by) = (self.xs[i], self.ys[i], self.xs[j], self.ys[j]);
            if (ay - y).abs() <= self.coord_eps || (by - y).abs() <= self.coord_eps {
                // Near a vertex level only edges wholly to the left are safe.
                if x > ax.max(bx) + self.coord_eps {
                    continue;
                }
                return None;
            }
            if (ay > y) == (by > y) {
                continue;
            }
            let s = self.sign(orient(ax, ay, bx, by, x, y))?;
            // Upward edges with the point on their left, downward edges
            // with it on their right, cross the rightward ray.
            if (by > ay) == (s > 0) {
                crossings += 1;
            }
        }
        Some(crossings % 2 == 1)
    }

    /// Decides `sees(P, g, (x, y))` when the configuration is far from
    /// degenerate. `loc` is the exact location of the guard.
    pub(crate) fn sees(&self, p: &Polygon, g: &HalfGuard, loc: Location, x: f64, y: f64) -> Option<bool> {
        let (a, b, c) = g.hp.coeffs_f64();
        let v = a * x + b * y + c;
        let hb = 64.0 * f64::EPSILON * ((a.abs() + b.abs()) * self.scale + c.abs());
        if !(v.is_finite() && hb.is_finite()) {
            return None;
        }
        if v < -hb {
            return Some(false);
        }
        if v <= hb {
            return None;
        }
        let (px, py) = (g.pos.fx(), g.pos.fy());
        let (dx, dy) = (x - px, y - py);
        let cross_with = |i: usize, j: usize| (self.xs[j] - self.xs[i]) * dy - (self.ys[j] - self.ys[i]) * dx;
        let n = self.n();
        let skip: [usize; 2] = match loc {
            Location::OnEdge(i) => {
                match self.sign(cross_with(i, (i + 1) % n))? {
                    1 => {}
                    _ => return Some(false),
                }
                [i, i]
            }
            Location::OnVertex(i) => {
                let (nx, pv) = ((i + 1) % n, (i + n - 1) % n);
                let c1 = self.sign(cross_with(i, nx))?;
                let c2 = -self.sign(cross_with(i, pv))?;
                let inside = match p.classify_vertex(i) {
                    VertexClass::Convex => c1 > 0 && c2 > 0,
                    VertexClass::Straight => c1 > 0,
                    VertexClass::Reflex => c1 > 0 || c2 > 0,
                };
                if !inside {
                    return Some(false);
                }
                [pv, i]
            }
            Location::Inside => [n, n],
            Location::Outside => return None,
        };
        let (lox, hix) = (px.min(x) - self.coord_eps, px.max(x) + self.coord_eps);
        let (loy, hiy) = (py.min(y) - self.coord_eps, py.max(y) + self.coord_eps);
        for i in 0..n {
            if i == skip[0] || i == skip[1] {
                continue;
            }
            let j = (i + 1) % n;
            let (ax, ay, bx, by) = (self.xs[i], self.ys[i], self.xs[j], self.ys[j]);
            if ax.max(bx) < lox || ax.min(bx) > hix || ay.max(by) < loy || ay.min(by) > hiy {
                continue;
            }
            let o1 = self.sign(orient(px, py, x, y, ax, ay));
            let o2 = self.sign(orient(px, py, x, y, bx, by));
            if let (Some(s1), Some(s2)) = (o1, o2) {
                if s1 == s2 {
                    continue;
                }
            }
            let o3 = self.sign(orient(ax, ay, bx, by, px, py));
            let o4 = self.sign(orient(ax, ay, bx, by, x, y));
            if let (Some(s3), Some(s4)) = (o3, o4) {
                if s3 == s4 {
                    continue;
                }
                if let (Some(s1), Some(s2)) = (o1, o2) {
                    // Both pairs strictly separated: a proper crossing.
                    if s1 != s2 && s3 != s4 {
                        return Some(false);
                    }
                }
            }
            return None;
        }
        Some(true)
    }
}
