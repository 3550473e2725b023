//! Simple polygons in counter-clockwise order.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::point::{cross, int, Point, Rat, Segment};
use super::predicates::{cross_sign, dot_sign, on_open_segment, on_segment, orientation, segments_cross_properly, segments_intersect};
use super::GeomError;

/// Interior angle classification of a polygon vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexClass {
    Convex,
    Reflex,
    Straight,
}

/// Where a point sits relative to a polygon.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Outside,
    OnVertex(usize),
    /// On the relative interior of edge `i`, from vertex `i` to vertex `i + 1`.
    OnEdge(usize),
}

impl Location {
    pub fn in_closed(self) -> bool {
        !matches!(self, Location::Outside)
    }

    pub fn on_boundary(self) -> bool {
        matches!(self, Location::OnVertex(_) | Location::OnEdge(_))
    }
}

/// A simple polygon with vertices in counter-clockwise order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polygon {
    vertices: Vec<Point>,
}

/// Validates a vertex list, rejecting straight vertices.
pub fn validate_polygon(vertices: Vec<Point>) -> Result<Polygon, GeomError> {
    validate_polygon_with(vertices, false)
}

/// Validates a vertex list and normalizes it to counter-clockwise order.
pub fn validate_polygon_with(mut vertices: Vec<Point>, allow_straight: bool) -> Result<Polygon, GeomError> {
    let n = vertices.len();
    if n < 3 {
        return Err(GeomError::TooFewVertices(n));
    }
    {
        let mut sorted: Vec<&Point> = vertices.iter().collect();
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeomError::RepeatedVertex(w[0].clone()));
        }
    }
    let area2 = signed_area2(&vertices);
    if area2.is_zero() {
        return Err(GeomError::NotSimple);
    }
    if area2.is_negative() {
        vertices.reverse();
    }
    for i in 0..n {
        let p = &vertices[(i + n - 1) % n];
        let v = &vertices[i];
        let q = &vertices[(i + 1) % n];
        if orientation(p, v, q) == 0 {
            if dot_sign(v, p, v, q) > 0 {
                return Err(GeomError::NotSimple);
            }
            if !allow_straight {
                return Err(GeomError::DegenerateStraightVertex(v.clone()));
            }
        }
    }
    for i in 0..n {
        let a = &vertices[i];
        let b = &vertices[(i + 1) % n];
        for j in (i + 2)..n {
            if i == 0 && j == n - 1 {
                continue;
            }
            let c = &vertices[j];
            let d = &vertices[(j + 1) % n];
            if bbox_disjoint(a, b, c, d) {
                continue;
            }
            if segments_intersect(a, b, c, d) {
                return Err(GeomError::NotSimple);
            }
        }
    }
    Ok(Polygon { vertices })
}

fn bbox_disjoint(a: &Point, b: &Point, c: &Point, d: &Point) -> bool {
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let (cx, cy) = c.to_f64();
    let (dx, dy) = d.to_f64();
    let slack = 1e-9 * (1.0 + ax.abs().max(ay.abs()).max(bx.abs()).max(by.abs()).max(cx.abs()).max(cy.abs()).max(dx.abs()).max(dy.abs()));
    ax.max(bx) + slack < cx.min(dx)
        || cx.max(dx) + slack < ax.min(bx)
        || ay.max(by) + slack < cy.min(dy)
        || cy.max(dy) + slack < ay.min(by)
}

/// True when `p` is certainly outside the bounding box of `ab`, so it can be
/// neither an endpoint nor on the segment.
fn bbox_excludes(a: &Point, b: &Point, p: &Point) -> bool {
    let (ax, ay) = a.to_f64();
    let (bx, by) = b.to_f64();
    let (px, py) = p.to_f64();
    px < ax.min(bx) || px > ax.max(bx) || py < ay.min(by) || py > ay.max(by)
}

/// Twice the signed area of the closed vertex chain.
pub fn signed_area2(vertices: &[Point]) -> Rat {
    let n = vertices.len();
    let mut s = BigRational::zero();
    for i in 0..n {
        s += cross(&vertices[i], &vertices[(i + 1) % n]);
    }
    s
}

impl Polygon {
    /// Wraps a vertex list that is already known to be a valid CCW polygon.
    pub(crate) fn from_trusted(vertices: Vec<Point>) -> Polygon {
        debug_assert!(signed_area2(&vertices).is_positive());
        Polygon { vertices }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Point> {
        self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &Point {
        &self.vertices[i % self.n()]
    }

    pub fn next(&self, i: usize) -> usize {
        (i + 1) % self.n()
    }

    pub fn prev(&self, i: usize) -> usize {
        (i + self.n() - 1) % self.n()
    }

    /// Edge `i` runs from vertex `i` to vertex `i + 1`.
    pub fn edge(&self, i: usize) -> Segment {
        Segment::new(self.vertex(i).clone(), self.vertex(self.next(i)).clone())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let n = self.n();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn area(&self) -> Rat {
        signed_area2(&self.vertices) / int(2)
    }

    pub fn classify_vertex(&self, i: usize) -> VertexClass {
        match orientation(self.vertex(self.prev(i)), self.vertex(i), self.vertex(self.next(i))) {
            1 => VertexClass::Convex,
            -1 => VertexClass::Reflex,
            _ => VertexClass::Straight,
        }
    }

    pub fn is_reflex(&self, i: usize) -> bool {
        self.classify_vertex(i) == VertexClass::Reflex
    }

    pub fn reflex_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.is_reflex(i)).collect()
    }

    pub fn is_convex(&self) -> bool {
        self.reflex_vertices().is_empty()
    }

    pub fn has_straight(&self) -> bool {
        (0..self.n()).any(|i| self.classify_vertex(i) == VertexClass::Straight)
    }

    /// Every edge axis-parallel and no straight vertices.
    pub fn is_orthogonal(&self) -> bool {
        self.edges().all(|(a, b)| a.x == b.x || a.y == b.y) && !self.has_straight()
    }

    pub fn find_vertex(&self, p: &Point) -> Option<usize> {
        self.vertices.iter().position(|v| v == p)
    }

    /// Index `i` of the edge from vertex `i` to vertex `i + 1` equal to `s`
    /// in either direction.
    pub fn find_edge(&self, s: &Segment) -> Option<usize> {
        let n = self.n();
        (0..n).find(|&i| {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            (a == &s.a && b == &s.b) || (a == &s.b && b == &s.a)
        })
    }

    /// Index of the edge whose closed extent contains segment `s`.
    pub fn edge_containing(&self, s: &Segment) -> Option<usize> {
        self.edges().position(|(a, b)| on_segment(&s.a, a, b) && on_segment(&s.b, a, b))
    }

    /// Exact point location (crossing-number rule with explicit boundary tests).
    pub fn locate(&self, p: &Point) -> Location {
        let n = self.n();
        let mut wind = 0i32;
        for i in 0..n {
            let a = &self.vertices[i];
            let b = &self.vertices[(i + 1) % n];
            if bbox_excludes(a, b, p) {
                if a.y_le(p) && !b.y_le(p) {
                    if orientation(a, b, p) > 0 {
                        wind += 1;
                    }
                } else if !a.y_le(p) && b.y_le(p) && orientation(a, b, p) < 0 {
                    wind -= 1;
                }
                continue;
            }
            if a == p {
                return Location::OnVertex(i);
            }
            if on_open_segment(p, a, b) {
                return Location::OnEdge(i);
            }
            let a_le = a.y_le(p);
            let b_le = b.y_le(p);
            if a_le && !b_le {
                if orientation(a, b, p) > 0 {
                    wind += 1;
                }
            } else if !a_le && b_le && orientation(a, b, p) < 0 {
                wind -= 1;
            }
        }
        if wind != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.locate(p).in_closed()
    }

    /// True when the direction `to - from` points into the closed interior
    /// cone at a boundary location. Interior points accept every direction.
    pub fn dir_in_cone(&self, loc: Location, from: &Point, to: &Point) -> bool {
        match loc {
            Location::Outside => false,
            Location::Inside => true,
            Location::OnEdge(i) => {
                let a = self.vertex(i);
                let b = self.vertex(i + 1);
                cross_sign(a, b, from, to) >= 0
            }
            Location::OnVertex(i) => {
                let v = self.vertex(i);
                let nx = self.vertex(self.next(i));
                let pv = self.vertex(self.prev(i));
                let c1 = cross_sign(v, nx, from, to);
                let c2 = cross_sign(from, to, v, pv);
                match self.classify_vertex(i) {
                    VertexClass::Convex => c1 >= 0 && c2 >= 0,
                    VertexClass::Straight => c1 >= 0,
                    VertexClass::Reflex => !(c1 < 0 && c2 < 0),
                }
            }
        }
    }

    /// True when `to - from` points strictly into the open interior cone.
    pub fn dir_strictly_in_cone(&self, loc: Location, from: &Point, to: &Point) -> bool {
        match loc {
            Location::Outside => false,
            Location::Inside => true,
            Location::OnEdge(i) => cross_sign(self.vertex(i), self.vertex(i + 1), from, to) > 0,
            Location::OnVertex(i) => {
                let v = self.vertex(i);
                let nx = self.vertex(self.next(i));
                let pv = self.vertex(self.prev(i));
                let c1 = cross_sign(v, nx, from, to);
                let c2 = cross_sign(from, to, v, pv);
                match self.classify_vertex(i) {
                    VertexClass::Convex => c1 > 0 && c2 > 0,
                    VertexClass::Straight => c1 > 0,
                    VertexClass::Reflex => !(c1 <= 0 && c2 <= 0),
                }
            }
        }
    }

    /// True iff every point of the closed segment `ab` lies in the closed
    /// polygon.
    pub fn segment_in_polygon(&self, a: &Point, b: &Point) -> bool {
        let la = self.locate(a);
        if !la.in_closed() {
            return false;
        }
        if a == b {
            return true;
        }
        let lb = self.locate(b);
        if !lb.in_closed() {
            return false;
        }
        if !self.dir_in_cone(la, a, b) || !self.dir_in_cone(lb, b, a) {
            return false;
        }
        let n = self.n();
        for i in 0..n {
            let c = &self.vertices[i];
            let d = &self.vertices[(i + 1) % n];
            if bbox_disjoint(a, b, c, d) {
                continue;
            }
            if segments_cross_properly(a, b, c, d) {
                return false;
            }
            if on_open_segment(c, a, b) {
                let loc = Location::OnVertex(i);
                if !self.dir_in_cone(loc, c, b) || !self.dir_in_cone(loc, c, a) {
                    return false;
                }
            }
        }
        true
    }

    /// True when the relative interior of `ab` lies strictly inside the
    /// polygon and both endpoints are on the boundary.
    pub fn is_cut(&self, a: &Point, b: &Point) -> bool {
        if a == b {
            return false;
        }
        let la = self.locate(a);
        let lb = self.locate(b);
        if !la.on_boundary() || !lb.on_boundary() {
            return false;
        }
        if !self.segment_in_polygon(a, b) {
            return false;
        }
        if self.locate(&a.midpoint(b)) != Location::Inside {
            return false;
        }
        !self.vertices.iter().any(|v| on_open_segment(v, a, b))
    }

    /// True when vertices `i` and `j` span a diagonal.
    pub fn is_diagonal(&self, i: usize, j: usize) -> bool {
        let n = self.n();
        i != j && self.next(i) != j && self.next(j) != i && i < n && j < n && self.is_cut(self.vertex(i), self.vertex(j))
    }

    /// Drops the listed vertices when they are straight. Used to normalize
    /// pieces after a cut.
    pub(crate) fn drop_straight_at(&self, pts: &[&Point]) -> Polygon {
        let n = self.n();
        let keep: Vec<Point> = (0..n)
            .filter(|&i| !(pts.contains(&self.vertex(i)) && self.classify_vertex(i) == VertexClass::Straight))
            .map(|i| self.vertices[i].clone())
            .collect();
        Polygon::from_trusted(keep)
    }

    /// Copy with every straight vertex removed.
    pub fn without_straight(&self) -> Polygon {
        let n = self.n();
        let keep: Vec<Point> = (0..n)
            .filter(|&i| self.classify_vertex(i) != VertexClass::Straight)
            .map(|i| self.vertices[i].clone())
            .collect();
        Polygon::from_trusted(keep)
    }

    /// Rotates the vertex list so that vertex `k` becomes vertex 0.
    pub fn rotated(&self, k: usize) -> Polygon {
        let n = self.n();
        Polygon::from_trusted((0..n).map(|i| self.vertices[(i + k) % n].clone()).collect())
    }

    /// Bounding box `(min, max)` in exact coordinates.
    pub fn bbox(&self) -> (Point, Point) {
        let mut minx = self.vertices[0].x.clone();
        let mut maxx = minx.clone();
        let mut miny = self.vertices[0].y.clone();
        let mut maxy = miny.clone();
        for v in &self.vertices[1..] {
            if v.x < minx {
                minx = v.x.clone();
            }
            if v.x > maxx {
                maxx = v.x.clone();
            }
            if v.y < miny {
                miny = v.y.clone();
            }
            if v.y > maxy {
                maxy = v.y.clone();
            }
        }
        (Point::new(minx, miny), Point::new(maxx, maxy))
    }
}
