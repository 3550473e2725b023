//! Exact visibility regions of half-guards by angular sweep.

use std::cmp::Ordering;

use crate::geom::{angle_cmp, cross, cross_sign, orientation, pt, Point, Polygon, Rat};

use super::HalfGuard;

/// The closed set of points a half-guard sees, as a fan of closed triangles
/// `(pos, a, b)` ordered counter-clockwise around the guard.
///
/// Visible segments of zero width (a single ray seen between two blocked
/// angular intervals) carry no area and are not represented.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisRegion {
    pub pos: Point,
    pub wedges: Vec<(Point, Point)>,
}

impl VisRegion {
    pub fn is_empty(&self) -> bool {
        self.wedges.is_empty()
    }

    /// Membership in the union of the closed wedges.
    pub fn contains(&self, y: &Point) -> bool {
        if y == &self.pos {
            return true;
        }
        let q = &self.pos;
        self.wedges
            .iter()
            .any(|(a, b)| orientation(q, a, y) >= 0 && orientation(a, b, y) >= 0 && orientation(b, q, y) >= 0)
    }

    /// Twice the area.
    pub fn area2(&self) -> Rat {
        self.wedges.iter().map(|(a, b)| cross(&(a - &self.pos), &(b - &self.pos))).sum()
    }

    /// Boundary rings: one closed ring per maximal run of adjacent wedges,
    /// each starting at the guard position. Rings meet only at the guard.
    pub fn rings(&self) -> Vec<Vec<Point>> {
        let mut rings: Vec<Vec<Point>> = Vec::new();
        let mut cur: Vec<Point> = Vec::new();
        let mut last_b: Option<&Point> = None;
        for (a, b) in &self.wedges {
            let joined = last_b.is_some_and(|lb| orientation(&self.pos, lb, a) == 0 && crate::geom::dot_sign(&self.pos, lb, &self.pos, a) > 0);
            if !joined && !cur.is_empty() {
                rings.push(std::mem::take(&mut cur));
            }
            if cur.is_empty() {
                cur.push(self.pos.clone());
            }
            if cur.last() != Some(a) {
                cur.push(a.clone());
            }
            cur.push(b.clone());
            last_b = Some(b);
        }
        if !cur.is_empty() {
            rings.push(cur);
        }
        // The last run may continue into the first across the zero angle.
        if rings.len() > 1 {
            let (fa, _) = &self.wedges[0];
            let lb = last_b.expect("nonempty");
            if orientation(&self.pos, lb, fa) == 0 && crate::geom::dot_sign(&self.pos, lb, &self.pos, fa) > 0 {
                let first = rings.remove(0);
                let last = rings.last_mut().expect("nonempty");
                let skip = if last.last() == first.get(1) { 2 } else { 1 };
                last.extend(first.into_iter().skip(skip));
            }
        }
        rings
    }
}

/// Critical directions around `q`: towards every vertex, along both
/// directions of the guard line, and the four axis directions. Sorted by
/// angle, without duplicates.
fn critical_directions(p: &Polygon, g: &HalfGuard) -> Vec<Point> {
    let q = &g.pos;
    let mut dirs: Vec<Point> = p.vertices().iter().filter(|v| *v != q).map(|v| v - q).collect();
    let l = g.hp.line_direction();
    let neg = Point::new(-l.x.clone(), -l.y.clone());
    dirs.push(l);
    dirs.push(neg);
    dirs.extend([pt(1, 0), pt(0, 1), pt(-1, 0), pt(0, -1)]);
    dirs.sort_by(angle_cmp);
    dirs.dedup_by(|a, b| angle_cmp(a, b) == Ordering::Equal);
    dirs
}

/// First edge hit by the open ray `q + t*m`, `t > 0`, with its parameter.
fn first_hit(p: &Polygon, q: &Point, m: &Point) -> Option<(usize, Rat)> {
    let qm = q + m;
    let mut best: Option<(usize, Rat)> = None;
    for (i, (c, d)) in p.edges().enumerate() {
        let oc = orientation(q, &qm, c);
        let od = orientation(q, &qm, d);
        if oc == od {
            continue;
        }
        // The segment straddles the ray's line; keep only forward hits.
        let e = d - c;
        let denom = cross(m, &e);
        let t = cross(&(c - q), &e) / &denom;
        if t <= Rat::from_integer(0.into()) {
            continue;
        }
        if best.as_ref().is_none_or(|(_, bt)| t < *bt) {
            best = Some((i, t));
        }
    }
    best
}

/// Point where the ray from `q` in direction `d` meets the line of edge `i`.
fn ray_line(p: &Polygon, q: &Point, d: &Point, i: usize) -> Point {
    let c = p.vertex(i);
    let e = p.vertex(i + 1) - c;
    let t = cross(&(c - q), &e) / cross(d, &e);
    q + &(d * &t)
}

/// Angular-sweep visibility region of `g` in `P`, clipped to its half-plane.
pub fn visibility_region(p: &Polygon, g: &HalfGuard) -> VisRegion {
    let q = &g.pos;
    let loc = p.locate(q);
    let mut wedges = Vec::new();
    if !loc.in_closed() {
        return VisRegion { pos: q.clone(), wedges };
    }
    let dirs = critical_directions(p, g);
    let k = dirs.len();
    for i in 0..k {
        let d0 = &dirs[i];
        let d1 = &dirs[(i + 1) % k];
        let m = d0 + d1;
        let qm = q + &m;
        if g.hp.dir_sign(q, &qm) <= 0 || !p.dir_strictly_in_cone(loc, q, &qm) {
            continue;
        }
        debug_assert!(cross_sign(&pt(0, 0), d0, &pt(0, 0), d1) > 0);
        let Some((e, _)) = first_hit(p, q, &m) else { continue };
        wedges.push((ray_line(p, q, d0, e), ray_line(p, q, d1, e)));
    }
    VisRegion { pos: q.clone(), wedges }
}
