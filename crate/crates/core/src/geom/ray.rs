//! Ray shooting from a reflex vertex along the extension of an incident edge.

use num_traits::{One, Signed, Zero};

use super::point::{cross, Point, Rat};
use super::polygon::{Location, Polygon, VertexClass};
use super::GeomError;

/// Where a ray or cut meets the boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Hit {
    AtVertex(usize),
    /// Relative interior of edge `i`.
    OnEdgeInterior(usize),
}

impl Hit {
    pub fn location(self) -> Location {
        match self {
            Hit::AtVertex(i) => Location::OnVertex(i),
            Hit::OnEdgeInterior(i) => Location::OnEdge(i),
        }
    }
}

/// Result of [`ray_first_hit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RayHit {
    pub b: Point,
    pub hit: Hit,
}

/// Shoots the ray from vertex `v` in direction `v - u`, where `u` is a
/// neighbor of `v`, and returns the first boundary point beyond `v`.
pub fn ray_first_hit(p: &Polygon, u: usize, v: usize) -> Result<RayHit, GeomError> {
    let n = p.n();
    if u >= n || v >= n || (p.next(u) != v && p.prev(u) != v) {
        return Err(GeomError::NotAdjacent(u, v));
    }
    if p.classify_vertex(v) != VertexClass::Reflex {
        return Err(GeomError::NotReflex(v));
    }
    let pu = p.vertex(u);
    let pv = p.vertex(v);
    let beyond = pv + &(pv - pu);
    if !p.dir_strictly_in_cone(Location::OnVertex(v), pv, &beyond) {
        return Err(GeomError::DegenerateRay { u, v });
    }
    let d = pv - pu;
    let mut best: Option<Rat> = None;
    for i in 0..n {
        let a = p.vertex(i);
        let b = p.vertex(i + 1);
        let e = b - a;
        let denom = cross(&d, &e);
        let av = a - pv;
        let t = if denom.is_zero() {
            if !cross(&av, &d).is_zero() {
                continue;
            }
            // Edge on the ray's line: its nearest positive endpoint.
            let dd = &d.x * &d.x + &d.y * &d.y;
            let ta = (&av.x * &d.x + &av.y * &d.y) / &dd;
            let bv = b - pv;
            let tb = (&bv.x * &d.x + &bv.y * &d.y) / &dd;
            match (ta.is_positive(), tb.is_positive()) {
                (true, true) => ta.min(tb),
                (true, false) => ta,
                (false, true) => tb,
                _ => continue,
            }
        } else {
            let t = cross(&av, &e) / &denom;
            let s = cross(&av, &d) / &denom;
            if !t.is_positive() || s.is_negative() || s > Rat::one() {
                continue;
            }
            t
        };
        if best.as_ref().is_none_or(|bt| t < *bt) {
            best = Some(t);
        }
    }
    let t = best.ok_or(GeomError::DegenerateRay { u, v })?;
    let b = pv + &(&d * &t);
    let hit = match p.locate(&b) {
        Location::OnVertex(i) => Hit::AtVertex(i),
        Location::OnEdge(i) => Hit::OnEdgeInterior(i),
        _ => return Err(GeomError::DegenerateRay { u, v }),
    };
    Ok(RayHit { b, hit })
}
