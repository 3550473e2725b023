//! Single-guard placements for convex polygons, quadrilaterals and
//! pentagons.

use thiserror::Error;

use crate::geom::{ray_first_hit, split_at_cut, Cut, CutKind, GeomError, Hit, Point, Polygon, Segment};
use crate::guard::{entire_at, GuardError, HalfGuard};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SmallCaseError {
    #[error("expected {expected} vertices, got {got}")]
    InvalidSize { expected: usize, got: usize },
    #[error("polygon is not convex")]
    NotConvex,
    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),
    #[error(transparent)]
    Guard(#[from] GuardError),
}

fn check_size(p: &Polygon, n: usize) -> Result<(), SmallCaseError> {
    if p.n() != n {
        return Err(SmallCaseError::InvalidSize { expected: n, got: p.n() });
    }
    Ok(())
}

fn degenerate(what: &str, e: GeomError) -> SmallCaseError {
    SmallCaseError::DegenerateConfiguration(format!("{what}: {e}"))
}

/// The entire boundary half-guard at `pos`, which alone monitors the
/// convex polygon `p`.
pub fn convex_guard(p: &Polygon, pos: &Point) -> Result<HalfGuard, SmallCaseError> {
    if !p.is_convex() {
        return Err(SmallCaseError::NotConvex);
    }
    Ok(entire_at(p, pos, None)?)
}

fn side_midpoint_guard(p: &Polygon, i: usize) -> HalfGuard {
    let (a, b) = (p.vertex(i), p.vertex(i + 1));
    HalfGuard::facing_left(a.midpoint(b), a, b)
}

/// An entire guard that monitors the quadrilateral `q` and is aligned to
/// its side `s` (from vertex `s` to vertex `s + 1`).
pub fn quad_guard(q: &Polygon, s: usize) -> Result<HalfGuard, SmallCaseError> {
    check_size(q, 4)?;
    let s = s % 4;
    let reflex = q.reflex_vertices();
    let Some(&r) = reflex.first() else {
        return Ok(side_midpoint_guard(q, s));
    };
    let (a, b) = (s, (s + 1) % 4);
    if r == a || r == b {
        let w = if r == a { b } else { a };
        let hit = ray_first_hit(q, w, r).map_err(|e| degenerate("quad ray", e))?;
        return Ok(entire_at(q, &hit.b, None)?);
    }
    // The reflex vertex is adjacent to exactly one endpoint of s.
    let far = if q.next(b) == r { a } else { b };
    let side = Segment::new(q.vertex(a).clone(), q.vertex(b).clone());
    Ok(entire_at(q, q.vertex(far), Some(&side))?)
}

/// An entire guard on the relative interior of a side of the pentagon `p`
/// that monitors `p` alone.
pub fn pent_guard(p: &Polygon) -> Result<HalfGuard, SmallCaseError> {
    check_size(p, 5)?;
    let reflex = p.reflex_vertices();
    match reflex.len() {
        0 => Ok(side_midpoint_guard(p, 0)),
        1 => one_reflex(p, reflex[0]),
        2 => {
            let (r0, r1) = (reflex[0], reflex[1]);
            let adjacent = p.next(r0) == r1 || p.next(r1) == r0;
            let (u, v) = if adjacent {
                // u, v, w, x, y with v, w reflex: shoot u -> v.
                let v = if p.next(r0) == r1 { r0 } else { r1 };
                (p.prev(v), v)
            } else {
                // u, v, w, x, y with u, w reflex: shoot v -> w.
                let v = if p.next(r0) == p.prev(r1) { p.next(r0) } else { p.next(r1) };
                (v, p.next(v))
            };
            let hit = ray_first_hit(p, u, v).map_err(|e| degenerate("pentagon ray", e))?;
            let x = if adjacent { p.next(p.next(v)) } else { p.next(v) };
            if hit.hit != Hit::OnEdgeInterior(x) {
                return Err(SmallCaseError::DegenerateConfiguration(format!(
                    "ray from vertex {u} through {v} lands at {} instead of inside side {x}",
                    hit.b
                )));
            }
            Ok(entire_at(p, &hit.b, None)?)
        }
        k => Err(SmallCaseError::DegenerateConfiguration(format!("pentagon with {k} reflex vertices"))),
    }
}

fn one_reflex(p: &Polygon, v: usize) -> Result<HalfGuard, SmallCaseError> {
    let mut vertex_hits = Vec::with_capacity(2);
    for u in [p.prev(v), p.next(v)] {
        let hit = ray_first_hit(p, u, v).map_err(|e| degenerate("pentagon ray", e))?;
        match hit.hit {
            Hit::OnEdgeInterior(_) => return Ok(entire_at(p, &hit.b, None)?),
            Hit::AtVertex(i) => vertex_hits.push(i),
        }
    }
    // Both extensions end at vertices x and y: cut from v to the midpoint of
    // side xy, which splits the reflex angle into two convex angles.
    let (x, y) = (vertex_hits[0], vertex_hits[1]);
    let side = if p.next(x) == y {
        x
    } else if p.next(y) == x {
        y
    } else {
        return Err(SmallCaseError::DegenerateConfiguration(format!(
            "extension rays end at non-adjacent vertices {x} and {y}"
        )));
    };
    let b = p.vertex(x).midpoint(p.vertex(y));
    let cut = Cut {
        seg: Segment::new(p.vertex(v).clone(), b.clone()),
        kind: CutKind::Diagonal { from: v },
        hit: Hit::OnEdgeInterior(side),
    };
    let split = split_at_cut(p, &cut).map_err(|e| degenerate("midpoint cut", e))?;
    if !split.p1.is_convex() || !split.p2.is_convex() {
        return Err(SmallCaseError::DegenerateConfiguration("midpoint cut leaves a reflex angle".into()));
    }
    Ok(entire_at(p, &b, None)?)
}
