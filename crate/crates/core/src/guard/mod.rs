//! Half-guards: visibility, entire boundary guards, alignment and
//! visibility regions.

mod fast;
mod halfplane;
mod visibility;

pub(crate) use fast::FastPolygon;
pub use halfplane::HalfPlane;
pub use visibility::{visibility_region, VisRegion};

use thiserror::Error;

use crate::geom::{orientation, Location, Point, Polygon, Segment, VertexClass};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GuardError {
    #[error("point {0} is outside the polygon")]
    PointOutsidePolygon(Point),
    #[error("point {0} is not on the polygon boundary")]
    NotOnBoundary(Point),
    #[error("vertex {0} is reflex")]
    ReflexVertex(Point),
    #[error("the interior cone does not fit on either side of the preferred line")]
    ConeNotContained,
    #[error("guard position is not on the half-plane boundary")]
    NotOnLine,
}

/// A guard at `pos` that sees into the closed half-plane `hp`, with `pos`
/// on the boundary line of `hp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfGuard {
    pub pos: Point,
    pub hp: HalfPlane,
}

impl HalfGuard {
    pub fn new(pos: Point, hp: HalfPlane) -> Result<HalfGuard, GuardError> {
        if !hp.on_line(&pos) {
            return Err(GuardError::NotOnLine);
        }
        Ok(HalfGuard { pos, hp })
    }

    /// Guard at `pos` facing the left side of the line through `pos` with
    /// direction `to - from`.
    pub fn facing_left(pos: Point, from: &Point, to: &Point) -> HalfGuard {
        let ahead = &pos + &(to - from);
        let hp = HalfPlane::left_of(&pos, &ahead);
        HalfGuard { pos, hp }
    }
}

/// True iff the segment from the guard to `y` lies in `P` and in the
/// guard's half-plane.
pub fn sees(p: &Polygon, g: &HalfGuard, y: &Point) -> Result<bool, GuardError> {
    if !p.contains(y) {
        return Err(GuardError::PointOutsidePolygon(y.clone()));
    }
    Ok(sees_unchecked(p, g, y))
}

/// [`sees`] without the membership precondition; points outside `P` are
/// simply not seen.
pub fn sees_unchecked(p: &Polygon, g: &HalfGuard, y: &Point) -> bool {
    g.hp.contains(y) && p.segment_in_polygon(&g.pos, y)
}

fn rot90(from: &Point, to: &Point) -> Point {
    let d = to - from;
    Point::new(-d.y, d.x)
}

/// The entire boundary half-guard at `pos`.
///
/// On an edge interior the half-plane is bounded by the edge line. At a
/// convex vertex it is bounded by `preferred_line` when given, otherwise by
/// the parallel to the chord joining the two neighbors. At a straight
/// vertex it is bounded by the line through both incident edges.
pub fn entire_at(p: &Polygon, pos: &Point, preferred_line: Option<&Segment>) -> Result<HalfGuard, GuardError> {
    match p.locate(pos) {
        Location::Inside | Location::Outside => Err(GuardError::NotOnBoundary(pos.clone())),
        Location::OnEdge(i) => {
            Ok(HalfGuard::facing_left(pos.clone(), p.vertex(i), p.vertex(p.next(i))))
        }
        Location::OnVertex(i) => {
            let prev = p.vertex(p.prev(i));
            let next = p.vertex(p.next(i));
            match p.classify_vertex(i) {
                VertexClass::Reflex => Err(GuardError::ReflexVertex(pos.clone())),
                VertexClass::Straight => Ok(HalfGuard::facing_left(pos.clone(), prev, next)),
                VertexClass::Convex => match preferred_line {
                    Some(s) => {
                        if orientation(&s.a, &s.b, pos) != 0 {
                            return Err(GuardError::ConeNotContained);
                        }
                        let g = HalfGuard::facing_left(pos.clone(), &s.a, &s.b);
                        let h = HalfGuard { pos: pos.clone(), hp: g.hp.flipped() };
                        [g, h]
                            .into_iter()
                            .find(|c| c.hp.contains(prev) && c.hp.contains(next))
                            .ok_or(GuardError::ConeNotContained)
                    }
                    None => {
                        let g = HalfGuard::facing_left(pos.clone(), prev, next);
                        if g.hp.contains(next) {
                            Ok(g)
                        } else {
                            Ok(HalfGuard { pos: pos.clone(), hp: g.hp.flipped() })
                        }
                    }
                },
            }
        }
    }
}

/// True iff the interior cone of `P` at the guard position lies in the
/// guard's half-plane.
pub fn is_entire(p: &Polygon, g: &HalfGuard) -> Result<bool, GuardError> {
    let (r1, r2, straight) = match p.locate(&g.pos) {
        Location::Inside | Location::Outside => return Err(GuardError::NotOnBoundary(g.pos.clone())),
        Location::OnEdge(i) => (p.vertex(p.next(i)), p.vertex(i), true),
        Location::OnVertex(i) => match p.classify_vertex(i) {
            VertexClass::Reflex => return Ok(false),
            c => (p.vertex(p.next(i)), p.vertex(p.prev(i)), c == VertexClass::Straight),
        },
    };
    let mut ok = g.hp.contains(r1) && g.hp.contains(r2);
    if straight {
        ok = ok && g.hp.contains(&(&g.pos + &rot90(&g.pos, r1)));
    }
    Ok(ok)
}

/// True iff the guard is collinear with `t`, sees both endpoints of `t`,
/// and, when standing on `t`, has its boundary line along `t`.
pub fn is_aligned(p: &Polygon, g: &HalfGuard, t: &Segment) -> bool {
    if orientation(&t.a, &t.b, &g.pos) != 0 {
        return false;
    }
    if crate::geom::on_segment(&g.pos, &t.a, &t.b) && !(g.hp.on_line(&t.a) && g.hp.on_line(&t.b)) {
        return false;
    }
    sees_unchecked(p, g, &t.a) && sees_unchecked(p, g, &t.b)
}
