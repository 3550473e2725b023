//! Guard sets of size `n/2 - 2` for orthogonal polygons.

use super::{check_sides, merge_aligned, require_entire, GuardSet, PlaceError, Provenance, Rule};
use crate::geom::{rat, split_at_cut, Cut, GeomError, Hit, Polygon, Segment};
use crate::guard::entire_at;

/// `n/2 - 2` guards for an orthogonal polygon with at least six sides.
pub fn place_orthogonal(p: &Polygon) -> Result<GuardSet, PlaceError> {
    if !p.is_orthogonal() {
        return Err(PlaceError::NotOrthogonal);
    }
    if p.n() < 6 {
        return Err(PlaceError::PreconditionViolated(format!("orthogonal polygon size {} is below 6", p.n())));
    }
    orth(p, 0)
}

fn orth(p: &Polygon, depth: usize) -> Result<GuardSet, PlaceError> {
    if p.n() == 4 {
        return Ok(GuardSet::new());
    }
    let mut last = None;
    for v in p.reflex_vertices() {
        for u in [p.next(v), p.prev(v)] {
            match Cut::uv(p, u, v) {
                Ok(cut) => match cut.hit {
                    Hit::AtVertex(b) if !p.is_reflex(b) => last = Some(GeomError::DegenerateRay { u, v }),
                    _ => return split_on(p, &cut, depth),
                },
                Err(e @ GeomError::DegenerateRay { .. }) => last = Some(e),
                Err(e) => return Err(e.into()),
            }
        }
    }
    Err(last.map_or_else(
        || PlaceError::InvariantViolated("orthogonal polygon with more than four sides has no reflex vertex".into()),
        PlaceError::from,
    ))
}

fn split_on(p: &Polygon, cut: &Cut, depth: usize) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    let split = split_at_cut(p, cut)?;
    let p1 = split.p1.without_straight();
    let p2 = split.p2.without_straight();
    if !p1.is_orthogonal() || !p2.is_orthogonal() {
        return Err(PlaceError::InvariantViolated("cut produced a non-orthogonal piece".into()));
    }
    let tag = |rule| Provenance { rule, depth, n };
    let (v, b) = (&cut.seg.a, &cut.seg.b);
    if !cut.hits_vertex() {
        check_sides("orthogonal edge-hit cut", p1.n() + p2.n(), n + 2)?;
        let g = entire_at(p, b, None)?;
        let mut set = GuardSet::new();
        for piece in [&p1, &p2] {
            require_entire(piece, &g)?;
            set.extend(orth(piece, depth + 1)?);
        }
        set.push(g, tag(Rule::OrthCutHit));
        return Ok(set);
    }
    check_sides("orthogonal vertex-hit cut", p1.n() + p2.n(), n)?;
    // One guard per piece inside the shared cut, each facing its own piece
    // and kept clear of the guards the piece already has.
    let mut sides = Vec::with_capacity(2);
    for (piece, first) in [(&p1, 1), (&p2, 2)] {
        let mut set = orth(piece, depth + 1)?;
        let pos = (3..)
            .flat_map(|den| (1..den).map(move |num| rat(num, den)))
            .map(|t| v.lerp(b, &t))
            .skip(first - 1)
            .find(|q| set.guards.iter().all(|h| &h.pos != q))
            .expect("finitely many guards");
        let g = entire_at(piece, &pos, None)?;
        set.push(g, tag(Rule::OrthSharedCut));
        sides.push(set);
    }
    let s2 = sides.pop().expect("two pieces");
    let s1 = sides.pop().expect("two pieces");
    merge_aligned(p, &p1, s1, &p2, s2, &Segment::new(v.clone(), b.clone()))
}
