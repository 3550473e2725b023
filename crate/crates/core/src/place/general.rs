//! Guard sets of size `floor(n/2) - 1` for simple polygons.

use super::{attach_entire, check_aligned_pair, check_sides, merge_aligned, require_entire};
use super::{GuardSet, PlaceError, Provenance, Rule};
use crate::decomp::{odd_odd_diagonal, pent_hub};
use crate::geom::{attach_triangle, orientation, split_at_cut, Cut, Polygon, Segment};
use crate::guard::{entire_at, is_aligned};
use crate::smallcase::{convex_guard, pent_guard, quad_guard};

/// `floor(n/2) - 1` guards for `p` (one guard for a triangle).
pub fn place_any(p: &Polygon) -> Result<GuardSet, PlaceError> {
    match p.n() {
        3 => {
            let (a, b) = (p.vertex(0), p.vertex(1));
            let g = convex_guard(p, &a.midpoint(b))?;
            Ok(GuardSet::single(g, Provenance { rule: Rule::Triangle, depth: 0, n: 3 }))
        }
        n if n % 2 == 0 => place_even_aligned(p, 0),
        _ => place_odd(p),
    }
}

/// `(n - 2) / 2` guards for an even polygon, one of them aligned to side
/// `s` (from vertex `s` to vertex `s + 1`).
pub fn place_even_aligned(p: &Polygon, s: usize) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    if n < 4 || n % 2 != 0 {
        return Err(PlaceError::PreconditionViolated(format!("polygon size {n} must be even and at least 4")));
    }
    if s >= n {
        return Err(PlaceError::PreconditionViolated(format!("side {s} out of range for {n} sides")));
    }
    even(p, &p.edge(s), 0)
}

/// `(n - 3) / 2` guards for an odd polygon with at least five sides.
pub fn place_odd(p: &Polygon) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    if n < 5 || n % 2 == 0 {
        return Err(PlaceError::PreconditionViolated(format!("polygon size {n} must be odd and at least 5")));
    }
    odd(p, 0)
}

fn tag(rule: Rule, depth: usize, p: &Polygon) -> Provenance {
    Provenance { rule, depth, n: p.n() }
}

fn even(p: &Polygon, s: &Segment, depth: usize) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    let i = p
        .find_edge(s)
        .ok_or_else(|| PlaceError::InvariantViolated(format!("{s:?} is not a side of the piece")))?;
    let set = if n == 4 {
        GuardSet::single(quad_guard(p, i)?, tag(Rule::Quad, depth, p))
    } else {
        let (a, b) = (i, p.next(i));
        if !p.is_reflex(a) && !p.is_reflex(b) {
            convex_endpoints(p, i, s, depth)?
        } else if p.is_reflex(a) {
            reflex_endpoint(p, b, a, s, depth)?
        } else {
            reflex_endpoint(p, a, b, s, depth)?
        }
    };
    if set.aligned_to(p, s).is_none() {
        return Err(PlaceError::InvariantViolated(format!("no guard aligned to {s:?} in a {n}-gon")));
    }
    Ok(set)
}

/// Both endpoints of side `i` are convex: guard at one of them above an
/// odd-odd diagonal.
fn convex_endpoints(p: &Polygon, i: usize, s: &Segment, depth: usize) -> Result<GuardSet, PlaceError> {
    let (e, w) = odd_odd_diagonal(p, i)?;
    let g = entire_at(p, p.vertex(e), Some(s))?;
    let split = split_at_cut(p, &Cut::diagonal(p, e, w)?)?;
    check_sides("odd-odd diagonal", split.p1.n() + split.p2.n(), p.n() + 2)?;
    let mut set = GuardSet::new();
    for piece in split.pieces() {
        require_entire(piece, &g)?;
        set.extend(odd(piece, depth + 1)?);
    }
    attach_entire(p, set, g, tag(Rule::DiagonalEndpoint, depth, p))
}

/// `v` is a reflex endpoint of the aligned side `uv`; cut along its
/// extension beyond `v`.
fn reflex_endpoint(p: &Polygon, u: usize, v: usize, s: &Segment, depth: usize) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    let cut = Cut::uv(p, u, v)?;
    let split = split_at_cut(p, &cut)?;
    let (pu, pv, pb) = (p.vertex(u), p.vertex(v), &cut.seg.b);
    // `a` carries the side u..b through v, `b` carries the side v..b.
    let (pa, pbb) = if split.p1.find_vertex(pu).is_some() { (&split.p1, &split.p2) } else { (&split.p2, &split.p1) };
    let (na, nb) = (pa.n(), pbb.n());
    let vb = Segment::new(pv.clone(), pb.clone());
    let ub = Segment::new(pu.clone(), pb.clone());
    if !cut.hits_vertex() {
        check_sides("edge-hit cut", na + nb, n + 2)?;
        if na % 2 == 1 {
            let g = entire_at(p, pb, None)?;
            if !is_aligned(p, &g, s) {
                return Err(PlaceError::InvariantViolated(format!("guard at {pb} is not aligned to {s:?}")));
            }
            let mut set = GuardSet::new();
            for piece in [pa, pbb] {
                require_entire(piece, &g)?;
                set.extend(odd(piece, depth + 1)?);
            }
            return attach_entire(p, set, g, tag(Rule::CutHit, depth, p));
        }
        let ga = even(pa, &ub, depth + 1)?;
        let gb = even(pbb, &vb, depth + 1)?;
        return merge_aligned(p, pa, ga, pbb, gb, &vb);
    }
    check_sides("vertex-hit cut", na + nb, n + 1)?;
    let t = tag(Rule::ReflexVertex, depth, p);
    let set = if na % 2 == 1 {
        // v lies inside side u..b of the odd piece.
        let g = entire_at(pa, pv, None)?;
        let odd_side = attach_entire(pa, odd(pa, depth + 1)?, g, t)?;
        let even_side = even(pbb, &vb, depth + 1)?;
        merge_aligned(p, pa, odd_side, pbb, even_side, &vb)?
    } else {
        // v is a convex vertex of the odd piece.
        let g = entire_at(pbb, pv, Some(&ub))?;
        let odd_side = attach_entire(pbb, odd(pbb, depth + 1)?, g, t)?;
        let even_side = even(pa, &ub, depth + 1)?;
        merge_aligned(p, pbb, odd_side, pa, even_side, &vb)?
    };
    Ok(set)
}

fn odd(p: &Polygon, depth: usize) -> Result<GuardSet, PlaceError> {
    let n = p.n();
    match n {
        3 => return Ok(GuardSet::new()),
        5 => return Ok(GuardSet::single(pent_guard(p)?, tag(Rule::Pentagon, depth, p))),
        _ => {}
    }
    let hub = pent_hub(p)?;
    let k = hub.k();
    let total: usize = hub.attachments.iter().map(|(q, _)| q.n()).sum();
    check_sides("pentagon hub", total + 5, n + 2 * k)?;
    let g = pent_guard(&hub.hub)?;
    let single = GuardSet::single(g.clone(), tag(Rule::Pentagon, depth, p));
    let mut set = GuardSet::new();
    for (piece, s) in &hub.attachments {
        if orientation(&s.a, &s.b, &g.pos) != 0 {
            let widened = attach_triangle(piece, s, &g.pos)?;
            require_entire(&widened, &g)?;
            set.extend(odd(&widened, depth + 1)?);
        } else {
            let sub = even(piece, s, depth + 1)?;
            check_aligned_pair(p, &hub.hub, &single, piece, &sub, s)?;
            set.extend(sub);
        }
    }
    set.extend(single);
    Ok(set)
}
