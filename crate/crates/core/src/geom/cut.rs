//! Cuts and the partitions they induce.

use super::point::{Point, Segment};
use super::polygon::{validate_polygon_with, Location, Polygon};
use super::predicates::orientation;
use super::ray::{ray_first_hit, Hit};
use super::GeomError;

/// What produced a cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// Both endpoints are vertices; the cut starts at vertex `from`.
    Diagonal { from: usize },
    /// Extension of edge `u -> v` beyond the reflex vertex `v`.
    UvCut { u: usize, v: usize },
}

/// A segment whose relative interior lies strictly inside the polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    pub seg: Segment,
    pub kind: CutKind,
    /// Far endpoint of the cut.
    pub hit: Hit,
}

impl Cut {
    pub fn diagonal(p: &Polygon, i: usize, j: usize) -> Result<Cut, GeomError> {
        if !p.is_diagonal(i, j) {
            return Err(GeomError::InvalidCut);
        }
        Ok(Cut {
            seg: Segment::new(p.vertex(i).clone(), p.vertex(j).clone()),
            kind: CutKind::Diagonal { from: i },
            hit: Hit::AtVertex(j),
        })
    }

    /// The `uv`-cut from reflex vertex `v` along the extension of `u -> v`.
    pub fn uv(p: &Polygon, u: usize, v: usize) -> Result<Cut, GeomError> {
        let r = ray_first_hit(p, u, v)?;
        Ok(Cut { seg: Segment::new(p.vertex(v).clone(), r.b), kind: CutKind::UvCut { u, v }, hit: r.hit })
    }

    fn start(&self) -> usize {
        match self.kind {
            CutKind::Diagonal { from } => from,
            CutKind::UvCut { v, .. } => v,
        }
    }

    /// Number of polygon vertices the far endpoint coincides with (0 or 1).
    pub fn hits_vertex(&self) -> bool {
        matches!(self.hit, Hit::AtVertex(_))
    }
}

/// The two pieces of a cut-induced partition.
#[derive(Clone, Debug)]
pub struct Split {
    /// Piece containing the vertex that follows the cut's start vertex.
    pub p1: Polygon,
    pub p2: Polygon,
}

impl Split {
    pub fn pieces(&self) -> [&Polygon; 2] {
        [&self.p1, &self.p2]
    }
}

/// Splits `p` along `c`.
///
/// For a `uv`-cut the vertex `v` becomes straight in the piece containing
/// `u` and is removed there, so the side counts obey `n1 + n2 = n + 1` when
/// the cut ends at a vertex and `n + 2` otherwise. Diagonals give `n + 2`.
/// Straight vertices created at the far endpoint are kept.
pub fn split_at_cut(p: &Polygon, c: &Cut) -> Result<Split, GeomError> {
    if !p.is_cut(&c.seg.a, &c.seg.b) {
        return Err(GeomError::InvalidCut);
    }
    let s = c.start();
    if p.vertex(s) != &c.seg.a {
        return Err(GeomError::InvalidCut);
    }
    let start = Location::OnVertex(s);
    let end = c.hit.location();
    let chain1 = boundary_chain(p, start, &c.seg.a, end, &c.seg.b);
    let chain2 = boundary_chain(p, end, &c.seg.b, start, &c.seg.a);
    let mut p1 = validate_polygon_with(chain1, true).map_err(|_| GeomError::InvalidCut)?;
    let mut p2 = validate_polygon_with(chain2, true).map_err(|_| GeomError::InvalidCut)?;
    if let CutKind::UvCut { .. } = c.kind {
        let v = &c.seg.a;
        p1 = p1.drop_straight_at(&[v]);
        p2 = p2.drop_straight_at(&[v]);
    }
    Ok(Split { p1, p2 })
}

/// Boundary points walked counter-clockwise from `from` to `to`, inclusive.
fn boundary_chain(p: &Polygon, from: Location, from_pt: &Point, to: Location, to_pt: &Point) -> Vec<Point> {
    let n = p.n();
    let first = match from {
        Location::OnVertex(i) | Location::OnEdge(i) => (i + 1) % n,
        _ => unreachable!("cut endpoints are on the boundary"),
    };
    let last = match to {
        Location::OnVertex(j) => j,
        Location::OnEdge(j) => (j + 1) % n,
        _ => unreachable!("cut endpoints are on the boundary"),
    };
    let mut out = vec![from_pt.clone()];
    let mut k = first;
    while k != last {
        out.push(p.vertex(k).clone());
        k = (k + 1) % n;
    }
    out.push(to_pt.clone());
    out
}

/// Replaces side `shared` of `p` by the two sides through `apex`.
///
/// The triangle must lie outside `p` and touch it only along `shared`.
/// Straight vertices at the endpoints of `shared` are kept.
pub fn attach_triangle(p: &Polygon, shared: &Segment, apex: &Point) -> Result<Polygon, GeomError> {
    let i = p.find_edge(shared).ok_or(GeomError::NotASide)?;
    let a = p.vertex(i);
    let b = p.vertex(i + 1);
    match orientation(a, b, apex) {
        0 => return Err(GeomError::DegenerateTriangle),
        1 => return Err(GeomError::Overlap),
        _ => {}
    }
    let mut vs: Vec<Point> = p.vertices().to_vec();
    vs.insert(i + 1, apex.clone());
    validate_polygon_with(vs, true).map_err(|_| GeomError::Overlap)
}
