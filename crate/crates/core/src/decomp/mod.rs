//! Tree edge selections and the polygon decompositions they induce.

mod tree;

pub use tree::{odd_odd_edge, pent_hub_edges, quad_pent_edge, HubEdges, SmallCut, Tree};

use thiserror::Error;

use crate::geom::{Polygon, Segment};
use crate::tri::{dual_tree, piece_of, triangulate};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DecompError {
    #[error("edge list does not form a tree")]
    NotATree,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// A diagonal through an endpoint of side `s` that splits an even polygon
/// into two odd ones. Returned as `(endpoint of s, other vertex)`.
pub fn odd_odd_diagonal(p: &Polygon, s: usize) -> Result<(usize, usize), DecompError> {
    let n = p.n();
    if n % 2 != 0 || n < 4 {
        return Err(DecompError::PreconditionViolated(format!("polygon size {n} must be even and at least 4")));
    }
    if s >= n {
        return Err(DecompError::PreconditionViolated("side out of range".into()));
    }
    let t = triangulate(p);
    let g = dual_tree(&t);
    let (u, v) = (s, p.next(s));
    let x = t
        .triangles
        .iter()
        .position(|tri| tri.contains(&u) && tri.contains(&v))
        .expect("every side lies in one triangle");
    let e = odd_odd_edge(&g.tree, x)?;
    let (i, j) = g.diagonal[e];
    Ok(if i == u || i == v { (i, j) } else { (j, i) })
}

/// A diagonal cutting off a quadrilateral or pentagon `p0`.
#[derive(Clone, Debug)]
pub struct QuadPentSplit {
    pub diagonal: (usize, usize),
    pub p0: Polygon,
    pub p1: Polygon,
}

pub fn quad_pent_diagonal(p: &Polygon) -> Result<QuadPentSplit, DecompError> {
    if p.n() < 5 {
        return Err(DecompError::PreconditionViolated(format!("polygon size {} is below 5", p.n())));
    }
    let t = triangulate(p);
    let g = dual_tree(&t);
    let cut = quad_pent_edge(&g.tree)?;
    let rest: Vec<usize> = (0..g.tree.n()).filter(|v| !cut.small.contains(v)).collect();
    let e = [cut.edge];
    Ok(QuadPentSplit {
        diagonal: g.diagonal[cut.edge],
        p0: piece_of(p, &t, &g, &e, cut.small).polygon,
        p1: piece_of(p, &t, &g, &e, rest).polygon,
    })
}

/// A pentagon with even-sided polygons attached along its diagonals.
#[derive(Clone, Debug)]
pub struct PentHub {
    pub hub: Polygon,
    /// Each attachment with the diagonal it shares with the hub.
    pub attachments: Vec<(Polygon, Segment)>,
}

impl PentHub {
    pub fn k(&self) -> usize {
        self.attachments.len()
    }
}

/// Decomposes an odd polygon into a pentagon hub and at most five even
/// attachments.
pub fn pent_hub(p: &Polygon) -> Result<PentHub, DecompError> {
    let n = p.n();
    if n < 5 || n % 2 == 0 {
        return Err(DecompError::PreconditionViolated(format!("polygon size {n} must be odd and at least 5")));
    }
    let t = triangulate(p);
    let g = dual_tree(&t);
    let h = pent_hub_edges(&g.tree)?;
    let hub = piece_of(p, &t, &g, &h.edges, h.hub.clone()).polygon;
    let attachments = h
        .parts
        .iter()
        .zip(&h.edges)
        .map(|(nodes, &e)| {
            let piece = piece_of(p, &t, &g, &h.edges, nodes.clone());
            let (i, j) = g.diagonal[e];
            (piece.polygon, Segment::new(p.vertex(i).clone(), p.vertex(j).clone()))
        })
        .collect();
    Ok(PentHub { hub, attachments })
}
