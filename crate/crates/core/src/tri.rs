//! Ear-clipping triangulation, dual trees and edge-deletion decompositions.

use std::collections::HashMap;

use crate::decomp::Tree;
use crate::geom::{orientation, Polygon, Segment};

/// Triangles of a polygon as counter-clockwise vertex-index triples, with
/// the diagonals used as vertex-index pairs `(i, j)`, `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub triangles: Vec<[usize; 3]>,
    pub diagonals: Vec<(usize, usize)>,
}

/// Weak dual of a triangulation: one node per triangle, one edge per
/// diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualTree {
    pub tree: Tree,
    /// Diagonal (vertex-index pair) of each tree edge.
    pub diagonal: Vec<(usize, usize)>,
}

impl DualTree {
    /// `(triangle, triangle, diagonal)` triples.
    pub fn adjacency(&self) -> Vec<(usize, usize, (usize, usize))> {
        self.tree.edges().iter().zip(&self.diagonal).map(|(&(a, b), &d)| (a, b, d)).collect()
    }
}

/// Triangulates by repeatedly clipping the lowest-index ear.
///
/// An ear tip must be strictly convex in the remaining polygon and its
/// closed triangle may contain no other remaining vertex. Straight vertices
/// are never ear tips, so every triangle has positive area.
pub fn triangulate(p: &Polygon) -> Triangulation {
    let n = p.n();
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut triangles = Vec::with_capacity(n - 2);
    let mut diagonals = Vec::with_capacity(n - 3);
    while remaining.len() > 3 {
        let m = remaining.len();
        let k = (0..m)
            .find(|&k| is_ear(p, &remaining, k))
            .expect("a simple polygon with more than three vertices has an ear");
        let a = remaining[(k + m - 1) % m];
        let v = remaining[k];
        let b = remaining[(k + 1) % m];
        triangles.push([a, v, b]);
        diagonals.push((a.min(b), a.max(b)));
        remaining.remove(k);
    }
    triangles.push([remaining[0], remaining[1], remaining[2]]);
    Triangulation { triangles, diagonals }
}

fn is_ear(p: &Polygon, remaining: &[usize], k: usize) -> bool {
    let m = remaining.len();
    let ia = remaining[(k + m - 1) % m];
    let iv = remaining[k];
    let ib = remaining[(k + 1) % m];
    let (a, v, b) = (p.vertex(ia), p.vertex(iv), p.vertex(ib));
    if orientation(a, v, b) <= 0 {
        return false;
    }
    remaining.iter().all(|&j| {
        if j == ia || j == iv || j == ib {
            return true;
        }
        let q = p.vertex(j);
        !(orientation(a, v, q) >= 0 && orientation(v, b, q) >= 0 && orientation(b, a, q) >= 0)
    })
}

/// Builds the dual tree: triangles sharing a diagonal are adjacent.
pub fn dual_tree(t: &Triangulation) -> DualTree {
    let mut by_diag: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ti, tri) in t.triangles.iter().enumerate() {
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            let key = (a.min(b), a.max(b));
            if t.diagonals.contains(&key) {
                by_diag.entry(key).or_default().push(ti);
            }
        }
    }
    let mut edges = Vec::with_capacity(t.diagonals.len());
    let mut diagonal = Vec::with_capacity(t.diagonals.len());
    for d in &t.diagonals {
        let ts = &by_diag[d];
        assert_eq!(ts.len(), 2, "each diagonal borders two triangles");
        edges.push((ts[0], ts[1]));
        diagonal.push(*d);
    }
    let tree = Tree::new(t.triangles.len(), edges).expect("dual of a triangulation is a tree");
    DualTree { tree, diagonal }
}

/// One polygon of an edge-deletion decomposition.
#[derive(Clone, Debug)]
pub struct Piece {
    pub polygon: Polygon,
    /// Indices into the parent polygon of this piece's vertices, in order.
    pub vertex_ids: Vec<usize>,
    /// Triangles (dual-tree nodes) making up the piece.
    pub triangles: Vec<usize>,
    /// Deleted tree edges bordering this piece, with their diagonals.
    pub cuts: Vec<(usize, Segment)>,
}

/// Splits `p` along the diagonals of the deleted dual-tree edges `e`,
/// giving one polygon per forest component. Component order follows the
/// smallest triangle index.
pub fn decomposition_from_edges(p: &Polygon, t: &Triangulation, g: &DualTree, e: &[usize]) -> Vec<Piece> {
    g.tree
        .components(e)
        .into_iter()
        .map(|nodes| piece_of(p, t, g, e, nodes))
        .collect()
}

pub(crate) fn piece_of(p: &Polygon, t: &Triangulation, g: &DualTree, e: &[usize], nodes: Vec<usize>) -> Piece {
    let mut ids: Vec<usize> = nodes.iter().flat_map(|&ti| t.triangles[ti]).collect();
    ids.sort();
    ids.dedup();
    let polygon = Polygon::from_trusted(ids.iter().map(|&i| p.vertex(i).clone()).collect());
    let cuts = e
        .iter()
        .filter(|&&k| {
            let (a, b) = g.tree.edge(k);
            nodes.contains(&a) || nodes.contains(&b)
        })
        .map(|&k| {
            let (i, j) = g.diagonal[k];
            (k, Segment::new(p.vertex(i).clone(), p.vertex(j).clone()))
        })
        .collect();
    Piece { polygon, vertex_ids: ids, triangles: nodes, cuts }
}
