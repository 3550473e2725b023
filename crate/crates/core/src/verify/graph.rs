//! Mutual visibility graph of a guard set.

use std::collections::VecDeque;

use crate::geom::Polygon;
use crate::guard::{sees_unchecked, HalfGuard};

/// Graph on guard indices with an edge wherever two guards see each other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VisibilityGraph {
    pub nodes: usize,
    /// Pairs `(i, j)` with `i < j`.
    pub edges: Vec<(usize, usize)>,
}

pub fn mutual_visibility_graph(p: &Polygon, guards: &[HalfGuard]) -> VisibilityGraph {
    let k = guards.len();
    let mut edges = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let ij = sees_unchecked(p, &guards[i], &guards[j].pos);
            let ji = sees_unchecked(p, &guards[j], &guards[i].pos);
            if ij && ji {
                edges.push((i, j));
            }
        }
    }
    VisibilityGraph { nodes: k, edges }
}

/// Connectivity over all nodes; the empty graph and a single node count as
/// connected.
pub fn is_connected(v: &VisibilityGraph) -> bool {
    if v.nodes <= 1 {
        return true;
    }
    let mut adj = vec![Vec::new(); v.nodes];
    for &(a, b) in &v.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; v.nodes];
    seen[0] = true;
    let mut q = VecDeque::from([0]);
    let mut count = 1;
    while let Some(x) = q.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                q.push_back(y);
            }
        }
    }
    count == v.nodes
}
