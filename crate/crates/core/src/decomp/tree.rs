//! Abstract trees and edge selections on them.

use std::collections::VecDeque;

use super::DecompError;

/// An undirected tree on nodes `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Tree {
    /// Builds a tree, checking that the edges connect `n` nodes without cycles.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Tree, DecompError> {
        if n == 0 || edges.len() + 1 != n {
            return Err(DecompError::NotATree);
        }
        let mut adj = vec![Vec::new(); n];
        for (k, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n || a == b {
                return Err(DecompError::NotATree);
            }
            adj[a].push((b, k));
            adj[b].push((a, k));
        }
        let t = Tree { edges, adj };
        if t.component_labels(&[]).1 != 1 {
            return Err(DecompError::NotATree);
        }
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `(neighbor, edge index)` pairs at `v`, in insertion order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    /// Component label per node after deleting `removed`, and the number
    /// of components. Labels are ordered by smallest member node.
    pub fn component_labels(&self, removed: &[usize]) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &(w, e) in &self.adj[v] {
                    if label[w] == usize::MAX && !removed.contains(&e) {
                        label[w] = count;
                        q.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Node lists of the components after deleting `removed`.
    pub fn components(&self, removed: &[usize]) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels(removed);
        let mut out = vec![Vec::new(); count];
        for (v, &l) in label.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    /// Nodes on the side of `v` after deleting edge `e`.
    pub fn side(&self, e: usize, v: usize) -> Vec<usize> {
        let comps = self.components(&[e]);
        comps.into_iter().find(|c| c.contains(&v)).expect("node belongs to a component")
    }

    /// Subtree induced by a connected node set, with the local-to-global
    /// node and edge maps.
    pub fn induced(&self, nodes: &[usize]) -> (Tree, Vec<usize>, Vec<usize>) {
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in nodes.iter().enumerate() {
            local[v] = i;
        }
        let mut edges = Vec::new();
        let mut emap = Vec::new();
        for (k, &(a, b)) in self.edges.iter().enumerate() {
            if local[a] != usize::MAX && local[b] != usize::MAX {
                edges.push((local[a], local[b]));
                emap.push(k);
            }
        }
        let t = Tree::new(nodes.len(), edges).expect("induced node set is connected");
        (t, nodes.to_vec(), emap)
    }

    /// Parent pointers and depths for the tree rooted at `root`.
    fn rooted(&self, root: usize) -> (Vec<Option<(usize, usize)>>, Vec<usize>) {
        let n = self.n();
        let mut parent = vec![None; n];
        let mut depth = vec![usize::MAX; n];
        depth[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            for &(w, e) in &self.adj[v] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[v] + 1;
                    parent[w] = Some((v, e));
                    q.push_back(w);
                }
            }
        }
        (parent, depth)
    }
}

/// An edge of an even-sized tree, incident to `x`, whose deletion leaves
/// two odd components.
pub fn odd_odd_edge(t: &Tree, x: usize) -> Result<usize, DecompError> {
    if t.n() % 2 != 0 {
        return Err(DecompError::PreconditionViolated("tree size must be even".into()));
    }
    if x >= t.n() {
        return Err(DecompError::PreconditionViolated("node out of range".into()));
    }
    match t.degree(x) {
        1 => Ok(t.neighbors(x)[0].1),
        2 => {
            let nb = t.neighbors(x);
            let far_odd = |&(w, e): &(usize, usize)| t.side(e, w).len() % 2 == 1;
            Ok(nb.iter().find(|p| far_odd(p)).expect("exactly one far side is odd").1)
        }
        d => Err(DecompError::PreconditionViolated(format!("node degree {d} is not 1 or 2"))),
    }
}

/// An edge cut off by [`quad_pent_edge`], with the small side's nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallCut {
    pub edge: usize,
    /// The component of size 2 or 3.
    pub small: Vec<usize>,
}

/// An edge whose deletion leaves a component with 2 or 3 nodes.
///
/// Roots the tree at its lowest-index leaf. Without degree-3 nodes the
/// deepest leaf and its parent are cut off. Otherwise, below the deepest
/// degree-3 node `x` hang two chains; a chain of length at least two gives
/// a 2-node piece, and two single leaves give the 3-node piece `x` plus
/// both leaves.
pub fn quad_pent_edge(t: &Tree) -> Result<SmallCut, DecompError> {
    let n = t.n();
    if n < 3 {
        return Err(DecompError::PreconditionViolated("tree needs at least 3 nodes".into()));
    }
    if t.max_degree() > 3 {
        return Err(DecompError::PreconditionViolated("tree degree exceeds 3".into()));
    }
    let root = (0..n).find(|&v| t.degree(v) == 1).expect("trees with 2+ nodes have leaves");
    let (parent, depth) = t.rooted(root);
    let deepest = |cands: &mut dyn Iterator<Item = usize>| cands.max_by(|&a, &b| depth[a].cmp(&depth[b]).then(b.cmp(&a)));
    let parent_edge = |v: usize| parent[v].expect("non-root node has a parent");
    let Some(x) = deepest(&mut (0..n).filter(|&v| t.degree(v) == 3)) else {
        let y = deepest(&mut (0..n)).expect("nonempty");
        let (x, _) = parent_edge(y);
        let (_, e) = parent_edge(x);
        return Ok(SmallCut { edge: e, small: sorted(vec![x, y]) });
    };
    let mut children: Vec<usize> = t.neighbors(x).iter().map(|&(w, _)| w).filter(|&w| parent[w].map(|p| p.0) == Some(x)).collect();
    children.sort();
    for &c in &children {
        let mut prev = x;
        let mut cur = c;
        while t.degree(cur) == 2 {
            let next = t.neighbors(cur).iter().map(|&(w, _)| w).find(|&w| w != prev).expect("chain continues");
            prev = cur;
            cur = next;
        }
        if prev != x {
            let (_, e) = parent_edge(prev);
            return Ok(SmallCut { edge: e, small: sorted(vec![prev, cur]) });
        }
    }
    let (_, e) = parent_edge(x);
    let mut small = children.clone();
    small.push(x);
    Ok(SmallCut { edge: e, small: sorted(small) })
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort();
    v
}

/// Edge set splitting an odd tree into a 3-node hub and even parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HubEdges {
    /// Deleted edges; `edges[i]` joins `parts[i]` to the hub.
    pub edges: Vec<usize>,
    pub hub: Vec<usize>,
    pub parts: Vec<Vec<usize>>,
}

/// Deletes at most five edges so that a 3-node hub remains with every other
/// component even and attached to the hub by one deleted edge.
///
/// Follows the induction: cut a 2- or 3-node piece with [`quad_pent_edge`].
/// A 3-node piece becomes the hub with the rest as its only part. A 2-node
/// piece is set aside, the rest is decomposed recursively, and the piece is
/// merged into the part it touches or becomes a new part of the hub.
pub fn pent_hub_edges(t: &Tree) -> Result<HubEdges, DecompError> {
    let n = t.n();
    if n < 3 || n % 2 == 0 {
        return Err(DecompError::PreconditionViolated(format!("tree size {n} must be odd and at least 3")));
    }
    if t.max_degree() > 3 {
        return Err(DecompError::PreconditionViolated("tree degree exceeds 3".into()));
    }
    if n == 3 {
        return Ok(HubEdges { edges: vec![], hub: (0..3).collect(), parts: vec![] });
    }
    let cut = quad_pent_edge(t)?;
    let rest: Vec<usize> = (0..n).filter(|v| !cut.small.contains(v)).collect();
    if cut.small.len() == 3 {
        return Ok(HubEdges { edges: vec![cut.edge], hub: cut.small, parts: vec![rest] });
    }
    let (sub, nmap, emap) = t.induced(&rest);
    let inner = pent_hub_edges(&sub)?;
    let mut edges: Vec<usize> = inner.edges.iter().map(|&e| emap[e]).collect();
    let hub: Vec<usize> = inner.hub.iter().map(|&v| nmap[v]).collect();
    let mut parts: Vec<Vec<usize>> = inner.parts.iter().map(|p| p.iter().map(|&v| nmap[v]).collect()).collect();
    let (a, b) = t.edge(cut.edge);
    let anchor = if cut.small.contains(&a) { b } else { a };
    if let Some(part) = parts.iter_mut().find(|p| p.contains(&anchor)) {
        part.extend(cut.small.iter().copied());
        part.sort();
    } else {
        debug_assert!(hub.contains(&anchor));
        edges.push(cut.edge);
        parts.push(cut.small);
    }
    Ok(HubEdges { edges, hub, parts })
}
