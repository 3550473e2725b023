#![allow(dead_code)]

use std::collections::BTreeSet;

use halfguard::decomp::Tree;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Canonical string of a tree rooted at `r` (AHU encoding).
fn rooted_code(adj: &[Vec<usize>], v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&w| w != parent).map(|&w| rooted_code(adj, w, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn centers(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let mut leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= leaves.len();
        let mut next = Vec::new();
        for &l in &leaves {
            deg[l] = 0;
            for &w in &adj[l] {
                if deg[w] == 0 {
                    continue;
                }
                deg[w] -= 1;
                if deg[w] == 1 {
                    next.push(w);
                }
            }
        }
        leaves = next;
    }
    leaves
}

fn canonical(adj: &[Vec<usize>]) -> String {
    centers(adj).into_iter().map(|c| rooted_code(adj, c, usize::MAX)).min().unwrap()
}

/// All unlabeled trees with `1..=max_n` nodes and maximum degree 3, each as
/// an adjacency list.
pub fn unlabeled_trees(max_n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = vec![vec![vec![]]];
    let mut layer = vec![vec![Vec::<usize>::new()]];
    for _ in 2..=max_n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for t in &layer {
            for v in 0..t.len() {
                if t[v].len() >= 3 {
                    continue;
                }
                let mut g = t.clone();
                let w = g.len();
                g.push(vec![v]);
                g[v].push(w);
                if seen.insert(canonical(&g)) {
                    next.push(g);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// The tree under a node relabeling `perm` (old -> new), with edge order
/// sorted by the new labels.
pub fn relabel(adj: &[Vec<usize>], perm: &[usize]) -> Tree {
    let mut edges = Vec::new();
    for (v, ns) in adj.iter().enumerate() {
        for &w in ns {
            if v < w {
                let (a, b) = (perm[v], perm[w]);
                edges.push((a.min(b), a.max(b)));
            }
        }
    }
    edges.sort();
    Tree::new(adj.len(), edges).unwrap()
}

/// Identity, reversed, and two seeded random labelings of every tree with
/// at most `max_n` nodes and degree at most 3.
pub fn labeled_trees(max_n: usize) -> Vec<Tree> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    for adj in unlabeled_trees(max_n) {
        let n = adj.len();
        let id: Vec<usize> = (0..n).collect();
        let rev: Vec<usize> = (0..n).rev().collect();
        out.push(relabel(&adj, &id));
        out.push(relabel(&adj, &rev));
        for _ in 0..2 {
            let mut p = id.clone();
            p.shuffle(&mut rng);
            out.push(relabel(&adj, &p));
        }
    }
    out
}

/// Every edge incident to `x` whose deletion leaves two odd components.
pub fn brute_odd_odd(t: &Tree, x: usize) -> Vec<usize> {
    t.neighbors(x)
        .iter()
        .map(|&(_, e)| e)
        .filter(|&e| t.components(&[e]).iter().all(|c| c.len() % 2 == 1))
        .collect()
}

/// Every edge whose deletion leaves a component with 2 or 3 nodes.
pub fn brute_quad_pent(t: &Tree) -> Vec<usize> {
    (0..t.edges().len())
        .filter(|&e| t.components(&[e]).iter().any(|c| c.len() == 2 || c.len() == 3))
        .collect()
}

/// True when deleting `edges` leaves one 3-node component, all others even,
/// and each of the others joined to the 3-node one by a deleted edge.
pub fn hub_valid(t: &Tree, edges: &[usize]) -> bool {
    let (label, count) = t.component_labels(edges);
    if count != edges.len() + 1 {
        return false;
    }
    let mut size = vec![0usize; count];
    for &l in &label {
        size[l] += 1;
    }
    let hubs: Vec<usize> = (0..count).filter(|&c| size[c] == 3).collect();
    hubs.iter().any(|&h| {
        (0..count).all(|c| {
            c == h
                || (size[c] % 2 == 0
                    && edges.iter().any(|&e| {
                        let (a, b) = t.edge(e);
                        (label[a] == h && label[b] == c) || (label[b] == h && label[a] == c)
                    }))
        })
    })
}

/// All edge subsets of size at most 5 satisfying [`hub_valid`].
pub fn brute_hub(t: &Tree) -> Vec<Vec<usize>> {
    let m = t.edges().len();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(t: &Tree, m: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if hub_valid(t, cur) {
            out.push(cur.clone());
        }
        if cur.len() == 5 {
            return;
        }
        for e in start..m {
            cur.push(e);
            rec(t, m, e + 1, cur, out);
            cur.pop();
        }
    }
    rec(t, m, 0, &mut cur, &mut out);
    out
}
