//! Isomorph-free generation of free trees.
//!
//! Every tree has either one centroid, whose branches all have fewer than
//! `n / 2` vertices, or two adjacent centroids splitting it into two halves
//! of `n / 2` vertices. Rooting at the centroid and listing branches as a
//! nonincreasing sequence of canonical rooted-tree ids gives exactly one
//! representative per isomorphism class.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_free_trees`].
pub const FREE_TREE_CAP: usize = 16;

/// Rooted trees numbered in order of size; `children` holds ids in
/// nonincreasing order.
struct RootedTrees {
    size: Vec<usize>,
    children: Vec<Vec<usize>>,
    /// Ids of each size form the range `by_size[s]..by_size[s + 1]`.
    by_size: Vec<usize>,
}

impl RootedTrees {
    fn up_to(max: usize) -> Self {
        let mut t = RootedTrees { size: Vec::new(), children: Vec::new(), by_size: vec![0, 0] };
        for s in 1..=max {
            let mut found = Vec::new();
            t.forests(s - 1, usize::MAX, &mut Vec::new(), &mut found);
            for ch in found {
                t.size.push(s);
                t.children.push(ch);
            }
            t.by_size.push(t.size.len());
        }
        t
    }

    /// All nonincreasing id sequences of trees with sizes summing to `total`,
    /// ids below `bound`, each tree of size at most `max_size`.
    fn forests_bounded(
        &self,
        total: usize,
        bound: usize,
        max_size: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if total == 0 {
            out.push(cur.clone());
            return;
        }
        let top = self.by_size[(total.min(max_size) + 1).min(self.by_size.len() - 1)];
        for id in (0..top.min(bound)).rev() {
            if self.size[id] > total {
                continue;
            }
            cur.push(id);
            self.forests_bounded(total - self.size[id], id + 1, max_size, cur, out);
            cur.pop();
        }
    }

    fn forests(&self, total: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        self.forests_bounded(total, bound, usize::MAX, cur, out)
    }

    /// Appends tree `id` below `parent` (or as a new root) in preorder.
    fn emit(&self, id: usize, parent: Option<usize>, next: &mut usize, edges: &mut Vec<(usize, usize)>) -> usize {
        let me = *next;
        *next += 1;
        if let Some(p) = parent {
            edges.push((p, me));
        }
        for &c in &self.children[id] {
            self.emit(c, Some(me), next, edges);
        }
        me
    }
}

/// One representative of every isomorphism class of trees on `n` vertices.
/// Vertices are numbered in preorder from a centroid.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > FREE_TREE_CAP {
        return Err(Error::CapExceeded { what: "free tree enumeration", n, cap: FREE_TREE_CAP });
    }
    let rooted = RootedTrees::up_to(n / 2);
    let mut out = Vec::new();
    let build = |edges: Vec<(usize, usize)>| Graph::from_edges(n, edges).map(|g| g.with_label(format!("tree:{n}")));

    let mut branch_sets = Vec::new();
    rooted.forests_bounded(n - 1, usize::MAX, (n - 1) / 2, &mut Vec::new(), &mut branch_sets);
    for branches in branch_sets {
        let mut edges = Vec::with_capacity(n - 1);
        let mut next = 1;
        for id in branches {
            rooted.emit(id, Some(0), &mut next, &mut edges);
        }
        out.push(build(edges)?);
    }

    if n % 2 == 0 {
        let half = n / 2;
        let ids = rooted.by_size[half]..rooted.by_size[half + 1];
        for a in ids.clone() {
            for b in ids.start..=a {
                let mut edges = Vec::with_capacity(n - 1);
                let mut next = 0;
                let ra = rooted.emit(a, None, &mut next, &mut edges);
                rooted.emit(b, Some(ra), &mut next, &mut edges);
                out.push(build(edges)?);
            }
        }
    }
    Ok(out)
}
