//! The color change rule: a blue vertex with exactly one white neighbor
//! turns that neighbor blue.
//!
//! Three closure routines share the rule:
//! - [`closure_mask`]: word-parallel sweeps for graphs on at most 64 vertices,
//!   the inner loop of exhaustive enumeration.
//! - [`Closer`]: a white-neighbor-count worklist with reusable scratch space,
//!   used for large sparse graphs and Monte Carlo sampling.
//! - [`closure`]: the recording variant producing a [`ForcingRecord`].

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{low_mask, VertexSet, WORD_BITS};

/// Practical cap for [`zero_forcing_number`].
pub const ZERO_FORCING_NUMBER_CAP: usize = 32;

/// Final blue set reached from `blue` on a graph with one adjacency word per
/// vertex.
#[inline]
pub fn closure_mask(adj: &[u64], blue: u64) -> u64 {
    let mut blue = blue;
    // Blue vertices that may still have a white neighbor.
    let mut live = blue;
    loop {
        let mut progressed = false;
        let mut it = live;
        while it != 0 {
            let v = it.trailing_zeros() as usize;
            it &= it - 1;
            let white = adj[v] & !blue;
            if white & white.wrapping_sub(1) == 0 {
                // zero or one white neighbor: either way v is spent
                live &= !(1u64 << v);
                if white != 0 {
                    blue |= white;
                    live |= white;
                    progressed = true;
                }
            }
        }
        if !progressed {
            return blue;
        }
    }
}

/// Worklist closure with scratch buffers sized for one graph.
///
/// Cost is linear in the size of the graph per call, independent of how many
/// sweeps the forcing process would need.
pub struct Closer<'g> {
    g: &'g Graph,
    white: Vec<u32>,
    stack: Vec<u32>,
    blue: Vec<u64>,
}

impl<'g> Closer<'g> {
    pub fn new(g: &'g Graph) -> Self {
        Closer { g, white: vec![0; g.n()], stack: Vec::with_capacity(g.n()), blue: vec![0; g.words()] }
    }

    /// Mutable access to the blue bit words, to be filled before [`Closer::run`].
    pub fn blue_words_mut(&mut self) -> &mut [u64] {
        &mut self.blue
    }

    pub fn blue_words(&self) -> &[u64] {
        &self.blue
    }

    /// Closes the current blue words in place and returns the final blue count.
    pub fn run(&mut self) -> usize {
        let g = self.g;
        let n = g.n();
        for v in 0..n {
            self.white[v] = g.degree(v) as u32;
        }
        let mut count = 0;
        for (i, &w) in self.blue.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let v = i * WORD_BITS + w.trailing_zeros() as usize;
                w &= w - 1;
                count += 1;
                for &x in g.neighbors(v) {
                    self.white[x as usize] -= 1;
                }
            }
        }
        self.stack.clear();
        for (i, &w) in self.blue.iter().enumerate() {
            let mut w = w;
            while w != 0 {
                let v = i * WORD_BITS + w.trailing_zeros() as usize;
                w &= w - 1;
                if self.white[v] == 1 {
                    self.stack.push(v as u32);
                }
            }
        }
        while let Some(v) = self.stack.pop() {
            let v = v as usize;
            if self.white[v] != 1 {
                continue;
            }
            let u = g
                .neighbors(v)
                .iter()
                .map(|&u| u as usize)
                .find(|&u| self.blue[u / WORD_BITS] >> (u % WORD_BITS) & 1 == 0)
                .expect("white count says one white neighbor");
            self.blue[u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
            count += 1;
            for &x in g.neighbors(u) {
                let x = x as usize;
                self.white[x] -= 1;
                if self.white[x] == 1 && self.blue[x / WORD_BITS] >> (x % WORD_BITS) & 1 == 1 {
                    self.stack.push(x as u32);
                }
            }
            if self.white[u] == 1 {
                self.stack.push(u as u32);
            }
        }
        count
    }

    pub fn is_zfs(&mut self, b: &VertexSet) -> bool {
        self.blue.copy_from_slice(b.words());
        self.run() == self.g.n()
    }
}

/// Chronological forces plus the final coloring they produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingRecord {
    /// `(forcer, forced)` in the order performed.
    pub forces: Vec<(usize, usize)>,
    pub final_blue: VertexSet,
    /// Final-blue vertices that never force.
    pub reversal: VertexSet,
}

impl ForcingRecord {
    pub fn is_zero_forcing(&self) -> bool {
        self.final_blue.is_full()
    }

    /// Maximal forcing chains, one per initially blue vertex, ordered by
    /// starting vertex. Each chain ends at a reversal vertex.
    pub fn maximal_forcing_chains(&self) -> Vec<Vec<usize>> {
        let n = self.final_blue.universe();
        let mut next = vec![usize::MAX; n];
        let mut forced = VertexSet::empty(n);
        for &(f, t) in &self.forces {
            next[f] = t;
            forced.insert(t);
        }
        self.final_blue
            .iter()
            .filter(|&v| !forced.contains(v))
            .map(|start| {
                let mut chain = vec![start];
                let mut v = start;
                while next[v] != usize::MAX {
                    v = next[v];
                    chain.push(v);
                }
                chain
            })
            .collect()
    }
}

impl Serialize for ForcingRecord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let forces: Vec<[usize; 2]> = self.forces.iter().map(|&(f, t)| [f, t]).collect();
        let mut s = serializer.serialize_struct("ForcingRecord", 3)?;
        s.serialize_field("forces", &forces)?;
        s.serialize_field("blue", &self.final_blue)?;
        s.serialize_field("reversal", &self.reversal)?;
        s.end()
    }
}

/// Runs the color change rule from `b`, always letting the lowest-index
/// eligible vertex force next.
///
/// # Panics
/// If `b` is over a different vertex universe than `g`.
pub fn closure(g: &Graph, b: &VertexSet) -> ForcingRecord {
    assert_eq!(b.universe(), g.n(), "blue set universe differs from graph order");
    let n = g.n();
    let mut blue = b.clone();
    let mut white: Vec<usize> =
        (0..n).map(|v| g.neighbors(v).iter().filter(|&&u| !blue.contains(u as usize)).count()).collect();
    let mut eligible: BTreeSet<usize> = blue.iter().filter(|&v| white[v] == 1).collect();
    let mut forces = Vec::new();
    while let Some(v) = eligible.pop_first() {
        let u = g
            .neighbors(v)
            .iter()
            .map(|&u| u as usize)
            .find(|&u| !blue.contains(u))
            .expect("eligible vertex has a white neighbor");
        blue.insert(u);
        forces.push((v, u));
        for &x in g.neighbors(u) {
            let x = x as usize;
            white[x] -= 1;
            if blue.contains(x) {
                match white[x] {
                    1 => {
                        eligible.insert(x);
                    }
                    0 => {
                        eligible.remove(&x);
                    }
                    _ => {}
                }
            }
        }
        if white[u] == 1 {
            eligible.insert(u);
        }
    }
    let mut reversal = blue.clone();
    for &(f, _) in &forces {
        reversal.remove(f);
    }
    ForcingRecord { forces, final_blue: blue, reversal }
}

/// Final blue set from sweeping vertices in the given order until no force
/// applies. The result does not depend on `order`.
pub fn closure_in_order(g: &Graph, b: &VertexSet, order: &[usize]) -> VertexSet {
    let mut blue = b.clone();
    loop {
        let mut progressed = false;
        for &v in order {
            if !blue.contains(v) {
                continue;
            }
            let mut whites = g.neighbors(v).iter().map(|&u| u as usize).filter(|&u| !blue.contains(u));
            if let (Some(u), None) = (whites.next(), whites.next()) {
                blue.insert(u);
                progressed = true;
            }
        }
        if !progressed {
            return blue;
        }
    }
}

/// Whether `b` forces the whole graph.
pub fn is_zfs(g: &Graph, b: &VertexSet) -> bool {
    assert_eq!(b.universe(), g.n(), "blue set universe differs from graph order");
    match g.mask_rows() {
        Some(adj) => closure_mask(&adj, b.as_mask().expect("one word")) == low_mask(g.n()),
        None => Closer::new(g).is_zfs(b),
    }
}

/// Minimum size of a zero forcing set, by exhaustive search over increasing
/// cardinality.
pub fn zero_forcing_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > ZERO_FORCING_NUMBER_CAP {
        return Err(Error::CapExceeded { what: "zero forcing number", n, cap: ZERO_FORCING_NUMBER_CAP });
    }
    let adj = g.mask_rows().expect("n <= 32");
    let full = low_mask(n);
    let isolated = g.isolated_vertices().len();
    let start = g.min_degree().max(isolated).max(1);
    for k in start..=n {
        // every (n-1)-set forces when nothing is isolated
        if k == n - 1 && isolated == 0 && n >= 2 {
            return Ok(k);
        }
        if k_subsets(n, k).any(|s| closure_mask(&adj, s) == full) {
            return Ok(k);
        }
    }
    Ok(n)
}

/// All `k`-subsets of `{0..n}` as masks in increasing numeric order (Gosper).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64);
    let end = 1u64 << n;
    let first = if k == 0 { 0 } else { low_mask(k) };
    let mut cur = if k > n { None } else { Some(first) };
    std::iter::from_fn(move || {
        let s = cur?;
        cur = if s == 0 {
            None
        } else {
            let c = s & s.wrapping_neg();
            let r = s + c;
            let next = (((r ^ s) >> 2) / c) | r;
            (next < end).then_some(next)
        };
        Some(s)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, family, path};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    #[test]
    fn path_five_from_middle_pair() {
        // hand simulation: v2 -> v1, v3 -> v4, v4 -> v5 (zero-based below)
        let rec = closure(&path(5), &set(5, &[1, 2]));
        assert!(rec.is_zero_forcing());
        assert_eq!(rec.forces, vec![(1, 0), (2, 3), (3, 4)]);
        assert_eq!(rec.maximal_forcing_chains(), vec![vec![1, 0], vec![2, 3, 4]]);
        assert_eq!(rec.reversal.to_vec(), vec![0, 4]);
    }

    #[test]
    fn all_blue_needs_no_forces() {
        let g = family("hypercube:3").unwrap();
        let rec = closure(&g, &VertexSet::full(g.n()));
        assert!(rec.forces.is_empty());
        assert_eq!(rec.maximal_forcing_chains().len(), g.n());
    }

    #[test]
    fn triangle_stuck_from_one_vertex() {
        let rec = closure(&complete(3), &set(3, &[0]));
        assert_eq!(rec.final_blue.to_vec(), vec![0]);
        assert!(rec.forces.is_empty());
    }

    #[test]
    fn chain_from_endpoint() {
        let rec = closure(&path(3), &set(3, &[0]));
        assert_eq!(rec.maximal_forcing_chains(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn zfs_examples() {
        for n in 1..10 {
            assert!(is_zfs(&path(n), &set(n, &[0])));
        }
        let c4 = family("cycle:4").unwrap();
        assert!(!is_zfs(&c4, &set(4, &[0, 2])));
        assert!(is_zfs(&c4, &set(4, &[0, 1])));
    }

    #[test]
    fn zero_forcing_numbers() {
        assert_eq!(zero_forcing_number(&path(7)).unwrap(), 1);
        assert_eq!(zero_forcing_number(&complete(5)).unwrap(), 4);
        assert_eq!(zero_forcing_number(&family("hypercube:3").unwrap()).unwrap(), 4);
        assert_eq!(zero_forcing_number(&family("empty:3").unwrap()).unwrap(), 3);
        assert_eq!(zero_forcing_number(&complete(1)).unwrap(), 1);
        assert!(matches!(zero_forcing_number(&path(33)), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn record_serializes_to_documented_shape() {
        let rec = closure(&path(3), &set(3, &[0]));
        let json = serde_json::to_string(&rec).unwrap();
        assert_eq!(json, r#"{"forces":[[0,1],[1,2]],"blue":[0,1,2],"reversal":[2]}"#);
    }

    #[test]
    fn gosper_counts() {
        assert_eq!(k_subsets(6, 3).count(), 20);
        assert_eq!(k_subsets(5, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(k_subsets(5, 5).collect::<Vec<_>>(), vec![31]);
        assert_eq!(k_subsets(3, 4).count(), 0);
    }

    #[test]
    fn worklist_matches_mask_closure_on_large_path() {
        let g = path(200);
        let mut c = Closer::new(&g);
        assert!(c.is_zfs(&set(200, &[199])));
        assert!(c.is_zfs(&set(200, &[100, 101])));
        assert!(!c.is_zfs(&set(200, &[50, 150])));
    }
}
