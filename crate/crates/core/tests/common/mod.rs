//! Independent oracles and generators shared by the integration tests.

#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zfl_core::Graph;

/// Adjacency matrix of `g`.
pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.n();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Final blue set by literally rescanning every vertex until nothing changes.
pub fn naive_closure(adj: &[Vec<bool>], blue: &[bool]) -> Vec<bool> {
    let n = adj.len();
    let mut blue = blue.to_vec();
    loop {
        let mut changed = false;
        for v in 0..n {
            if !blue[v] {
                continue;
            }
            let white: Vec<usize> = (0..n).filter(|&u| adj[v][u] && !blue[u]).collect();
            if white.len() == 1 {
                blue[white[0]] = true;
                changed = true;
            }
        }
        if !changed {
            return blue;
        }
    }
}

pub fn naive_is_zfs(adj: &[Vec<bool>], mask: u64) -> bool {
    let blue: Vec<bool> = (0..adj.len()).map(|v| mask >> v & 1 == 1).collect();
    naive_closure(adj, &blue).iter().all(|&b| b)
}

/// `z(G; k)` for all `k` by checking every subset with the naive closure.
pub fn naive_counts(g: &Graph) -> Vec<u128> {
    let adj = matrix(g);
    let n = g.n();
    let mut z = vec![0u128; n + 1];
    for mask in 0u64..(1 << n) {
        if naive_is_zfs(&adj, mask) {
            z[mask.count_ones() as usize] += 1;
        }
    }
    z
}

/// Graph on `n` vertices with each edge present independently.
pub fn random_graph(rng: &mut impl Rng, n: usize, q: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(q) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Proptest strategy for graphs with `lo..=hi` vertices.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), proptest::collection::vec(any::<bool>(), pairs)).prop_map(|(n, bits)| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::new(n, &edges).unwrap()
        })
    })
}

/// Path to the bundled corpus of all connected graphs on 1 to 8 vertices.
pub fn connected_corpus_path() -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/connected-1-8.g6")
}
