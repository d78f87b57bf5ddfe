//! Simple undirected graphs with dense bit-row adjacency.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{words_for, BitIter, VertexSet, WORD_BITS};

/// An immutable simple undirected graph on `n >= 1` vertices.
///
/// Row `v` of the adjacency is the open neighborhood of `v` as a bit row of
/// `ceil(n / 64)` words. A CSR neighbor list is kept alongside for sparse
/// traversal of large graphs.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    offsets: Vec<u32>,
    nbrs: Vec<u32>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges(n, edges.iter().copied())
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let words = words_for(n);
        let mut rows = vec![0u64; n * words];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            rows[u * words + v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
            rows[v * words + u / WORD_BITS] |= 1u64 << (u % WORD_BITS);
        }
        Ok(Self::from_rows(n, rows))
    }

    /// Trusted constructor: `rows` must already be symmetric and loop-free.
    pub(crate) fn from_rows(n: usize, rows: Vec<u64>) -> Self {
        let words = words_for(n);
        debug_assert_eq!(rows.len(), n * words);
        let mut offsets = Vec::with_capacity(n + 1);
        let mut nbrs = Vec::new();
        offsets.push(0u32);
        for v in 0..n {
            for (i, &w) in rows[v * words..(v + 1) * words].iter().enumerate() {
                nbrs.extend(BitIter(w).map(|b| (i * WORD_BITS + b) as u32));
            }
            offsets.push(nbrs.len() as u32);
        }
        Graph { n, words, rows, offsets, nbrs, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.nbrs[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.nbrs.len() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u).iter().map(|&v| v as usize).filter(move |&v| v > u).map(move |v| (u, v))
        })
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.degree(v) == 0).collect()
    }

    /// Adjacency as one word per vertex, available when `n <= 64`.
    pub fn mask_rows(&self) -> Option<Vec<u64>> {
        (self.words == 1).then(|| self.rows.clone())
    }

    /// Induced subgraph on `vertices`; new vertex `i` is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        if vertices.is_empty() {
            return Err(Error::EmptyGraph);
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            index[v] = i;
        }
        let edges = vertices.iter().enumerate().flat_map(|(i, &v)| {
            let index = &index;
            self.neighbors(v).iter().filter_map(move |&u| {
                let j = index[u as usize];
                (j != usize::MAX && j > i).then_some((i, j))
            })
        });
        Graph::from_edges(vertices.len(), edges.collect::<Vec<_>>())
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_avoiding(None)
    }

    /// Components of `G - w` (or of `G` when `w` is `None`).
    pub(crate) fn components_avoiding(&self, w: Option<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        if let Some(w) = w {
            seen[w] = true;
        }
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &u in self.neighbors(v) {
                    let u = u as usize;
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count() + 1 == self.n && self.is_connected()
    }

    /// True when this graph is the path `0 - 1 - .. - (n-1)` up to relabeling.
    pub fn is_path(&self) -> bool {
        self.is_tree() && self.max_degree() <= 2
    }

    /// Vertex-by-vertex equality, ignoring labels.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.same_adjacency(other)
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("label", &self.label)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Disjoint union; vertices of `g2` are shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let edges = g1.edges().chain(g2.edges().map(|(u, v)| (u + n1, v + n1)));
    Graph::from_edges(n1 + g2.n(), edges.collect::<Vec<_>>()).expect("union of valid graphs")
}

/// Join: the disjoint union plus every edge between the two sides.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let (n1, n2) = (g1.n(), g2.n());
    let cross = (0..n1).flat_map(|u| (0..n2).map(move |v| (u, n1 + v)));
    let edges = g1.edges().chain(g2.edges().map(|(u, v)| (u + n1, v + n1))).chain(cross);
    Graph::from_edges(n1 + n2, edges.collect::<Vec<_>>()).expect("join of valid graphs")
}
