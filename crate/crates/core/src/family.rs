//! Named graph families and their descriptor strings.
//!
//! Vertex numbering per family:
//! - `path:n`: path order, edges `i ~ i+1`.
//! - `cycle:n`: path order plus the edge `(n-1, 0)`.
//! - `wheel:n`: cycle on `0..n-1`, hub `n-1`.
//! - `rgraph:n`: triangle with a pendant path, i.e. `path:n` plus the edge `(0, 2)`.
//! - `grid:MxN`: row-major, vertex `(i, j)` is `i * N + j`.
//! - `hypercube:d`: vertices are bit strings, adjacent when they differ in one bit.
//! - `bintree:n`: heap shape, the parent of `i > 0` is `(i - 1) / 2`.
//! - `multipartite:a,b,..`: parts are consecutive index blocks.
//! - `star:k`: `K_{1,k}` with the center at `0`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{join, Graph};

const MAX_HYPERCUBE_DIM: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    /// `n` isolated vertices.
    Empty(usize),
    Multipartite(Vec<usize>),
    Star(usize),
    Wheel(usize),
    /// Triangle with pendant path.
    RGraph(usize),
    Grid(usize, usize),
    Hypercube(usize),
    BinaryTree(usize),
}

impl Family {
    /// Number of vertices the family member will have.
    pub fn order(&self) -> usize {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Wheel(n)
            | Family::RGraph(n)
            | Family::BinaryTree(n) => n,
            Family::Star(k) => k + 1,
            Family::Multipartite(ref parts) => parts.iter().sum(),
            Family::Grid(m, n) => m * n,
            Family::Hypercube(d) => 1usize.checked_shl(d as u32).unwrap_or(usize::MAX),
        }
    }

    fn name(&self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Empty(_) => "empty",
            Family::Multipartite(_) => "multipartite",
            Family::Star(_) => "star",
            Family::Wheel(_) => "wheel",
            Family::RGraph(_) => "rgraph",
            Family::Grid(..) => "grid",
            Family::Hypercube(_) => "hypercube",
            Family::BinaryTree(_) => "bintree",
        }
    }

    fn bad(&self, reason: impl Into<String>) -> Error {
        Error::FamilyParameter { family: self.name().to_string(), reason: reason.into() }
    }

    fn check(&self) -> Result<()> {
        let need = |n: usize, min: usize| {
            if n < min {
                Err(self.bad(format!("needs n >= {min}, got {n}")))
            } else {
                Ok(())
            }
        };
        match *self {
            Family::Path(n) | Family::Complete(n) | Family::Empty(n) | Family::BinaryTree(n) => need(n, 1),
            Family::Cycle(n) | Family::RGraph(n) => need(n, 3),
            Family::Wheel(n) => need(n, 4),
            Family::Star(k) => need(k, 1),
            Family::Grid(m, n) => need(m.min(n), 1),
            Family::Hypercube(d) if d > MAX_HYPERCUBE_DIM => {
                Err(self.bad(format!("dimension capped at {MAX_HYPERCUBE_DIM}")))
            }
            Family::Hypercube(_) => Ok(()),
            Family::Multipartite(ref parts) => {
                if parts.is_empty() || parts.contains(&0) {
                    Err(self.bad("needs at least one part, all parts nonempty"))
                } else {
                    Ok(())
                }
            }
        }
    }

    pub fn build(&self) -> Result<Graph> {
        self.check()?;
        let g = match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => {
                let mut edges = path_edges(n);
                edges.push((n - 1, 0));
                Graph::new(n, &edges)?
            }
            Family::Complete(n) => complete(n),
            Family::Empty(n) => Graph::new(n, &[])?,
            Family::Multipartite(ref parts) => multipartite(parts),
            Family::Star(k) => multipartite(&[1, k]),
            Family::Wheel(n) => {
                let rim = Family::Cycle(n - 1).build()?;
                join(&rim, &Graph::new(1, &[])?)
            }
            Family::RGraph(n) => {
                let mut edges = path_edges(n);
                edges.push((0, 2));
                Graph::new(n, &edges)?
            }
            Family::Grid(rows, cols) => {
                let mut edges = Vec::new();
                for i in 0..rows {
                    for j in 0..cols {
                        let v = i * cols + j;
                        if j + 1 < cols {
                            edges.push((v, v + 1));
                        }
                        if i + 1 < rows {
                            edges.push((v, v + cols));
                        }
                    }
                }
                Graph::new(rows * cols, &edges)?
            }
            Family::Hypercube(d) => {
                let n = 1usize << d;
                let edges: Vec<_> =
                    (0..n).flat_map(|u| (0..d).map(move |i| (u, u ^ (1 << i))).filter(|&(u, v)| u < v)).collect();
                Graph::new(n, &edges)?
            }
            Family::BinaryTree(n) => {
                let edges: Vec<_> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
                Graph::new(n, &edges)?
            }
        };
        Ok(g.with_label(self.to_string()))
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

pub fn path(n: usize) -> Graph {
    Graph::new(n, &path_edges(n)).expect("n >= 1")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::new(n, &edges).expect("n >= 1")
}

fn multipartite(parts: &[usize]) -> Graph {
    let mut starts = Vec::with_capacity(parts.len());
    let mut n = 0;
    for &p in parts {
        starts.push(n);
        n += p;
    }
    let mut edges = Vec::new();
    for (a, (&sa, &pa)) in starts.iter().zip(parts).enumerate() {
        for (&sb, &pb) in starts.iter().zip(parts).skip(a + 1) {
            for u in sa..sa + pa {
                edges.extend((sb..sb + pb).map(|v| (u, v)));
            }
        }
    }
    Graph::new(n, &edges).expect("parts nonempty")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Multipartite(parts) => {
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:{}", parts.join(","))
            }
            Family::Grid(m, n) => write!(f, "grid:{m}x{n}"),
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Empty(n)
            | Family::Star(n)
            | Family::Wheel(n)
            | Family::RGraph(n)
            | Family::Hypercube(n)
            | Family::BinaryTree(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses descriptors such as `path:16`, `grid:4x4`, `hypercube:8`,
    /// `wheel:10`, `rgraph:5`, `nk1:3`, `multipartite:2,3`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, arg) = s.split_once(':').ok_or_else(|| Error::UnknownFamily(s.to_string()))?;
        let name = name.trim().to_ascii_lowercase();
        let arg = arg.trim();
        let int = |t: &str| -> Result<usize> {
            t.trim().parse::<usize>().map_err(|_| Error::FamilyParameter {
                family: name.clone(),
                reason: format!("`{t}` is not a nonnegative integer"),
            })
        };
        let fam = match name.as_str() {
            "path" | "p" => Family::Path(int(arg)?),
            "cycle" | "c" => Family::Cycle(int(arg)?),
            "complete" | "k" | "clique" => Family::Complete(int(arg)?),
            "empty" | "nk1" => Family::Empty(int(arg)?),
            "star" => Family::Star(int(arg)?),
            "wheel" | "w" => Family::Wheel(int(arg)?),
            "rgraph" | "r" => Family::RGraph(int(arg)?),
            "hypercube" | "q" => Family::Hypercube(int(arg)?),
            "bintree" | "binary-tree" => Family::BinaryTree(int(arg)?),
            "multipartite" => Family::Multipartite(arg.split(',').map(int).collect::<Result<_>>()?),
            "grid" => {
                let (m, n) = arg
                    .split_once(['x', 'X'])
                    .ok_or_else(|| Error::FamilyParameter { family: name.clone(), reason: "expected MxN".into() })?;
                Family::Grid(int(m)?, int(n)?)
            }
            _ => return Err(Error::UnknownFamily(name)),
        };
        Ok(fam)
    }
}

/// Parses and builds a family descriptor in one step.
pub fn family(descriptor: &str) -> Result<Graph> {
    descriptor.parse::<Family>()?.build()
}
