//! Structural reductions: 2-core peeling, pendant paths and pendant trees,
//! projection of a blue set onto the 2-core, leaf cliques and cut-vertex
//! splits.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forcing::is_zfs;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The 2-core of a graph: the fixpoint of deleting vertices of degree <= 1.
#[derive(Clone, Debug)]
pub struct TwoCore {
    /// Induced core graph, `None` when the core is empty (forests).
    pub core: Option<Graph>,
    /// Core vertex `i` is `vertices[i]` in the original graph.
    pub vertices: Vec<usize>,
    /// Core membership in original indexing.
    pub members: VertexSet,
}

pub fn two_core(g: &Graph) -> TwoCore {
    let n = g.n();
    let mut deg = g.degrees();
    let mut alive = VertexSet::full(n);
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive.contains(v) {
            continue;
        }
        alive.remove(v);
        for &u in g.neighbors(v) {
            let u = u as usize;
            if alive.contains(u) {
                deg[u] -= 1;
                if deg[u] == 1 {
                    stack.push(u);
                }
            }
        }
    }
    let vertices = alive.to_vec();
    let core = (!vertices.is_empty()).then(|| g.induced(&vertices).expect("nonempty"));
    TwoCore { core, vertices, members: alive }
}

/// A path `v_1 .. v_k` with `d(v_1) = 1`, interior degrees 2 and `d(v_k) > 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantPath {
    pub vertices: Vec<usize>,
}

impl PendantPath {
    pub fn pendant(&self) -> usize {
        self.vertices[0]
    }

    pub fn anchor(&self) -> usize {
        *self.vertices.last().expect("k >= 2")
    }
}

/// Where the walk from a leaf along degree-2 vertices ends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LeafWalk {
    /// Ends at a vertex of degree > 2.
    Pendant(PendantPath),
    /// Ends at another leaf: the whole component is a path. Reported once,
    /// from the lower-index leaf.
    PathComponent { vertices: Vec<usize> },
}

pub fn leaf_walks(g: &Graph) -> Vec<LeafWalk> {
    let mut out = Vec::new();
    for leaf in (0..g.n()).filter(|&v| g.degree(v) == 1) {
        let mut walk = vec![leaf];
        let mut prev = leaf;
        let mut cur = g.neighbors(leaf)[0] as usize;
        while g.degree(cur) == 2 {
            walk.push(cur);
            let next = g.neighbors(cur).iter().map(|&u| u as usize).find(|&u| u != prev).expect("degree 2");
            prev = cur;
            cur = next;
        }
        walk.push(cur);
        if g.degree(cur) > 2 {
            out.push(LeafWalk::Pendant(PendantPath { vertices: walk }));
        } else if leaf < cur {
            out.push(LeafWalk::PathComponent { vertices: walk });
        }
    }
    out
}

/// All maximal pendant paths, ordered by pendant vertex.
pub fn pendant_paths(g: &Graph) -> Vec<PendantPath> {
    leaf_walks(g)
        .into_iter()
        .filter_map(|w| match w {
            LeafWalk::Pendant(p) => Some(p),
            LeafWalk::PathComponent { .. } => None,
        })
        .collect()
}

/// A vertex anchoring at least two pendant paths, if any.
pub fn double_pendant_anchor(g: &Graph) -> Option<usize> {
    let mut count = vec![0u8; g.n()];
    for p in pendant_paths(g) {
        let a = p.anchor();
        count[a] += 1;
        if count[a] == 2 {
            return Some(a);
        }
    }
    None
}

/// Maximal induced tree meeting the 2-core in exactly its anchor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PendantTree {
    pub anchor: usize,
    /// Sorted, including the anchor.
    pub vertices: Vec<usize>,
}

impl PendantTree {
    pub fn graph(&self, g: &Graph) -> Graph {
        g.induced(&self.vertices).expect("nonempty")
    }
}

/// Pendant trees, one per core vertex with non-core neighbors, ordered by
/// anchor. Empty when the core is empty; see [`tree_components`].
pub fn pendant_trees(g: &Graph) -> Vec<PendantTree> {
    pendant_trees_with(g, &two_core(g))
}

fn pendant_trees_with(g: &Graph, core: &TwoCore) -> Vec<PendantTree> {
    let mut out = Vec::new();
    for &w in &core.vertices {
        let mut verts = vec![w];
        let mut i = 0;
        let mut seen = VertexSet::empty(g.n());
        seen.insert(w);
        while i < verts.len() {
            let v = verts[i];
            i += 1;
            for &u in g.neighbors(v) {
                let u = u as usize;
                if !core.members.contains(u) && !seen.contains(u) {
                    seen.insert(u);
                    verts.push(u);
                }
            }
        }
        if verts.len() > 1 {
            verts.sort_unstable();
            out.push(PendantTree { anchor: w, vertices: verts });
        }
    }
    out
}

/// Components with no 2-core vertex, i.e. the tree components.
pub fn tree_components(g: &Graph) -> Vec<Vec<usize>> {
    let core = two_core(g);
    g.components().into_iter().filter(|c| c.iter().all(|&v| !core.members.contains(v))).collect()
}

/// A blue set projected onto the 2-core.
#[derive(Clone, Debug)]
pub struct CoreProjection {
    pub core: TwoCore,
    /// Core members of `B`, plus anchors of pendant trees `T` where `B`
    /// restricted to `T` is zero forcing in `T`. Core indexing.
    pub projected_set: VertexSet,
}

pub fn core_project_set(g: &Graph, b: &VertexSet) -> CoreProjection {
    let core = two_core(g);
    let mut projected = b.restrict(&core.vertices);
    if !core.vertices.is_empty() {
        let position = |v: usize| core.vertices.binary_search(&v).expect("anchor is a core vertex");
        for tree in pendant_trees_with(g, &core) {
            let restricted = b.restrict(&tree.vertices);
            if is_zfs(&tree.graph(g), &restricted) {
                projected.insert(position(tree.anchor));
            }
        }
    }
    CoreProjection { core, projected_set: projected }
}

/// Adds every edge among `leaves`, each of which must have degree 1.
pub fn add_leaf_clique(g: &Graph, leaves: &VertexSet) -> Result<Graph> {
    let ls = leaves.to_vec();
    if let Some(&v) = ls.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    if let Some(&v) = ls.iter().find(|&&v| g.degree(v) != 1) {
        return Err(Error::NotLeaf(v));
    }
    let clique = ls.iter().enumerate().flat_map(|(i, &u)| ls[i + 1..].iter().map(move |&v| (u, v)));
    Graph::from_edges(g.n(), g.edges().chain(clique).collect::<Vec<_>>())
}

/// One side `G[W_i + w]` of a cut-vertex split.
#[derive(Clone, Debug)]
pub struct SplitPart {
    pub graph: Graph,
    /// Part vertex `i` is `vertices[i]` in the original graph.
    pub vertices: Vec<usize>,
}

impl SplitPart {
    /// Index of the cut vertex inside this part.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }
}

/// Splits at cut vertex `w`. `W_1` is the component of `G - w` holding the
/// lowest-index neighbor of `w`; `W_2` is every other vertex except `w`.
pub fn split_at_cut_vertex(g: &Graph, w: usize) -> Result<(SplitPart, SplitPart)> {
    if w >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: w, n: g.n() });
    }
    let comps = g.components_avoiding(Some(w));
    let touching: Vec<usize> =
        comps.iter().enumerate().filter(|(_, c)| c.iter().any(|&v| g.has_edge(v, w))).map(|(i, _)| i).collect();
    if touching.len() < 2 {
        return Err(Error::NotCutVertex(w));
    }
    let first = touching
        .iter()
        .copied()
        .min_by_key(|&i| comps[i].iter().copied().filter(|&v| g.has_edge(v, w)).min())
        .expect("two components");
    let mut side1 = comps[first].clone();
    let mut side2: Vec<usize> =
        comps.iter().enumerate().filter(|&(i, _)| i != first).flat_map(|(_, c)| c.iter().copied()).collect();
    let part = |side: &mut Vec<usize>| -> Result<SplitPart> {
        side.push(w);
        side.sort_unstable();
        Ok(SplitPart { graph: g.induced(side)?, vertices: side.clone() })
    };
    Ok((part(&mut side1)?, part(&mut side2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, family, path};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied()).unwrap()
    }

    fn r5() -> Graph {
        family("rgraph:5").unwrap()
    }

    #[test]
    fn cores() {
        for n in 1..8 {
            assert!(two_core(&path(n)).core.is_none());
        }
        let c = two_core(&r5());
        assert_eq!(c.vertices, vec![0, 1, 2]);
        assert_eq!(c.core.unwrap(), complete(3));
        let c6 = family("cycle:6").unwrap();
        assert_eq!(two_core(&c6).core.unwrap(), c6);
    }

    #[test]
    fn pendant_path_examples() {
        assert!(pendant_paths(&path(6)).is_empty());
        assert_eq!(leaf_walks(&path(4)), vec![LeafWalk::PathComponent { vertices: vec![0, 1, 2, 3] }]);
        assert_eq!(pendant_paths(&r5()), vec![PendantPath { vertices: vec![4, 3, 2] }]);
        let spider = Graph::new(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let ps = pendant_paths(&spider);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|p| p.anchor() == 0 && p.vertices.len() == 3));
        assert_eq!(double_pendant_anchor(&spider), Some(0));
        assert_eq!(double_pendant_anchor(&r5()), None);
    }

    #[test]
    fn tadpole_anchor_must_exceed_degree_two() {
        // C4 on 0..4 with tail 3-4-5: vertex 3 has degree 3
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]).unwrap();
        assert_eq!(pendant_paths(&g), vec![PendantPath { vertices: vec![5, 4, 3] }]);
    }

    #[test]
    fn pendant_tree_examples() {
        assert_eq!(pendant_trees(&r5()), vec![PendantTree { anchor: 2, vertices: vec![2, 3, 4] }]);
        assert!(pendant_trees(&family("cycle:6").unwrap()).is_empty());
        let c4_leaf = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        assert_eq!(pendant_trees(&c4_leaf), vec![PendantTree { anchor: 1, vertices: vec![1, 4] }]);
        let forest = Graph::new(5, &[(0, 1), (2, 3), (3, 4)]).unwrap();
        assert!(pendant_trees(&forest).is_empty());
        assert_eq!(tree_components(&forest).len(), 2);
    }

    #[test]
    fn projection_examples() {
        let g = r5();
        let proj = core_project_set(&g, &set(5, &[0, 3, 4]));
        assert_eq!(proj.projected_set.to_vec(), vec![0, 2]);
        let core = proj.core.core.as_ref().unwrap();
        assert!(is_zfs(core, &proj.projected_set));

        let proj = core_project_set(&g, &set(5, &[3, 4]));
        assert_eq!(proj.projected_set.to_vec(), vec![2]);

        let c6 = family("cycle:6").unwrap();
        let b = set(6, &[1, 4, 5]);
        assert_eq!(core_project_set(&c6, &b).projected_set, b);

        let p = core_project_set(&path(4), &set(4, &[0]));
        assert_eq!(p.projected_set.universe(), 0);
    }

    #[test]
    fn leaf_clique_examples() {
        let star = family("star:3").unwrap();
        assert_eq!(add_leaf_clique(&star, &set(4, &[2])).unwrap(), star);
        let paw_plus = add_leaf_clique(&star, &set(4, &[1, 2])).unwrap();
        assert_eq!(paw_plus.edge_count(), 4);
        assert!(paw_plus.has_edge(1, 2));
        assert!(matches!(add_leaf_clique(&star, &set(4, &[0, 1])), Err(Error::NotLeaf(0))));
    }

    #[test]
    fn cut_vertex_examples() {
        let (a, b) = split_at_cut_vertex(&path(3), 1).unwrap();
        assert_eq!((a.graph, b.graph), (path(2), path(2)));

        let (a, b) = split_at_cut_vertex(&r5(), 2).unwrap();
        assert_eq!(a.graph, complete(3));
        assert_eq!(b.graph, path(3));
        assert_eq!(b.vertices, vec![2, 3, 4]);

        let bowtie = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let (a, b) = split_at_cut_vertex(&bowtie, 2).unwrap();
        assert_eq!((a.graph, b.graph), (complete(3), complete(3)));

        assert!(matches!(split_at_cut_vertex(&complete(4), 0), Err(Error::NotCutVertex(0))));
        assert!(matches!(split_at_cut_vertex(&path(3), 0), Err(Error::NotCutVertex(0))));
    }
}
