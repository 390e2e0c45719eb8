//! Multigraphs with loops and parallel edges, spanning trees, and the
//! small-genus enumeration that feeds classification.
//!
//! Degree convention: a loop contributes 2 to the degree of its vertex, so a
//! vertex carrying one loop and one other edge end is trivalent.

mod canon;
mod enumerate;
mod split;
mod text;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use canon::{
    are_isomorphic, are_isomorphic_colored, canonical_code, canonical_form, CanonicalCode,
};
pub use enumerate::{enumerate_trivalent, MAX_GENUS, MIN_GENUS};
pub use split::{contract_split, SplitComponent};
pub use text::{parse_graph_text, to_graph_text};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("edge {0} does not exist")]
    EdgeOutOfRange(usize),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("graph is not trivalent")]
    NotTrivalent,
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("tree has an interior vertex of degree {degree} (vertex {vertex})")]
    NotTrivalentInterior { vertex: usize, degree: usize },
    #[error("invalid spanning tree: {0}")]
    InvalidTree(String),
    #[error("edge {0} is not a tree edge")]
    NotTreeEdge(usize),
    #[error("graph is not a loop-tree (tree with one loop at every leaf)")]
    NotLoopTree,
    #[error("genus {0} outside supported range {MIN_GENUS}..={MAX_GENUS}")]
    GenusOutOfRange(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// An undirected multigraph. Edge `i` is `edges[i]`, stored with the smaller
/// endpoint first; `a == b` encodes a loop.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl Multigraph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut out = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            out.push((a.min(b), a.max(b)));
        }
        Ok(Multigraph {
            vertex_count,
            edges: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn endpoints(&self, edge: usize) -> (usize, usize) {
        self.edges[edge]
    }

    pub fn is_loop(&self, edge: usize) -> bool {
        let (a, b) = self.edges[edge];
        a == b
    }

    pub fn loops(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.is_loop(e)).collect()
    }

    /// Edge ends at `v` in increasing edge order; a loop appears twice.
    pub fn half_edges(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (id, &(a, b)) in self.edges.iter().enumerate() {
            if a == v {
                out.push(id);
            }
            if b == v {
                out.push(id);
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| usize::from(a == v) + usize::from(b == v))
            .sum()
    }

    /// The endpoint of `edge` opposite to `v` (itself for a loop).
    pub fn other_end(&self, edge: usize, v: usize) -> usize {
        let (a, b) = self.edges[edge];
        if a == v {
            b
        } else {
            a
        }
    }

    pub fn component_count(&self) -> usize {
        let mut dsu = Dsu::new(self.vertex_count);
        for &(a, b) in &self.edges {
            dsu.union(a, b);
        }
        dsu.sets
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.component_count() == 1
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn betti(&self) -> usize {
        self.edges.len() + self.component_count() - self.vertex_count
    }

    pub fn is_trivalent(&self) -> bool {
        (0..self.vertex_count).all(|v| self.degree(v) == 3)
    }

    pub fn ensure_connected(&self) -> Result<(), GraphError> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(GraphError::DisconnectedGraph)
        }
    }

    /// Connected and trivalent.
    pub fn ensure_trivalent(&self) -> Result<(), GraphError> {
        self.ensure_connected()?;
        if self.is_trivalent() {
            Ok(())
        } else {
            Err(GraphError::NotTrivalent)
        }
    }

    /// Vertices of degree one.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.vertex_count)
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// The same graph with vertex `v` renamed to `perm[v]`; edges are kept in
    /// their original order.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        Multigraph {
            vertex_count: self.vertex_count,
            edges: self
                .edges
                .iter()
                .map(|&(a, b)| (perm[a].min(perm[b]), perm[a].max(perm[b])))
                .collect(),
        }
    }

    /// Edges adjacent to `edge` (sharing an endpoint), excluding itself.
    pub fn adjacent_edges(&self, edge: usize) -> BTreeSet<usize> {
        let (a, b) = self.edges[edge];
        let mut out: BTreeSet<usize> = self.half_edges(a).into_iter().collect();
        out.extend(self.half_edges(b));
        out.remove(&edge);
        out
    }
}

/// A spanning tree of a specific graph, with its complement: the free edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpanningTree {
    tree_edges: Vec<usize>,
    free_edges: Vec<usize>,
}

impl SpanningTree {
    pub fn new(
        graph: &Multigraph,
        edges: impl IntoIterator<Item = usize>,
    ) -> Result<Self, GraphError> {
        let tree: BTreeSet<usize> = edges.into_iter().collect();
        if let Some(&e) = tree.iter().find(|&&e| e >= graph.edge_count()) {
            return Err(GraphError::EdgeOutOfRange(e));
        }
        if tree.len() + 1 != graph.vertex_count() {
            return Err(GraphError::InvalidTree(format!(
                "{} edges given, a spanning tree on {} vertices needs {}",
                tree.len(),
                graph.vertex_count(),
                graph.vertex_count().saturating_sub(1)
            )));
        }
        let mut dsu = Dsu::new(graph.vertex_count());
        for &e in &tree {
            let (a, b) = graph.endpoints(e);
            if !dsu.union(a, b) {
                return Err(GraphError::InvalidTree(format!("edge {e} closes a cycle")));
            }
        }
        let free_edges = (0..graph.edge_count())
            .filter(|e| !tree.contains(e))
            .collect();
        Ok(SpanningTree {
            tree_edges: tree.into_iter().collect(),
            free_edges,
        })
    }

    pub fn tree_edges(&self) -> &[usize] {
        &self.tree_edges
    }

    pub fn free_edges(&self) -> &[usize] {
        &self.free_edges
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.tree_edges.binary_search(&edge).is_ok()
    }

    pub fn is_free(&self, edge: usize) -> bool {
        self.free_edges.binary_search(&edge).is_ok()
    }

    /// Edge colours for coloured isomorphism: 0 for tree edges, 1 for free.
    pub fn edge_colors(&self, edge_count: usize) -> Vec<u8> {
        (0..edge_count)
            .map(|e| u8::from(!self.contains(e)))
            .collect()
    }

    /// Edge ids of the unique tree path between two vertices.
    pub fn path(&self, graph: &Multigraph, from: usize, to: usize) -> Vec<usize> {
        let n = graph.vertex_count();
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.tree_edges {
                let (a, b) = graph.endpoints(e);
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((v, e));
                    stack.push(w);
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, e) = parent[cur].expect("spanning tree reaches every vertex");
            out.push(e);
            cur = p;
        }
        out.reverse();
        out
    }
}

impl fmt::Display for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ids: Vec<String> = self.tree_edges.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", ids.join(","))
    }
}

/// All spanning trees, in lexicographic order of their sorted edge lists.
pub fn spanning_trees(graph: &Multigraph) -> Result<Vec<SpanningTree>, GraphError> {
    graph.ensure_connected()?;
    let candidates: Vec<usize> = (0..graph.edge_count())
        .filter(|&e| !graph.is_loop(e))
        .collect();
    let need = graph.vertex_count() - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    grow_trees(
        graph,
        &candidates,
        0,
        need,
        &mut chosen,
        Dsu::new(graph.vertex_count()),
        &mut out,
    );
    Ok(out
        .into_iter()
        .map(|edges| {
            let free_edges = (0..graph.edge_count())
                .filter(|e| !edges.contains(e))
                .collect();
            SpanningTree {
                tree_edges: edges,
                free_edges,
            }
        })
        .collect())
}

fn grow_trees(
    graph: &Multigraph,
    candidates: &[usize],
    next: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    dsu: Dsu,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == need {
        out.push(chosen.clone());
        return;
    }
    if chosen.len() + (candidates.len() - next) < need {
        return;
    }
    let e = candidates[next];
    let (a, b) = graph.endpoints(e);
    if dsu.find_const(a) != dsu.find_const(b) {
        let mut with = dsu.clone();
        with.union(a, b);
        chosen.push(e);
        grow_trees(graph, candidates, next + 1, need, chosen, with, out);
        chosen.pop();
    }
    grow_trees(graph, candidates, next + 1, need, chosen, dsu, out);
}

/// Attach one loop at every leaf of a trivalent tree. Tree edges keep their
/// ids; loops are appended in increasing leaf order.
pub fn loop_tree(tree: &Multigraph) -> Result<(Multigraph, SpanningTree), GraphError> {
    if tree.vertex_count() < 2 {
        return Err(GraphError::NotATree("needs at least one edge".into()));
    }
    if tree.edge_count() + 1 != tree.vertex_count()
        || !tree.is_connected()
        || !tree.loops().is_empty()
    {
        return Err(GraphError::NotATree("must be connected and acyclic".into()));
    }
    for v in 0..tree.vertex_count() {
        let degree = tree.degree(v);
        if degree != 1 && degree != 3 {
            return Err(GraphError::NotTrivalentInterior { vertex: v, degree });
        }
    }
    let mut edges = tree.edges().to_vec();
    edges.extend(tree.leaves().into_iter().map(|v| (v, v)));
    let graph = Multigraph::new(tree.vertex_count(), edges)?;
    let spanning = SpanningTree::new(&graph, 0..tree.edge_count())?;
    Ok((graph, spanning))
}

/// True when every free edge is a loop, i.e. `graph` is a trivalent tree with
/// a loop at each leaf and `tree` is its unique spanning tree.
pub fn is_loop_tree(graph: &Multigraph, tree: &SpanningTree) -> bool {
    graph.is_trivalent()
        && graph.is_connected()
        && tree.free_edges().iter().all(|&e| graph.is_loop(e))
}

#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
    sets: usize,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            sets: n,
        }
    }

    fn find_const(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let root = self.find_const(x);
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false if already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.sets -= 1;
        true
    }
}
