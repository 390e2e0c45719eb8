//! A half-integral vertex of `3P` that rules out reflexivity.
//!
//! Applies when the graph has at least two loops but fewer loops than its
//! genus, and `f` is a free non-loop edge whose endpoints meet no other free
//! edge. Such an `f` lies on a path joining two loop vertices that otherwise
//! runs through the tree; the point that is 3 on the path, 3/2 on the two
//! loops and 0 elsewhere is a vertex of `3P` not in `M`.

use num_traits::Zero;
use serde::Serialize;

use super::AnalysisError;
use crate::graphs::{Multigraph, SpanningTree};
use crate::lattices::m_lattice;
use crate::linalg;
use crate::polyhedra::dilate;
use crate::polytopes::polytope_p;
use crate::rational::{int, ratio, EdgeVector, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionWitness {
    pub point: EdgeVector,
    pub free_edge: usize,
    pub loops: (usize, usize),
    /// Non-loop edges carrying the value 3, sorted.
    pub path: Vec<usize>,
    pub in_polytope: bool,
    /// Rank of the rows of `3P` tight at the point.
    pub tight_rank: usize,
    pub dim: usize,
    pub in_lattice: bool,
}

impl ObstructionWitness {
    pub fn is_vertex(&self) -> bool {
        self.in_polytope && self.tight_rank == self.dim
    }
}

/// Checks the hypotheses on the graph, tree and edge.
pub fn obstruction_applies(
    g: &Multigraph,
    t: &SpanningTree,
    f: usize,
) -> Result<(), AnalysisError> {
    let na = |s: &str| Err(AnalysisError::ObstructionNotApplicable(s.to_string()));
    let loops = g.loops().len();
    if loops < 2 {
        return na("fewer than two loops");
    }
    if loops >= g.betti() {
        return na("every cycle is a loop");
    }
    if f >= g.edge_count() || !t.is_free(f) {
        return na("edge is not a free edge");
    }
    if g.is_loop(f) {
        return na("edge is a loop");
    }
    if g.adjacent_edges(f).iter().any(|&e| e != f && t.is_free(e)) {
        return na("edge meets another free edge");
    }
    Ok(())
}

/// Free edges for which the hypotheses hold.
pub fn obstruction_edges(g: &Multigraph, t: &SpanningTree) -> Vec<usize> {
    t.free_edges()
        .iter()
        .copied()
        .filter(|&f| obstruction_applies(g, t, f).is_ok())
        .collect()
}

fn path_vertices(g: &Multigraph, from: usize, edges: &[usize]) -> Vec<usize> {
    let mut out = vec![from];
    let mut at = from;
    for &e in edges {
        at = g.other_end(e, at);
        out.push(at);
    }
    out
}

fn loop_vertex(g: &Multigraph, l: usize) -> usize {
    g.endpoints(l).0
}

pub fn obstruction_witness(
    g: &Multigraph,
    t: &SpanningTree,
    f: usize,
) -> Result<ObstructionWitness, AnalysisError> {
    obstruction_applies(g, t, f)?;
    let (a, b) = g.endpoints(f);
    let loops = g.loops();
    let mut chosen = None;
    'search: for (i, &l1) in loops.iter().enumerate() {
        for &l2 in &loops[i + 1..] {
            for (x, y) in [(a, b), (b, a)] {
                let (u1, u2) = (loop_vertex(g, l1), loop_vertex(g, l2));
                let first = t.path(g, u1, x);
                let second = t.path(g, y, u2);
                let vs1 = path_vertices(g, u1, &first);
                let vs2 = path_vertices(g, y, &second);
                if vs1.iter().all(|v| !vs2.contains(v)) {
                    let mut path: Vec<usize> = first.into_iter().chain(second).chain([f]).collect();
                    path.sort_unstable();
                    chosen = Some((l1, l2, path));
                    break 'search;
                }
            }
        }
    }
    let Some((l1, l2, path)) = chosen else {
        return Err(AnalysisError::ObstructionNotApplicable(
            "no loop path through the edge".into(),
        ));
    };

    let m = g.edge_count();
    let mut coords = vec![Rational::zero(); m];
    for &e in &path {
        coords[e] = int(3);
    }
    coords[l1] = ratio(3, 2);
    coords[l2] = ratio(3, 2);
    let point = EdgeVector::new(coords);

    let three_p = dilate(&polytope_p(g, t)?, &int(3))?;
    let in_polytope = three_p.contains(&point);
    let tight: Vec<Vec<Rational>> = three_p
        .rows()
        .iter()
        .filter(|r| r.slack(&point) == Rational::zero())
        .map(|r| r.normal.coords().to_vec())
        .collect();
    let in_lattice = m_lattice(g)?.contains(&point)?;
    Ok(ObstructionWitness {
        point,
        free_edge: f,
        loops: (l1, l2),
        path,
        in_polytope,
        tight_rank: linalg::rank(&tight),
        dim: m,
        in_lattice,
    })
}
