//! Connected trivalent multigraphs of a given genus, up to isomorphism.
//!
//! Every connected trivalent graph of genus `g + 1 >= 3` comes from one of
//! genus `g` by either joining two subdivision points with a new edge (the two
//! points may lie on the same edge) or hanging a looped pendant vertex off a
//! subdivision point. Reversing: a graph with a loop drops its looped vertex
//! and smooths the neighbour; a loopless graph drops any non-bridge edge and
//! smooths both ends. Generation therefore starts from the dumbbell and theta
//! graphs and closes under those two moves, deduplicating by canonical code.

use std::collections::BTreeMap;

use super::canon::{canonical_code, canonical_form, CanonicalCode};
use super::{GraphError, Multigraph};

pub const MIN_GENUS: usize = 2;
pub const MAX_GENUS: usize = 5;

fn subdivide(edges: &mut Vec<(usize, usize)>, vertex_count: &mut usize, edge: usize) -> usize {
    let (a, b) = edges[edge];
    let x = *vertex_count;
    *vertex_count += 1;
    edges[edge] = (a, x);
    edges.push((x, b));
    x
}

fn join_subdivisions(graph: &Multigraph, first: usize, second: usize) -> Multigraph {
    let mut edges = graph.edges().to_vec();
    let mut n = graph.vertex_count();
    let x = subdivide(&mut edges, &mut n, first);
    // After subdividing `first`, its far half is the last edge; splitting that
    // half places the second point on the same original edge.
    let target = if first == second {
        edges.len() - 1
    } else {
        second
    };
    let y = subdivide(&mut edges, &mut n, target);
    edges.push((x, y));
    Multigraph::new(n, edges).expect("subdivision keeps endpoints in range")
}

fn hang_loop(graph: &Multigraph, edge: usize) -> Multigraph {
    let mut edges = graph.edges().to_vec();
    let mut n = graph.vertex_count();
    let x = subdivide(&mut edges, &mut n, edge);
    let y = n;
    n += 1;
    edges.push((x, y));
    edges.push((y, y));
    Multigraph::new(n, edges).expect("pendant loop keeps endpoints in range")
}

fn canonical(graph: &Multigraph) -> (CanonicalCode, Multigraph) {
    let colors = vec![0; graph.edge_count()];
    (
        canonical_code(graph, &colors),
        canonical_form(graph, &colors).0,
    )
}

fn genus_two() -> BTreeMap<CanonicalCode, Multigraph> {
    let dumbbell = Multigraph::new(2, [(0, 0), (1, 1), (0, 1)]).expect("static graph");
    let theta = Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).expect("static graph");
    [dumbbell, theta].iter().map(canonical).collect()
}

fn next_genus(level: &BTreeMap<CanonicalCode, Multigraph>) -> BTreeMap<CanonicalCode, Multigraph> {
    let mut out = BTreeMap::new();
    for graph in level.values() {
        let m = graph.edge_count();
        for first in 0..m {
            for second in first..m {
                let (code, form) = canonical(&join_subdivisions(graph, first, second));
                out.entry(code).or_insert(form);
            }
            let (code, form) = canonical(&hang_loop(graph, first));
            out.entry(code).or_insert(form);
        }
    }
    out
}

/// All connected trivalent multigraphs (loops and parallel edges allowed)
/// with first Betti number `genus`, one canonical representative per
/// isomorphism class, ordered by canonical code.
pub fn enumerate_trivalent(genus: usize) -> Result<Vec<Multigraph>, GraphError> {
    if !(MIN_GENUS..=MAX_GENUS).contains(&genus) {
        return Err(GraphError::GenusOutOfRange(genus));
    }
    let mut level = genus_two();
    for _ in MIN_GENUS..genus {
        level = next_genus(&level);
    }
    Ok(level.into_values().collect())
}
