//! Named graphs with a default spanning tree each.
//!
//! Edge orders are fixed so that coordinates line up with the hand-computed
//! matrices used in tests: the dumbbell and theta graphs are ordered
//! `(l1, l2, e)` with tree `{e}`, and `k4` is ordered `(l1, l2, l3, e4, e5, e6)`
//! with the star tree `{e4, e5, e6}` at vertex 3.

use crate::graphs::{loop_tree, spanning_trees, Multigraph, SpanningTree};

pub const NAMES: [&str; 7] = [
    "dumbbell", "theta", "k4", "rattle", "star3", "petersen", "k33",
];

fn with_tree(graph: Multigraph, tree: &[usize]) -> (Multigraph, SpanningTree) {
    let tree = SpanningTree::new(&graph, tree.iter().copied()).expect("builtin tree is valid");
    (graph, tree)
}

fn with_first_tree(graph: Multigraph) -> (Multigraph, SpanningTree) {
    let tree = spanning_trees(&graph)
        .expect("builtin graph is connected")
        .remove(0);
    (graph, tree)
}

/// Bridge joining two looped vertices.
pub fn dumbbell() -> (Multigraph, SpanningTree) {
    with_tree(
        Multigraph::new(2, [(0, 0), (1, 1), (0, 1)]).expect("static"),
        &[2],
    )
}

/// Three parallel edges between two vertices.
pub fn theta() -> (Multigraph, SpanningTree) {
    with_tree(
        Multigraph::new(2, [(0, 1), (0, 1), (0, 1)]).expect("static"),
        &[2],
    )
}

/// The complete graph on four vertices with the star tree at vertex 3.
pub fn k4() -> (Multigraph, SpanningTree) {
    with_tree(
        Multigraph::new(4, [(0, 2), (0, 1), (1, 2), (0, 3), (1, 3), (2, 3)]).expect("static"),
        &[3, 4, 5],
    )
}

/// Loop at vertex 0, bridge to vertex 1, which fans out to a double edge
/// between vertices 2 and 3. The tree is the star at vertex 1.
pub fn rattle() -> (Multigraph, SpanningTree) {
    with_tree(
        Multigraph::new(4, [(0, 0), (0, 1), (1, 2), (1, 3), (2, 3), (2, 3)]).expect("static"),
        &[1, 2, 3],
    )
}

/// Three-edge star with a loop at each leaf.
pub fn star3() -> (Multigraph, SpanningTree) {
    let star = Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).expect("static");
    loop_tree(&star).expect("star is a trivalent tree")
}

pub fn petersen() -> (Multigraph, SpanningTree) {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    with_first_tree(Multigraph::new(10, edges).expect("static"))
}

pub fn k33() -> (Multigraph, SpanningTree) {
    let edges = (0..3).flat_map(|i| (3..6).map(move |j| (i, j)));
    with_first_tree(Multigraph::new(6, edges).expect("static"))
}

pub fn by_name(name: &str) -> Option<(Multigraph, SpanningTree)> {
    Some(match name {
        "dumbbell" => dumbbell(),
        "theta" => theta(),
        "k4" => k4(),
        "rattle" => rattle(),
        "star3" => star3(),
        "petersen" => petersen(),
        "k33" => k33(),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_trivalent_with_expected_sizes() {
        let expected = [(2, 3), (2, 3), (4, 6), (4, 6), (4, 6), (10, 15), (6, 9)];
        for (name, (v, e)) in NAMES.iter().zip(expected) {
            let (g, t) = by_name(name).unwrap();
            assert!(g.is_trivalent(), "{name}");
            assert_eq!((g.vertex_count(), g.edge_count()), (v, e), "{name}");
            assert_eq!(t.free_edges().len(), g.betti(), "{name}");
        }
        assert!(by_name("k5").is_none());
    }
}
