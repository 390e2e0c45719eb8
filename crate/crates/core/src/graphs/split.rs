use std::collections::BTreeMap;

use super::{is_loop_tree, Dsu, GraphError, Multigraph, SpanningTree};

/// One side of a contraction split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitComponent {
    /// A lone loop whose polytope factor is the unit interval; `loop_edge`
    /// is its id in the original graph.
    Interval { loop_edge: usize },
    /// `edge_origin[i]` lists the original edges fused into component edge `i`
    /// (one id, or the two ids of a concatenated pair).
    Graph {
        graph: Multigraph,
        tree: SpanningTree,
        edge_origin: Vec<Vec<usize>>,
    },
}

impl SplitComponent {
    pub fn genus(&self) -> usize {
        match self {
            SplitComponent::Interval { .. } => 1,
            SplitComponent::Graph { graph, .. } => graph.betti(),
        }
    }

    fn sort_key(&self) -> (u8, usize) {
        match self {
            SplitComponent::Interval { loop_edge } => (0, *loop_edge),
            SplitComponent::Graph { edge_origin, .. } => (
                1,
                edge_origin
                    .iter()
                    .flatten()
                    .copied()
                    .min()
                    .unwrap_or(usize::MAX),
            ),
        }
    }
}

/// Delete the tree edge `edge` of a loop-tree and fuse the two edge ends left
/// at each of its endpoints into a single edge. A loop left without a vertex
/// becomes an [`SplitComponent::Interval`]. Components come intervals first,
/// then by smallest original edge id.
pub fn contract_split(
    graph: &Multigraph,
    tree: &SpanningTree,
    edge: usize,
) -> Result<(SplitComponent, SplitComponent), GraphError> {
    if edge >= graph.edge_count() || !tree.contains(edge) {
        return Err(GraphError::NotTreeEdge(edge));
    }
    if !is_loop_tree(graph, tree) {
        return Err(GraphError::NotLoopTree);
    }
    let (u, v) = graph.endpoints(edge);

    // Working edge list: (endpoints, origin ids); removed vertices are dropped.
    let mut work: Vec<Option<((usize, usize), Vec<usize>)>> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &ends)| Some((ends, vec![e])))
        .collect();
    work[edge] = None;
    let mut intervals = Vec::new();
    for end in [u, v] {
        let rest: Vec<usize> = graph
            .half_edges(end)
            .into_iter()
            .filter(|&e| e != edge)
            .collect();
        let (f, h) = (rest[0], rest[1]);
        if f == h {
            intervals.push(SplitComponent::Interval { loop_edge: f });
            work[f] = None;
            continue;
        }
        let x = graph.other_end(f, end);
        let y = graph.other_end(h, end);
        let mut origin = vec![f, h];
        origin.sort_unstable();
        work[f] = Some(((x.min(y), x.max(y)), origin));
        work[h] = None;
    }

    let live: Vec<((usize, usize), Vec<usize>)> = work.into_iter().flatten().collect();
    let mut dsu = Dsu::new(graph.vertex_count());
    for ((a, b), _) in &live {
        dsu.union(*a, *b);
    }
    let mut groups: BTreeMap<usize, Vec<((usize, usize), Vec<usize>)>> = BTreeMap::new();
    for item in live {
        groups.entry(dsu.find(item.0 .0)).or_default().push(item);
    }

    let mut parts = intervals;
    for (_, mut group) in groups {
        group.sort_by(|a, b| a.1.cmp(&b.1));
        let mut vertices: Vec<usize> = group.iter().flat_map(|((a, b), _)| [*a, *b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        let index = |x: usize| vertices.binary_search(&x).expect("vertex in component");
        let component = Multigraph::new(
            vertices.len(),
            group.iter().map(|((a, b), _)| (index(*a), index(*b))),
        )?;
        let tree_ids: Vec<usize> = group
            .iter()
            .enumerate()
            .filter(|(_, (_, origin))| origin.iter().all(|&e| tree.contains(e)))
            .map(|(i, _)| i)
            .collect();
        let component_tree = SpanningTree::new(&component, tree_ids)?;
        parts.push(SplitComponent::Graph {
            graph: component,
            tree: component_tree,
            edge_origin: group.into_iter().map(|(_, origin)| origin).collect(),
        });
    }
    if parts.len() != 2 {
        return Err(GraphError::NotLoopTree);
    }
    parts.sort_by_key(SplitComponent::sort_key);
    let second = parts.pop().expect("two parts");
    let first = parts.pop().expect("two parts");
    Ok((first, second))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::graphs::{are_isomorphic, loop_tree};

    #[test]
    fn dumbbell_bridge_gives_two_intervals() {
        let (g, t) = builtins::dumbbell();
        let (a, b) = contract_split(&g, &t, 2).unwrap();
        assert_eq!(a, SplitComponent::Interval { loop_edge: 0 });
        assert_eq!(b, SplitComponent::Interval { loop_edge: 1 });
    }

    #[test]
    fn star_leaf_edge_gives_interval_and_dumbbell() {
        let (g, t) = builtins::star3();
        for &e in t.tree_edges() {
            let (a, b) = contract_split(&g, &t, e).unwrap();
            assert!(matches!(a, SplitComponent::Interval { .. }));
            match b {
                SplitComponent::Graph {
                    graph,
                    tree,
                    edge_origin,
                } => {
                    assert!(are_isomorphic(&graph, &builtins::dumbbell().0));
                    assert_eq!(tree.tree_edges().len(), 1);
                    assert!(edge_origin.iter().any(|o| o.len() == 2));
                }
                other => panic!("expected dumbbell, got {other:?}"),
            }
        }
    }

    #[test]
    fn central_edge_of_genus_four_gives_two_dumbbells() {
        let tree = Multigraph::new(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let (g, t) = loop_tree(&tree).unwrap();
        let (a, b) = contract_split(&g, &t, 0).unwrap();
        for part in [a, b] {
            match part {
                SplitComponent::Graph { graph, .. } => {
                    assert!(are_isomorphic(&graph, &builtins::dumbbell().0))
                }
                other => panic!("expected dumbbell, got {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_free_edges_and_non_loop_trees() {
        let (g, t) = builtins::star3();
        assert_eq!(
            contract_split(&g, &t, t.free_edges()[0]),
            Err(GraphError::NotTreeEdge(t.free_edges()[0]))
        );
        let (k4, star) = builtins::k4();
        assert_eq!(contract_split(&k4, &star, 3), Err(GraphError::NotLoopTree));
    }
}
