//! Canonical labelling by exhaustive search over vertex orders.
//!
//! The code of an order `p` lists, position by position, the multiplicities
//! between `p[k]` and each of `p[k], p[0], .., p[k-1]`; the canonical code is
//! the lexicographically smallest over all orders in which every vertex is
//! adjacent to an earlier one (whenever some unused vertex is). Prefixes
//! that already compare greater than the best code are abandoned.

use super::Multigraph;

/// Isomorphism-invariant code; equal codes mean isomorphic (coloured) graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(Vec<u32>);

impl CanonicalCode {
    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

struct Search<'a> {
    n: usize,
    // weight[i * n + j]: per-colour multiplicities packed in base 16
    weight: Vec<u32>,
    adjacent: &'a [Vec<usize>],
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<(Vec<usize>, Vec<u32>)>,
    code: Vec<u32>,
}

impl Search<'_> {
    fn row(&self, depth: usize, v: usize) -> impl Iterator<Item = u32> + '_ {
        std::iter::once(self.weight[v * self.n + v]).chain(
            self.order[..depth]
                .iter()
                .map(move |&u| self.weight[v * self.n + u]),
        )
    }

    fn run(&mut self, depth: usize) {
        if depth == self.n {
            let better = match &self.best {
                None => true,
                Some((_, best)) => self.code < *best,
            };
            if better {
                self.best = Some((self.order.clone(), self.code.clone()));
            }
            return;
        }
        let mut candidates: Vec<usize> = (0..self.n)
            .filter(|&v| !self.used[v] && self.order.iter().any(|&u| self.adjacent[v].contains(&u)))
            .collect();
        if candidates.is_empty() {
            candidates = (0..self.n).filter(|&v| !self.used[v]).collect();
        }
        let offset = depth * (depth + 1) / 2;
        for v in candidates {
            self.code.truncate(offset);
            let row: Vec<u32> = self.row(depth, v).collect();
            self.code.extend_from_slice(&row);
            if let Some((_, best)) = &self.best {
                if self.code.as_slice() > &best[..self.code.len()] {
                    continue;
                }
            }
            self.order.push(v);
            self.used[v] = true;
            self.run(depth + 1);
            self.used[v] = false;
            self.order.pop();
        }
        self.code.truncate(offset);
    }
}

fn canonical_order(graph: &Multigraph, colors: &[u8]) -> (Vec<usize>, Vec<u32>) {
    let n = graph.vertex_count();
    let mut weight = vec![0u32; n * n];
    let mut adjacent = vec![Vec::new(); n];
    for (e, &(a, b)) in graph.edges().iter().enumerate() {
        let unit = 16u32.pow(u32::from(colors[e]));
        weight[a * n + b] += unit;
        if a != b {
            weight[b * n + a] += unit;
            adjacent[a].push(b);
            adjacent[b].push(a);
        }
    }
    let mut search = Search {
        n,
        weight,
        adjacent: &adjacent,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
        code: Vec::new(),
    };
    search.run(0);
    search.best.unwrap_or_default()
}

/// Canonical code of a graph with edge colours (`colors[e]` < 8, one per edge).
pub fn canonical_code(graph: &Multigraph, colors: &[u8]) -> CanonicalCode {
    assert_eq!(colors.len(), graph.edge_count(), "one colour per edge");
    let (_, body) = canonical_order(graph, colors);
    let mut code = vec![graph.vertex_count() as u32, graph.edge_count() as u32];
    code.extend(body);
    CanonicalCode(code)
}

/// The graph relabelled into canonical vertex order, with edges sorted.
/// Returns the graph and, for each new edge, the id of the original edge.
pub fn canonical_form(graph: &Multigraph, colors: &[u8]) -> (Multigraph, Vec<usize>) {
    let (order, _) = canonical_order(graph, colors);
    let mut position = vec![0; graph.vertex_count()];
    for (k, &v) in order.iter().enumerate() {
        position[v] = k;
    }
    let mut keyed: Vec<((usize, usize), u8, usize)> = graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(a, b))| {
            let (x, y) = (position[a], position[b]);
            ((x.min(y), x.max(y)), colors[e], e)
        })
        .collect();
    keyed.sort();
    let relabelled = Multigraph::new(graph.vertex_count(), keyed.iter().map(|k| k.0))
        .expect("relabelling preserves vertex range");
    (relabelled, keyed.into_iter().map(|k| k.2).collect())
}

pub fn are_isomorphic(a: &Multigraph, b: &Multigraph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a, &vec![0; a.edge_count()])
            == canonical_code(b, &vec![0; b.edge_count()])
}

/// Isomorphism preserving edge colours.
pub fn are_isomorphic_colored(
    a: &Multigraph,
    a_colors: &[u8],
    b: &Multigraph,
    b_colors: &[u8],
) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_code(a, a_colors) == canonical_code(b, b_colors)
}
