//! Plain-text graph files:
//!
//! ```text
//! # comment
//! vertices 2
//! edge 0 0
//! edge 1 1
//! edge 0 1
//! tree 2
//! ```
//!
//! Edge ids follow file order. The `tree` line is optional.

use super::{GraphError, Multigraph};

fn parse_usize(token: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    token
        .ok_or_else(|| GraphError::Parse {
            line,
            message: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| GraphError::Parse {
            line,
            message: format!("invalid {what}"),
        })
}

/// Parse a graph file, returning the graph and the tree edge ids if a `tree`
/// line is present.
pub fn parse_graph_text(text: &str) -> Result<(Multigraph, Option<Vec<usize>>), GraphError> {
    let mut vertex_count = None;
    let mut edges = Vec::new();
    let mut tree = None;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("vertices") => {
                if vertex_count.is_some() {
                    return Err(GraphError::Parse {
                        line,
                        message: "duplicate vertices line".into(),
                    });
                }
                vertex_count = Some(parse_usize(tokens.next(), line, "vertex count")?);
            }
            Some("edge") => {
                if vertex_count.is_none() {
                    return Err(GraphError::Parse {
                        line,
                        message: "edge before vertices line".into(),
                    });
                }
                let a = parse_usize(tokens.next(), line, "endpoint")?;
                let b = parse_usize(tokens.next(), line, "endpoint")?;
                edges.push((a, b));
            }
            Some("tree") => {
                let ids = tokens
                    .map(|t| parse_usize(Some(t), line, "tree edge id"))
                    .collect::<Result<Vec<_>, _>>()?;
                tree = Some(ids);
                continue;
            }
            Some(other) => {
                return Err(GraphError::Parse {
                    line,
                    message: format!("unknown directive `{other}`"),
                });
            }
            None => unreachable!("empty lines skipped"),
        }
        if tokens.next().is_some() {
            return Err(GraphError::Parse {
                line,
                message: "trailing tokens".into(),
            });
        }
    }
    let vertex_count = vertex_count.ok_or(GraphError::Parse {
        line: 0,
        message: "missing vertices line".into(),
    })?;
    Ok((Multigraph::new(vertex_count, edges)?, tree))
}

pub fn to_graph_text(graph: &Multigraph, tree: Option<&[usize]>) -> String {
    let mut out = format!("vertices {}\n", graph.vertex_count());
    for &(a, b) in graph.edges() {
        out.push_str(&format!("edge {a} {b}\n"));
    }
    if let Some(ids) = tree {
        let ids: Vec<String> = ids.iter().map(ToString::to_string).collect();
        out.push_str(&format!("tree {}\n", ids.join(" ")));
    }
    out
}
