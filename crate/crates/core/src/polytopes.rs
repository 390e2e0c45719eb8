//! Polytopes attached to a trivalent graph and a spanning tree.
//!
//! Coordinates are edge ids. At a vertex with incident half-edges
//! `(e, f, h)` (a loop contributes two half-edges) the triangle rows are
//! `e + f - h >= 0` and its two rotations. At a loop vertex `(l, l, e)` this
//! gives `2l - e >= 0` and `e >= 0`, the latter twice; identical rows are kept
//! once, under the label of their first occurrence.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::graphs::{GraphError, Multigraph, SpanningTree};
use crate::lattices::{n_lattice, LatticeError};
use crate::polyhedra::{self, HPolytope, PolyError, Row, RowLabel, Signs, VPolytope};
use crate::rational::{int, ratio, EdgeVector, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("ray {0} is not primitive in the dual lattice")]
    NotPrimitive(String),
}

/// How loop vertices contribute triangle rows.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LoopConvention {
    /// The loop counts as two half-edges: `(l, l, e)`.
    #[default]
    HalfEdge,
    /// Loop vertices get no triangle rows. Only useful as a broken control.
    Omit,
}

fn check_graph(g: &Multigraph) -> Result<(), GraphError> {
    g.ensure_connected()?;
    g.ensure_trivalent()
}

fn check_tree(g: &Multigraph, t: &SpanningTree) -> Result<(), GraphError> {
    let rebuilt = SpanningTree::new(g, t.tree_edges().iter().copied())?;
    if rebuilt != *t {
        return Err(GraphError::InvalidTree(
            "tree does not belong to this graph".into(),
        ));
    }
    Ok(())
}

fn push_unique(rows: &mut Vec<Row>, row: Row) {
    if !rows
        .iter()
        .any(|r| r.normal == row.normal && r.rhs == row.rhs)
    {
        rows.push(row);
    }
}

fn triangle_rows_at(g: &Multigraph, v: usize, rows: &mut Vec<Row>) {
    let mut ends = g.half_edges(v);
    ends.sort_unstable();
    let m = g.edge_count();
    for signs in Signs::ALL {
        let mut normal = vec![0i64; m];
        for (k, &e) in ends.iter().enumerate() {
            normal[e] += signs.factor(k);
        }
        push_unique(
            rows,
            Row::new(
                EdgeVector::from_ints(&normal),
                Rational::zero(),
                RowLabel::Triangle { vertex: v, signs },
            ),
        );
    }
}

/// Triangle rows `normal . a >= 0` at every vertex.
pub fn triangle_rows(g: &Multigraph) -> Result<Vec<Row>, BuildError> {
    triangle_rows_with(g, LoopConvention::HalfEdge)
}

pub fn triangle_rows_with(
    g: &Multigraph,
    convention: LoopConvention,
) -> Result<Vec<Row>, BuildError> {
    check_graph(g)?;
    let mut rows = Vec::new();
    for v in 0..g.vertex_count() {
        let has_loop = g.half_edges(v).iter().any(|&e| g.is_loop(e));
        if has_loop && convention == LoopConvention::Omit {
            continue;
        }
        triangle_rows_at(g, v, &mut rows);
    }
    Ok(rows)
}

/// The cone of all weightings satisfying the triangle rows.
pub fn triangle_cone(g: &Multigraph) -> Result<HPolytope, BuildError> {
    Ok(HPolytope::new(g.edge_count(), triangle_rows(g)?)?)
}

fn boundary_row(m: usize, edge: usize, rhs: Rational) -> Row {
    Row::new(
        -&EdgeVector::unit(m, edge),
        rhs,
        RowLabel::Boundary { edge },
    )
}

/// Triangle rows plus `a(l) <= 1` for every free edge.
pub fn polytope_p(g: &Multigraph, t: &SpanningTree) -> Result<HPolytope, BuildError> {
    check_tree(g, t)?;
    let m = g.edge_count();
    let mut rows = triangle_rows(g)?;
    for &l in t.free_edges() {
        push_unique(&mut rows, boundary_row(m, l, int(-1)));
    }
    Ok(HPolytope::new(m, rows)?)
}

/// Halved triangle normals and negated free-edge units, all with rhs `-1`.
pub fn polytope_q(g: &Multigraph, t: &SpanningTree) -> Result<HPolytope, BuildError> {
    polytope_q_with(g, t, LoopConvention::HalfEdge)
}

pub fn polytope_q_with(
    g: &Multigraph,
    t: &SpanningTree,
    convention: LoopConvention,
) -> Result<HPolytope, BuildError> {
    check_tree(g, t)?;
    let m = g.edge_count();
    let half = ratio(1, 2);
    let mut rows: Vec<Row> = triangle_rows_with(g, convention)?
        .into_iter()
        .map(|r| Row::new(r.normal.scale(&half), int(-1), r.label))
        .collect();
    for &l in t.free_edges() {
        push_unique(&mut rows, boundary_row(m, l, int(-1)));
    }
    Ok(HPolytope::new(m, rows)?)
}

/// The all-twos vector, which carries `Q` onto `3P`.
pub fn twos(dim: usize) -> EdgeVector {
    EdgeVector::new(vec![int(2); dim])
}

fn check_trivalent_tree(t: &Multigraph) -> Result<(), GraphError> {
    t.ensure_connected()?;
    if t.edge_count() + 1 != t.vertex_count() {
        return Err(GraphError::NotATree(format!(
            "{} vertices and {} edges",
            t.vertex_count(),
            t.edge_count()
        )));
    }
    for v in 0..t.vertex_count() {
        let degree = t.degree(v);
        if degree != 1 && degree != 3 {
            return Err(GraphError::NotTrivalentInterior { vertex: v, degree });
        }
    }
    Ok(())
}

/// Triangle rows at the interior vertices of a trivalent tree and
/// `0 <= w(e) <= 2` at leaf edges. Its lattice is [`GraphLattice::even`].
pub fn polytope_delta(t: &Multigraph) -> Result<HPolytope, BuildError> {
    polytope_delta_with(t, true)
}

/// As [`polytope_delta`]; `leaf_nonneg = false` drops the leaf rows
/// `w(e) >= 0`, which only matters for the one-edge tree.
pub fn polytope_delta_with(t: &Multigraph, leaf_nonneg: bool) -> Result<HPolytope, BuildError> {
    check_trivalent_tree(t)?;
    let m = t.edge_count();
    let mut rows = Vec::new();
    for v in 0..t.vertex_count() {
        if t.degree(v) == 3 {
            triangle_rows_at(t, v, &mut rows);
        }
    }
    let leaf_edges: BTreeSet<usize> = t
        .leaves()
        .into_iter()
        .flat_map(|v| t.half_edges(v))
        .collect();
    for &e in &leaf_edges {
        push_unique(
            &mut rows,
            Row::new(
                -&EdgeVector::unit(m, e),
                int(-2),
                RowLabel::LeafBound { edge: e },
            ),
        );
    }
    if leaf_nonneg {
        for &e in &leaf_edges {
            push_unique(
                &mut rows,
                Row::new(
                    EdgeVector::unit(m, e),
                    int(0),
                    RowLabel::LeafNonneg { edge: e },
                ),
            );
        }
    }
    Ok(HPolytope::new(m, rows)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RayKind {
    Triangle {
        vertex: usize,
        signs: Signs,
    },
    Boundary {
        edge: usize,
    },
    /// `d_l - b_l` for a free edge `l`.
    Family {
        edge: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorRay {
    pub generator: EdgeVector,
    pub kind: RayKind,
}

fn kind_of(label: &RowLabel) -> RayKind {
    match label {
        RowLabel::Triangle { vertex, signs } => RayKind::Triangle {
            vertex: *vertex,
            signs: *signs,
        },
        RowLabel::Boundary { edge } => RayKind::Boundary { edge: *edge },
        other => unreachable!("no ray kind for row {other}"),
    }
}

fn vector_to_rows(vs: &VPolytope) -> Vec<Row> {
    vs.rays
        .iter()
        .enumerate()
        .map(|(i, r)| {
            Row::new(
                r.clone(),
                Rational::zero(),
                RowLabel::Custom(format!("ray{i}")),
            )
        })
        .collect()
}

/// Extreme rays of the dual of the triangle cone, found by running the
/// double description method twice, each scaled primitive in `N`.
pub fn triangle_dual_rays(g: &Multigraph) -> Result<Vec<DivisorRay>, BuildError> {
    let cone = triangle_cone(g)?;
    let m = g.edge_count();
    let primal = polyhedra::vertices(&cone)?;
    let dual = HPolytope::new(m, vector_to_rows(&primal))?;
    let dual_rays = polyhedra::vertices(&dual)?;
    let lattice = n_lattice(g)?;
    let mut out = Vec::new();
    for r in &dual_rays.rays {
        // An extreme ray of a cone generated by the normals is one of them.
        let row = cone
            .rows()
            .iter()
            .find(|row| is_positive_multiple(&row.normal, r))
            .expect("dual extreme ray is a triangle normal");
        out.push(DivisorRay {
            generator: lattice.primitive_scale(r)?,
            kind: kind_of(&row.label),
        });
    }
    out.sort_by(|a, b| a.kind.cmp(&b.kind));
    Ok(out)
}

fn is_positive_multiple(a: &EdgeVector, b: &EdgeVector) -> bool {
    let Some(i) = (0..a.dim()).find(|&i| !a[i].is_zero()) else {
        return false;
    };
    if b[i].is_zero() || a[i].is_positive() != b[i].is_positive() {
        return false;
    }
    let f = &b[i] / &a[i];
    a.scale(&f) == *b
}

/// Rays in `R^E x R^F`: the family rays `d_l - b_l` followed by `(v, 0)` for
/// each extreme ray `v` of the dual triangle cone. Coordinate `|E| + j`
/// belongs to the `j`-th free edge.
pub fn dual_cone_rays(g: &Multigraph, t: &SpanningTree) -> Result<Vec<DivisorRay>, BuildError> {
    check_tree(g, t)?;
    let m = g.edge_count();
    let free = t.free_edges();
    let dim = m + free.len();
    let mut out = Vec::new();
    for (j, &l) in free.iter().enumerate() {
        let mut v = vec![Rational::zero(); dim];
        v[l] = -Rational::one();
        v[m + j] = Rational::one();
        out.push(DivisorRay {
            generator: EdgeVector::new(v),
            kind: RayKind::Family { edge: l },
        });
    }
    for r in triangle_dual_rays(g)? {
        let mut v = r.generator.into_coords();
        v.resize(dim, Rational::zero());
        out.push(DivisorRay {
            generator: EdgeVector::new(v),
            kind: r.kind,
        });
    }
    Ok(out)
}

/// One ray per row of `Q`: the halved triangle normals and `-b_l` for free
/// edges, each checked primitive in `N`.
pub fn anticanonical_rays(g: &Multigraph, t: &SpanningTree) -> Result<Vec<DivisorRay>, BuildError> {
    let q = polytope_q(g, t)?;
    let lattice = n_lattice(g)?;
    q.rows()
        .iter()
        .map(|row| {
            if !lattice.is_primitive(&row.normal)? {
                return Err(BuildError::NotPrimitive(row.normal.to_string()));
            }
            Ok(DivisorRay {
                generator: row.normal.clone(),
                kind: kind_of(&row.label),
            })
        })
        .collect()
}

/// `{x : <ray, x> >= -1 for every ray}`.
pub fn polytope_from_rays(dim: usize, rays: &[DivisorRay]) -> Result<HPolytope, BuildError> {
    let rows = rays
        .iter()
        .map(|r| {
            let label = match &r.kind {
                RayKind::Triangle { vertex, signs } => RowLabel::Triangle {
                    vertex: *vertex,
                    signs: *signs,
                },
                RayKind::Boundary { edge } => RowLabel::Boundary { edge: *edge },
                RayKind::Family { edge } => RowLabel::Custom(format!("family[e{edge}]")),
            };
            Row::new(r.generator.clone(), -Rational::one(), label)
        })
        .collect();
    Ok(HPolytope::new(dim, rows)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins;
    use crate::lattices::{m_lattice, GraphLattice};
    use crate::polyhedra::{dilate, lattice_points, translate, vertices};

    fn verts(data: &[&[i64]]) -> Vec<EdgeVector> {
        let mut v: Vec<EdgeVector> = data.iter().map(|x| EdgeVector::from_ints(x)).collect();
        v.sort();
        v
    }

    #[test]
    fn dumbbell_rows() {
        let (g, t) = builtins::dumbbell();
        let rows = triangle_rows(&g).unwrap();
        assert_eq!(rows.len(), 3);
        let q = polytope_q(&g, &t).unwrap();
        assert_eq!(q.rows().len(), 5);
        let normals: BTreeSet<EdgeVector> = q.rows().iter().map(|r| r.normal.clone()).collect();
        let expected: BTreeSet<EdgeVector> = [
            EdgeVector::new(vec![int(1), int(0), ratio(-1, 2)]),
            EdgeVector::new(vec![int(0), int(1), ratio(-1, 2)]),
            EdgeVector::new(vec![int(0), int(0), ratio(1, 2)]),
            EdgeVector::from_ints(&[-1, 0, 0]),
            EdgeVector::from_ints(&[0, -1, 0]),
        ]
        .into_iter()
        .collect();
        assert_eq!(normals, expected);
        assert!(q.rows().iter().all(|r| r.rhs == int(-1)));
    }

    #[test]
    fn dumbbell_goldens() {
        let (g, t) = builtins::dumbbell();
        let q = polytope_q(&g, &t).unwrap();
        assert_eq!(
            vertices(&q).unwrap().vertices,
            verts(&[
                &[-2, -2, -2],
                &[1, -2, -2],
                &[-2, 1, -2],
                &[1, 1, -2],
                &[1, 1, 4]
            ])
        );
        let p = polytope_p(&g, &t).unwrap();
        assert_eq!(polyhedra::dim(&p).unwrap(), 3);
        let pts = lattice_points(&p, &m_lattice(&g).unwrap()).unwrap();
        assert_eq!(
            pts,
            verts(&[&[0, 0, 0], &[0, 1, 0], &[1, 0, 0], &[1, 1, 0], &[1, 1, 2]])
        );
        let inside = EdgeVector::new(vec![ratio(2, 3); 3]);
        assert!(p.contains_strictly(&inside));
    }

    #[test]
    fn theta_golden() {
        let (g, t) = builtins::theta();
        let q = polytope_q(&g, &t).unwrap();
        assert_eq!(q.rows().len(), 5);
        assert_eq!(
            vertices(&q).unwrap().vertices,
            verts(&[
                &[-2, -2, -2],
                &[1, 1, -2],
                &[1, -2, 1],
                &[-2, 1, 1],
                &[1, 1, 4]
            ])
        );
        assert!(polyhedra::origin_interior(&q));
    }

    #[test]
    fn q_plus_twos_is_three_p_for_k4() {
        let (g, t) = builtins::k4();
        let q = polytope_q(&g, &t).unwrap();
        let shifted = vertices(&translate(&q, &twos(6)).unwrap()).unwrap();
        let three = vertices(&dilate(&polytope_p(&g, &t).unwrap(), &int(3)).unwrap()).unwrap();
        assert_eq!(shifted, three);
        assert_eq!(triangle_rows(&g).unwrap().len(), 12);
    }

    #[test]
    fn delta_small_trees() {
        let edge = Multigraph::new(2, [(0, 1)]).unwrap();
        let d = polytope_delta(&edge).unwrap();
        assert_eq!(
            lattice_points(&d, &GraphLattice::even(1)).unwrap(),
            verts(&[&[0], &[2]])
        );
        let loose = polytope_delta_with(&edge, false).unwrap();
        assert!(!vertices(&loose).unwrap().is_bounded());
        let star = Multigraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let pts = lattice_points(&polytope_delta(&star).unwrap(), &GraphLattice::even(3)).unwrap();
        // brute force over {0, 2}^3 with the triangle rows
        let mut expected = Vec::new();
        for a in [0, 2] {
            for b in [0, 2] {
                for c in [0, 2] {
                    if a <= b + c && b <= a + c && c <= a + b {
                        expected.push(EdgeVector::from_ints(&[a, b, c]));
                    }
                }
            }
        }
        expected.sort();
        assert_eq!(pts, expected);
        let path = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            polytope_delta(&path),
            Err(BuildError::Graph(GraphError::NotTrivalentInterior { .. }))
        ));
    }

    #[test]
    fn rays_of_dumbbell() {
        let (g, t) = builtins::dumbbell();
        let rays = anticanonical_rays(&g, &t).unwrap();
        assert_eq!(rays.len(), 5);
        let rebuilt = polytope_from_rays(3, &rays).unwrap();
        assert_eq!(
            vertices(&rebuilt).unwrap(),
            vertices(&polytope_q(&g, &t).unwrap()).unwrap()
        );
        let cone = dual_cone_rays(&g, &t).unwrap();
        let family = cone
            .iter()
            .filter(|r| matches!(r.kind, RayKind::Family { .. }))
            .count();
        assert_eq!(family, 2);
        assert_eq!(cone.len() - family, triangle_rows(&g).unwrap().len());
        assert!(cone.iter().all(|r| r.generator.dim() == 5));
    }

    #[test]
    fn rejects_bad_input() {
        let (g, _) = builtins::k4();
        let (_, other) = builtins::dumbbell();
        assert!(matches!(polytope_p(&g, &other), Err(BuildError::Graph(_))));
        let path = Multigraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            triangle_rows(&path),
            Err(BuildError::Graph(GraphError::NotTrivalent))
        );
    }
}
