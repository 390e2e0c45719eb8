//! Exact convex polyhedra in H- and V-representation.

mod dd;
mod points;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::lattices::LatticeError;
use crate::linalg;
use crate::rational::{common_denominator, format_rational, parse_rational, EdgeVector, Rational};

pub use points::{
    lattice_points, lattice_points_capped, scaled_lattice_points, ScaledPoints, DEFAULT_POINT_CAP,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate row label {0}")]
    DuplicateLabel(String),
    #[error("unknown row label {0}")]
    UnknownLabel(String),
    #[error("the inequality system has no solution")]
    Infeasible,
    #[error("the polyhedron contains a line")]
    NotPointed,
    #[error("the polyhedron is unbounded")]
    Unbounded,
    #[error("dilation factor must be positive")]
    NonPositiveFactor,
    #[error("the origin is not in the interior")]
    OriginNotInterior,
    #[error("more than {limit} lattice points")]
    ResourceLimit { limit: usize },
    #[error("deadline exceeded")]
    Timeout,
    #[error("coordinate out of machine range")]
    Overflow,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("malformed polytope JSON: {0}")]
    Json(String),
}

/// Which of the three edge-ends at a vertex carry a plus sign, in the order
/// of the sorted half-edge triple; `++-` is `a + b - c >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signs(pub [bool; 3]);

impl Signs {
    /// The three patterns with exactly one minus sign, minus last first.
    pub const ALL: [Signs; 3] = [
        Signs([true, true, false]),
        Signs([true, false, true]),
        Signs([false, true, true]),
    ];

    pub fn factor(&self, position: usize) -> i64 {
        if self.0[position] {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Signs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.0 {
            f.write_str(if s { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl FromStr for Signs {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 3 {
            return Err(());
        }
        let mut out = [false; 3];
        for (slot, c) in out.iter_mut().zip(chars) {
            *slot = match c {
                '+' => true,
                '-' => false,
                _ => return Err(()),
            };
        }
        Ok(Signs(out))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RowLabel {
    Triangle {
        vertex: usize,
        signs: Signs,
    },
    Boundary {
        edge: usize,
    },
    /// Upper bound at a leaf edge of a tree.
    LeafBound {
        edge: usize,
    },
    /// Nonnegativity at a leaf edge of a tree.
    LeafNonneg {
        edge: usize,
    },
    /// The opposite inequality added when a row is made tight.
    Reversed(Box<RowLabel>),
    Custom(String),
}

impl fmt::Display for RowLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowLabel::Triangle { vertex, signs } => write!(f, "tri[v{vertex}:{signs}]"),
            RowLabel::Boundary { edge } => write!(f, "bound[e{edge}]"),
            RowLabel::LeafBound { edge } => write!(f, "leaf[e{edge}]"),
            RowLabel::LeafNonneg { edge } => write!(f, "nonneg[e{edge}]"),
            RowLabel::Reversed(inner) => write!(f, "rev[{inner}]"),
            RowLabel::Custom(text) => f.write_str(text),
        }
    }
}

fn bracketed<'a>(s: &'a str, head: &str) -> Option<&'a str> {
    s.strip_prefix(head)?.strip_prefix('[')?.strip_suffix(']')
}

fn edge_index(s: &str) -> Option<usize> {
    s.strip_prefix('e')?.parse().ok()
}

impl FromStr for RowLabel {
    type Err = std::convert::Infallible;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parsed = (|| {
            if let Some(inner) = bracketed(s, "rev") {
                return Some(RowLabel::Reversed(Box::new(inner.parse().ok()?)));
            }
            if let Some(inner) = bracketed(s, "tri") {
                let (v, signs) = inner.split_once(':')?;
                let vertex = v.strip_prefix('v')?.parse().ok()?;
                return Some(RowLabel::Triangle {
                    vertex,
                    signs: signs.parse().ok()?,
                });
            }
            if let Some(inner) = bracketed(s, "bound") {
                return Some(RowLabel::Boundary {
                    edge: edge_index(inner)?,
                });
            }
            if let Some(inner) = bracketed(s, "leaf") {
                return Some(RowLabel::LeafBound {
                    edge: edge_index(inner)?,
                });
            }
            if let Some(inner) = bracketed(s, "nonneg") {
                return Some(RowLabel::LeafNonneg {
                    edge: edge_index(inner)?,
                });
            }
            None
        })();
        Ok(parsed.unwrap_or_else(|| RowLabel::Custom(s.to_string())))
    }
}

/// `normal . x >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Row {
    pub normal: EdgeVector,
    pub rhs: Rational,
    pub label: RowLabel,
}

impl Row {
    pub fn new(normal: EdgeVector, rhs: Rational, label: RowLabel) -> Self {
        Row { normal, rhs, label }
    }

    pub fn slack(&self, x: &EdgeVector) -> Rational {
        self.normal.dot(x) - &self.rhs
    }

    pub fn satisfied_by(&self, x: &EdgeVector) -> bool {
        !self.slack(x).is_negative()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope {
    ambient_dim: usize,
    rows: Vec<Row>,
}

impl HPolytope {
    pub fn new(ambient_dim: usize, rows: Vec<Row>) -> Result<Self, PolyError> {
        let mut seen = BTreeSet::new();
        for row in &rows {
            if row.normal.dim() != ambient_dim {
                return Err(PolyError::DimensionMismatch {
                    expected: ambient_dim,
                    found: row.normal.dim(),
                });
            }
            if !seen.insert(row.label.clone()) {
                return Err(PolyError::DuplicateLabel(row.label.to_string()));
            }
        }
        Ok(HPolytope { ambient_dim, rows })
    }

    /// The box `lo <= x_i <= hi` with custom labels.
    pub fn cube(dim: usize, lo: &Rational, hi: &Rational) -> Self {
        let mut rows = Vec::new();
        for i in 0..dim {
            let unit = EdgeVector::unit(dim, i);
            rows.push(Row::new(
                unit.clone(),
                lo.clone(),
                RowLabel::Custom(format!("min{i}")),
            ));
            rows.push(Row::new(-&unit, -hi, RowLabel::Custom(format!("max{i}"))));
        }
        HPolytope {
            ambient_dim: dim,
            rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn row(&self, label: &RowLabel) -> Option<&Row> {
        self.rows.iter().find(|r| &r.label == label)
    }

    pub fn contains(&self, x: &EdgeVector) -> bool {
        x.dim() == self.ambient_dim && self.rows.iter().all(|r| r.satisfied_by(x))
    }

    /// Strict satisfaction of every row.
    pub fn contains_strictly(&self, x: &EdgeVector) -> bool {
        x.dim() == self.ambient_dim && self.rows.iter().all(|r| r.slack(x).is_positive())
    }

    /// Same rows in another order; used to test order independence.
    pub fn with_row_order(&self, order: &[usize]) -> Self {
        HPolytope {
            ambient_dim: self.ambient_dim,
            rows: order.iter().map(|&i| self.rows[i].clone()).collect(),
        }
    }

    pub fn to_json(&self) -> HPolytopeJson {
        HPolytopeJson {
            dim: self.ambient_dim,
            rows: self
                .rows
                .iter()
                .map(|r| RowJson {
                    normal: r.normal.to_strings(),
                    rhs: format_rational(&r.rhs),
                    label: r.label.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &HPolytopeJson) -> Result<Self, PolyError> {
        let rows = json
            .rows
            .iter()
            .map(|r| {
                let normal = EdgeVector::from_strings(&r.normal)
                    .ok_or_else(|| PolyError::Json(format!("bad normal in {}", r.label)))?;
                let rhs = parse_rational(&r.rhs)
                    .ok_or_else(|| PolyError::Json(format!("bad rhs in {}", r.label)))?;
                Ok(Row::new(normal, rhs, r.label.parse().expect("infallible")))
            })
            .collect::<Result<Vec<_>, PolyError>>()?;
        HPolytope::new(json.dim, rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub normal: Vec<String>,
    pub rhs: String,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HPolytopeJson {
    pub dim: usize,
    pub rows: Vec<RowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VPolytope {
    #[serde(rename = "dim")]
    pub ambient_dim: usize,
    pub vertices: Vec<EdgeVector>,
    #[serde(default)]
    pub rays: Vec<EdgeVector>,
}

impl VPolytope {
    pub fn is_bounded(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn scale(&self, factor: &Rational) -> VPolytope {
        let mut vertices: Vec<EdgeVector> = self.vertices.iter().map(|v| v.scale(factor)).collect();
        vertices.sort();
        VPolytope {
            ambient_dim: self.ambient_dim,
            vertices,
            rays: self.rays.clone(),
        }
    }

    pub fn shift(&self, t: &EdgeVector) -> VPolytope {
        let mut vertices: Vec<EdgeVector> = self.vertices.iter().map(|v| v + t).collect();
        vertices.sort();
        VPolytope {
            ambient_dim: self.ambient_dim,
            vertices,
            rays: self.rays.clone(),
        }
    }

    /// The H-description `{x : v . x >= -1 for every vertex v}`.
    pub fn polar_rows(&self) -> HPolytope {
        let rows = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                Row::new(
                    v.clone(),
                    -Rational::one(),
                    RowLabel::Custom(format!("polar{i}")),
                )
            })
            .collect();
        HPolytope {
            ambient_dim: self.ambient_dim,
            rows,
        }
    }
}

/// Integer row `(c0, c)` with `c0 * x0 + c . x >= 0` equivalent to the input row.
fn homogenize(row: &Row) -> Vec<BigInt> {
    let denom = common_denominator(row.normal.iter().chain(std::iter::once(&row.rhs)));
    let scale = Rational::from_integer(denom);
    let mut out = Vec::with_capacity(row.normal.dim() + 1);
    out.push((-&row.rhs * &scale).to_integer());
    out.extend(row.normal.iter().map(|c| (c * &scale).to_integer()));
    let g = linalg::gcd_all(&out);
    if !g.is_zero() {
        for x in out.iter_mut() {
            *x /= &g;
        }
    }
    out
}

/// Rational basis of `{u : normal_i . u = 0 for all i}`.
fn lineality_basis(p: &HPolytope) -> Vec<EdgeVector> {
    let n = p.ambient_dim;
    let mut m: linalg::Matrix = p.rows.iter().map(|r| r.normal.coords().to_vec()).collect();
    let pivots = linalg::row_reduce(&mut m);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut u = vec![Rational::zero(); n];
            u[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                u[pc] = -m[r][f].clone();
            }
            EdgeVector::new(u)
        })
        .collect()
}

fn into_failure(f: dd::DdFailure) -> PolyError {
    match f {
        dd::DdFailure::NotPointed => PolyError::NotPointed,
        dd::DdFailure::Overflow => PolyError::Overflow,
        dd::DdFailure::Timeout => PolyError::Timeout,
    }
}

/// Vertices and extreme rays of a pointed polyhedron, both sorted.
pub fn vertices(p: &HPolytope) -> Result<VPolytope, PolyError> {
    vertices_until(p, None)
}

pub fn vertices_until(p: &HPolytope, deadline: Option<Instant>) -> Result<VPolytope, PolyError> {
    let n = p.ambient_dim;
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(p.rows.len() + 1);
    let mut x0 = vec![BigInt::zero(); n + 1];
    x0[0] = BigInt::one();
    rows.push(x0);
    rows.extend(p.rows.iter().map(homogenize));

    let lineality = lineality_basis(p);
    if !lineality.is_empty() {
        // Feasibility is decided on the slice orthogonal to the lines.
        for u in &lineality {
            let row = Row::new(u.clone(), Rational::zero(), RowLabel::Custom(String::new()));
            let h = homogenize(&row);
            rows.push(h.iter().map(|x| -x).collect());
            rows.push(h);
        }
        let rays = dd::extreme_rays(&rows, n + 1, deadline).map_err(into_failure)?;
        return if rays.iter().any(|(r, _)| r[0].is_positive()) {
            Err(PolyError::NotPointed)
        } else {
            Err(PolyError::Infeasible)
        };
    }

    let rays = dd::extreme_rays(&rows, n + 1, deadline).map_err(into_failure)?;
    let mut verts = Vec::new();
    let mut dirs = Vec::new();
    for (r, _) in rays {
        if r[0].is_positive() {
            let d = Rational::from_integer(r[0].clone());
            verts.push(
                r[1..]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()) / &d)
                    .collect::<EdgeVector>(),
            );
        } else {
            dirs.push(
                r[1..]
                    .iter()
                    .map(|x| Rational::from_integer(x.clone()))
                    .collect::<EdgeVector>(),
            );
        }
    }
    if verts.is_empty() {
        return Err(PolyError::Infeasible);
    }
    verts.sort();
    dirs.sort();
    Ok(VPolytope {
        ambient_dim: n,
        vertices: verts,
        rays: dirs,
    })
}

/// Affine dimension.
pub fn dim(p: &HPolytope) -> Result<usize, PolyError> {
    Ok(affine_dim(&vertices(p)?))
}

pub fn affine_dim(v: &VPolytope) -> usize {
    let Some(first) = v.vertices.first() else {
        return 0;
    };
    let mut span: Vec<Vec<Rational>> = v.vertices[1..]
        .iter()
        .map(|x| (x - first).into_coords())
        .collect();
    span.extend(v.rays.iter().map(|r| r.coords().to_vec()));
    linalg::rank(&span)
}

pub fn dilate(p: &HPolytope, factor: &Rational) -> Result<HPolytope, PolyError> {
    if !factor.is_positive() {
        return Err(PolyError::NonPositiveFactor);
    }
    let rows = p
        .rows
        .iter()
        .map(|r| Row::new(r.normal.clone(), &r.rhs * factor, r.label.clone()))
        .collect();
    Ok(HPolytope {
        ambient_dim: p.ambient_dim,
        rows,
    })
}

/// `p + t`.
pub fn translate(p: &HPolytope, t: &EdgeVector) -> Result<HPolytope, PolyError> {
    if t.dim() != p.ambient_dim {
        return Err(PolyError::DimensionMismatch {
            expected: p.ambient_dim,
            found: t.dim(),
        });
    }
    let rows = p
        .rows
        .iter()
        .map(|r| Row::new(r.normal.clone(), &r.rhs + r.normal.dot(t), r.label.clone()))
        .collect();
    Ok(HPolytope {
        ambient_dim: p.ambient_dim,
        rows,
    })
}

/// Strict interiority of the origin, read off the rows.
pub fn origin_interior(p: &HPolytope) -> bool {
    p.rows.iter().all(|r| r.rhs.is_negative())
}

/// Facet rows: those whose tight vertices and rays span a hyperplane.
pub fn facet_rows(p: &HPolytope, v: &VPolytope) -> Vec<usize> {
    let n = p.ambient_dim;
    let full = affine_dim(v);
    (0..p.rows.len())
        .filter(|&i| {
            let row = &p.rows[i];
            if row.normal.is_zero() {
                return false;
            }
            let mut tight: Vec<Vec<Rational>> = Vec::new();
            for x in &v.vertices {
                if row.slack(x).is_zero() {
                    let mut h = vec![Rational::one()];
                    h.extend(x.iter().cloned());
                    tight.push(h);
                }
            }
            for r in &v.rays {
                if row.normal.dot(r).is_zero() {
                    let mut h = vec![Rational::zero()];
                    h.extend(r.iter().cloned());
                    tight.push(h);
                }
            }
            full == n && linalg::rank(&tight) == n
        })
        .collect()
}

/// `p° = {y : y . x >= -1 for all x in p}` for bounded `p` with the origin
/// strictly inside, as the normalized normals of its facets.
pub fn polar_dual(p: &HPolytope) -> Result<VPolytope, PolyError> {
    if !origin_interior(p) {
        return Err(PolyError::OriginNotInterior);
    }
    let v = vertices(p)?;
    if !v.is_bounded() {
        return Err(PolyError::Unbounded);
    }
    let mut normals: Vec<EdgeVector> = facet_rows(p, &v)
        .into_iter()
        .map(|i| {
            let row = &p.rows[i];
            row.normal.scale(&(-row.rhs.recip()))
        })
        .collect();
    normals.sort();
    normals.dedup();
    Ok(VPolytope {
        ambient_dim: p.ambient_dim,
        vertices: normals,
        rays: Vec::new(),
    })
}

/// The face where the named rows hold with equality.
pub fn face(p: &HPolytope, tight: &[RowLabel]) -> Result<HPolytope, PolyError> {
    let mut out = p.clone();
    for label in tight {
        let row = p
            .row(label)
            .ok_or_else(|| PolyError::UnknownLabel(label.to_string()))?;
        let reversed = RowLabel::Reversed(Box::new(label.clone()));
        if out.row(&reversed).is_some() {
            continue;
        }
        out.rows.push(Row::new(-&row.normal, -&row.rhs, reversed));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn cube() -> HPolytope {
        HPolytope::cube(3, &int(0), &int(1))
    }

    #[test]
    fn cube_vertices() {
        let v = vertices(&cube()).unwrap();
        assert_eq!(v.vertices.len(), 8);
        assert_eq!(v.vertices[0], EdgeVector::from_ints(&[0, 0, 0]));
        assert_eq!(v.vertices[7], EdgeVector::from_ints(&[1, 1, 1]));
        assert!(v.is_bounded());
        assert_eq!(dim(&cube()).unwrap(), 3);
    }

    #[test]
    fn infeasible_and_lines() {
        let rows = vec![
            Row::new(
                EdgeVector::from_ints(&[1]),
                int(1),
                RowLabel::Custom("a".into()),
            ),
            Row::new(
                EdgeVector::from_ints(&[-1]),
                int(0),
                RowLabel::Custom("b".into()),
            ),
        ];
        assert_eq!(
            vertices(&HPolytope::new(1, rows).unwrap()),
            Err(PolyError::Infeasible)
        );
        let slab = HPolytope::new(
            2,
            vec![Row::new(
                EdgeVector::from_ints(&[1, 0]),
                int(0),
                RowLabel::Custom("a".into()),
            )],
        )
        .unwrap();
        assert_eq!(vertices(&slab), Err(PolyError::NotPointed));
        let bad = HPolytope::new(
            2,
            vec![
                Row::new(
                    EdgeVector::from_ints(&[1, 0]),
                    int(1),
                    RowLabel::Custom("a".into()),
                ),
                Row::new(
                    EdgeVector::from_ints(&[-1, 0]),
                    int(0),
                    RowLabel::Custom("b".into()),
                ),
            ],
        )
        .unwrap();
        assert_eq!(vertices(&bad), Err(PolyError::Infeasible));
    }

    #[test]
    fn unbounded_orthant_has_rays() {
        let p = HPolytope::new(
            2,
            vec![
                Row::new(
                    EdgeVector::from_ints(&[1, 0]),
                    int(1),
                    RowLabel::Custom("a".into()),
                ),
                Row::new(
                    EdgeVector::from_ints(&[0, 1]),
                    int(0),
                    RowLabel::Custom("b".into()),
                ),
            ],
        )
        .unwrap();
        let v = vertices(&p).unwrap();
        assert_eq!(v.vertices, vec![EdgeVector::from_ints(&[1, 0])]);
        assert_eq!(
            v.rays,
            vec![
                EdgeVector::from_ints(&[0, 1]),
                EdgeVector::from_ints(&[1, 0])
            ]
        );
    }

    #[test]
    fn single_point_has_dimension_zero() {
        let p = face(
            &HPolytope::cube(2, &int(0), &int(1)),
            &[
                RowLabel::Custom("min0".into()),
                RowLabel::Custom("min1".into()),
            ],
        )
        .unwrap();
        assert_eq!(dim(&p).unwrap(), 0);
        assert_eq!(
            vertices(&p).unwrap().vertices,
            vec![EdgeVector::from_ints(&[0, 0])]
        );
    }

    #[test]
    fn cube_facet() {
        let f = face(&cube(), &[RowLabel::Custom("max2".into())]).unwrap();
        let v = vertices(&f).unwrap();
        assert_eq!(v.vertices.len(), 4);
        assert!(v.vertices.iter().all(|x| x[2] == int(1)));
        assert_eq!(dim(&f).unwrap(), 2);
        assert_eq!(
            face(&cube(), &[RowLabel::Custom("nope".into())]),
            Err(PolyError::UnknownLabel("nope".into()))
        );
    }

    #[test]
    fn dilate_and_translate() {
        let c = cube();
        assert_eq!(dilate(&c, &int(1)).unwrap(), c);
        assert_eq!(dilate(&c, &int(0)), Err(PolyError::NonPositiveFactor));
        let three = vertices(&dilate(&c, &int(3)).unwrap()).unwrap();
        assert_eq!(three, vertices(&c).unwrap().scale(&int(3)));
        let t = EdgeVector::new(vec![int(1), ratio(1, 2), int(-2)]);
        let shifted = translate(&c, &t).unwrap();
        assert_eq!(vertices(&shifted).unwrap(), vertices(&c).unwrap().shift(&t));
        assert_eq!(translate(&shifted, &-&t).unwrap(), c);
        assert!(matches!(
            translate(&c, &EdgeVector::zeros(2)),
            Err(PolyError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn cube_polar_is_octahedron() {
        let c = HPolytope::cube(3, &int(-1), &int(1));
        let polar = polar_dual(&c).unwrap();
        let mut expected = Vec::new();
        for i in 0..3 {
            expected.push(EdgeVector::unit(3, i));
            expected.push(-&EdgeVector::unit(3, i));
        }
        expected.sort();
        assert_eq!(polar.vertices, expected);
        assert_eq!(polar_dual(&cube()), Err(PolyError::OriginNotInterior));
        let back = vertices(&polar.polar_rows()).unwrap();
        assert_eq!(back.vertices, vertices(&c).unwrap().vertices);
    }

    #[test]
    fn redundant_rows_are_not_facets() {
        let mut c = HPolytope::cube(2, &int(-1), &int(1));
        c.rows.push(Row::new(
            EdgeVector::from_ints(&[1, 1]),
            int(-5),
            RowLabel::Custom("loose".into()),
        ));
        assert_eq!(polar_dual(&c).unwrap().vertices.len(), 4);
    }

    #[test]
    fn labels_round_trip() {
        let labels = [
            RowLabel::Triangle {
                vertex: 3,
                signs: Signs([true, false, true]),
            },
            RowLabel::Boundary { edge: 2 },
            RowLabel::LeafBound { edge: 0 },
            RowLabel::LeafNonneg { edge: 1 },
            RowLabel::Reversed(Box::new(RowLabel::Boundary { edge: 4 })),
            RowLabel::Custom("max1".into()),
        ];
        for l in labels {
            assert_eq!(l.to_string().parse::<RowLabel>().unwrap(), l);
        }
        assert_eq!(
            RowLabel::Triangle {
                vertex: 3,
                signs: Signs::ALL[0]
            }
            .to_string(),
            "tri[v3:++-]"
        );
    }

    #[test]
    fn json_round_trip_and_duplicates() {
        let c = cube();
        let json = serde_json::to_string(&c.to_json()).unwrap();
        assert!(json
            .starts_with(r#"{"dim":3,"rows":[{"normal":["1","0","0"],"rhs":"0","label":"min0"}"#));
        let back = HPolytope::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, c);
        let dup = vec![
            Row::new(
                EdgeVector::from_ints(&[1]),
                int(0),
                RowLabel::Custom("a".into()),
            ),
            Row::new(
                EdgeVector::from_ints(&[-1]),
                int(-1),
                RowLabel::Custom("a".into()),
            ),
        ];
        assert_eq!(
            HPolytope::new(1, dup),
            Err(PolyError::DuplicateLabel("a".into()))
        );
    }
}
