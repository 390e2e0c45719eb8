//! The parity lattice `M` of a graph and its dual `N`.
//!
//! `M` is the set of integer edge weightings whose incident sum at every
//! vertex is even (a loop contributes twice). Every lattice here is stored as
//! `(1/d) * B * Z^n` with an integer, full-rank basis `B`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{GraphError, Multigraph};
use crate::linalg::{self, Matrix};
use crate::rational::{common_denominator, EdgeVector, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("dimension mismatch: lattice has {expected} coordinates, vector has {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("primitive scaling of the zero vector")]
    ZeroVector,
    #[error("basis is singular or malformed")]
    SingularBasis,
    #[error("entry does not fit the JSON integer range")]
    Overflow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphLattice {
    denominator: BigInt,
    // basis[j] is generator j
    basis: Vec<Vec<BigInt>>,
    // coords = inverse * (denominator * point)
    inverse: Matrix,
}

#[derive(Serialize, Deserialize)]
pub struct LatticeJson {
    pub denominator: i64,
    pub basis: Vec<Vec<i64>>,
}

impl GraphLattice {
    /// `(1/denominator) * span(columns)`.
    pub fn from_basis(
        denominator: BigInt,
        columns: Vec<Vec<BigInt>>,
    ) -> Result<Self, LatticeError> {
        let n = columns.len();
        if !denominator.is_positive() || columns.iter().any(|c| c.len() != n) {
            return Err(LatticeError::SingularBasis);
        }
        // inverse of B, where B[i][j] = columns[j][i]
        let square: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(columns[j][i].clone()))
                    .collect()
            })
            .collect();
        let inverse = if n == 0 {
            Vec::new()
        } else {
            linalg::inverse(&square).ok_or(LatticeError::SingularBasis)?
        };
        Ok(GraphLattice {
            denominator,
            basis: columns,
            inverse,
        })
    }

    pub fn integer(dim: usize) -> Self {
        Self::scaled_identity(dim, 1)
    }

    /// All-even integer tuples.
    pub fn even(dim: usize) -> Self {
        Self::scaled_identity(dim, 2)
    }

    fn scaled_identity(dim: usize, factor: i64) -> Self {
        let columns = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| {
                        if i == j {
                            BigInt::from(factor)
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self::from_basis(BigInt::one(), columns).expect("identity has full rank")
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Generators as integer columns; the lattice is these divided by the denominator.
    pub fn basis(&self) -> &[Vec<BigInt>] {
        &self.basis
    }

    /// Generators as rational edge vectors.
    pub fn generators(&self) -> Vec<EdgeVector> {
        self.basis
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| Rational::new(x.clone(), self.denominator.clone()))
                    .collect()
            })
            .collect()
    }

    /// Absolute determinant of the integer basis (before dividing by `d`).
    pub fn basis_determinant(&self) -> BigInt {
        let n = self.ambient_dim();
        let mut m: Matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| Rational::from_integer(self.basis[j][i].clone()))
                    .collect()
            })
            .collect();
        let mut det = Rational::one();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("full rank");
            if p != c {
                m.swap(p, c);
                det = -det;
            }
            det *= m[c][c].clone();
            for r in c + 1..n {
                let f = &m[r][c] / &m[c][c];
                for k in c..n {
                    let delta = &f * &m[c][k];
                    m[r][k] -= delta;
                }
            }
        }
        det.abs().to_integer()
    }

    /// Coordinates of `point` in the generator basis.
    pub fn coordinates(&self, point: &EdgeVector) -> Result<Vec<Rational>, LatticeError> {
        self.check_dim(point)?;
        let scaled: Vec<Rational> = point
            .iter()
            .map(|c| c * Rational::from_integer(self.denominator.clone()))
            .collect();
        Ok(linalg::mat_vec(&self.inverse, &scaled))
    }

    pub fn contains(&self, point: &EdgeVector) -> Result<bool, LatticeError> {
        Ok(self.coordinates(point)?.iter().all(Rational::is_integer))
    }

    /// The positive multiple of `v` that is a primitive lattice vector.
    pub fn primitive_scale(&self, v: &EdgeVector) -> Result<EdgeVector, LatticeError> {
        if v.is_zero() {
            return Err(LatticeError::ZeroVector);
        }
        let coords = self.coordinates(v)?;
        let lcm = common_denominator(&coords);
        let integral: Vec<BigInt> = coords
            .iter()
            .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
            .collect();
        let gcd = linalg::gcd_all(&integral);
        Ok(v.scale(&Rational::new(lcm, gcd)))
    }

    pub fn is_primitive(&self, v: &EdgeVector) -> Result<bool, LatticeError> {
        Ok(!v.is_zero() && self.primitive_scale(v)? == *v)
    }

    /// `{b : <a, b> in Z for all a in self}`.
    pub fn dual(&self) -> Self {
        let n = self.ambient_dim();
        // Dual generators are the rows of B^{-1} scaled by d.
        let rows: Vec<Vec<Rational>> = self
            .inverse
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| x * Rational::from_integer(self.denominator.clone()))
                    .collect()
            })
            .collect();
        let denom = common_denominator(rows.iter().flatten());
        let columns: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| (x * Rational::from_integer(denom.clone())).to_integer())
                    .collect()
            })
            .collect();
        debug_assert_eq!(columns.len(), n);
        Self::from_basis(denom, columns).expect("dual of a full-rank lattice has full rank")
    }

    /// Same set of points, tested by mutual generator membership.
    pub fn same_lattice(&self, other: &GraphLattice) -> bool {
        self.ambient_dim() == other.ambient_dim()
            && self
                .generators()
                .iter()
                .all(|g| other.contains(g).unwrap_or(false))
            && other
                .generators()
                .iter()
                .all(|g| self.contains(g).unwrap_or(false))
    }

    pub(crate) fn hermite_basis(&self) -> Vec<Vec<BigInt>> {
        linalg::hermite_lower(&self.basis)
    }

    fn check_dim(&self, point: &EdgeVector) -> Result<(), LatticeError> {
        if point.dim() == self.ambient_dim() {
            Ok(())
        } else {
            Err(LatticeError::DimensionMismatch {
                expected: self.ambient_dim(),
                found: point.dim(),
            })
        }
    }

    pub fn to_json(&self) -> Result<LatticeJson, LatticeError> {
        let basis = self
            .basis
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| x.to_i64().ok_or(LatticeError::Overflow))
                    .collect()
            })
            .collect::<Result<Vec<Vec<i64>>, _>>()?;
        Ok(LatticeJson {
            denominator: self.denominator.to_i64().ok_or(LatticeError::Overflow)?,
            basis,
        })
    }

    pub fn from_json(json: &LatticeJson) -> Result<Self, LatticeError> {
        Self::from_basis(
            BigInt::from(json.denominator),
            json.basis
                .iter()
                .map(|c| c.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }
}

/// Incidence parity of each vertex: `parity[v][e]` is the number of ends of
/// `e` at `v`, reduced mod 2.
fn parity_matrix(graph: &Multigraph) -> Vec<Vec<bool>> {
    (0..graph.vertex_count())
        .map(|v| {
            (0..graph.edge_count())
                .map(|e| {
                    let (a, b) = graph.endpoints(e);
                    (usize::from(a == v) + usize::from(b == v)) % 2 == 1
                })
                .collect()
        })
        .collect()
}

/// The parity lattice `M` of a connected graph.
pub fn m_lattice(graph: &Multigraph) -> Result<GraphLattice, LatticeError> {
    graph.ensure_connected()?;
    let m = graph.edge_count();
    let mut rows = parity_matrix(graph);
    // Reduced row echelon form over GF(2).
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c]) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] {
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x ^= y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut columns = vec![Vec::new(); m];
    for (col, column) in columns.iter_mut().enumerate() {
        let mut v = vec![BigInt::zero(); m];
        if pivots.contains(&col) {
            // forced even
            v[col] = BigInt::from(2);
        } else {
            // free coordinate lifted from a kernel vector mod 2
            v[col] = BigInt::one();
            for (k, &p) in pivots.iter().enumerate() {
                if rows[k][col] {
                    v[p] = BigInt::one();
                }
            }
        }
        *column = v;
    }
    GraphLattice::from_basis(BigInt::one(), columns)
}

/// The dual lattice `N = Hom(M, Z)`.
pub fn n_lattice(graph: &Multigraph) -> Result<GraphLattice, LatticeError> {
    Ok(m_lattice(graph)?.dual())
}

/// Direct parity test for integer points; an independent check on `M`.
pub fn satisfies_parity(graph: &Multigraph, point: &EdgeVector) -> bool {
    if !point.is_integral() || point.dim() != graph.edge_count() {
        return false;
    }
    (0..graph.vertex_count()).all(|v| {
        let sum: BigInt = graph
            .half_edges(v)
            .iter()
            .map(|&e| point[e].to_integer())
            .sum();
        sum.is_even()
    })
}
