//! Lattice points of a bounded polyhedron.
//!
//! The lattice `(1/d) H Z^n` is walked through a lower-triangular basis `H`,
//! one coordinate at a time inside the bounding box of the vertices. Every
//! coordinate of `y = d x` is then an arithmetic progression given the earlier
//! ones, and a row is pruned once its best possible value over the rest of
//! the box falls short.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{vertices, HPolytope, PolyError};
use crate::lattices::GraphLattice;
use crate::rational::{common_denominator, EdgeVector, Rational};

pub const DEFAULT_POINT_CAP: usize = 10_000_000;

/// Lattice points stored as integer vectors `y`, each standing for `y / scale`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledPoints {
    pub scale: BigInt,
    pub points: Vec<Vec<i64>>,
}

impl ScaledPoints {
    pub fn to_vectors(&self) -> Vec<EdgeVector> {
        self.points
            .iter()
            .map(|y| {
                y.iter()
                    .map(|&c| Rational::new(BigInt::from(c), self.scale.clone()))
                    .collect()
            })
            .collect()
    }
}

pub fn lattice_points(p: &HPolytope, l: &GraphLattice) -> Result<Vec<EdgeVector>, PolyError> {
    lattice_points_capped(p, l, DEFAULT_POINT_CAP)
}

pub fn lattice_points_capped(
    p: &HPolytope,
    l: &GraphLattice,
    cap: usize,
) -> Result<Vec<EdgeVector>, PolyError> {
    Ok(scaled_lattice_points(p, l, cap)?.to_vectors())
}

struct IntRow {
    coeffs: Vec<i128>,
    rhs: i128,
    // best[k]: maximum of the terms after coordinate k over the box
    best: Vec<i128>,
}

struct Walk<'a> {
    hermite: &'a [Vec<i128>],
    lo: &'a [i128],
    hi: &'a [i128],
    rows: &'a [IntRow],
    cap: usize,
    y: Vec<i128>,
    z: Vec<i128>,
    partial: Vec<i128>,
    out: Vec<Vec<i64>>,
}

impl Walk<'_> {
    fn go(&mut self, i: usize) -> Result<(), PolyError> {
        let n = self.lo.len();
        if i == n {
            if self.out.len() == self.cap {
                return Err(PolyError::ResourceLimit { limit: self.cap });
            }
            let point = self
                .y
                .iter()
                .map(|&c| i64::try_from(c).map_err(|_| PolyError::Overflow))
                .collect::<Result<_, _>>()?;
            self.out.push(point);
            return Ok(());
        }
        let offset: i128 = (0..i).map(|j| self.hermite[i][j] * self.z[j]).sum();
        let step = self.hermite[i][i];
        let first = -Integer::div_floor(&(offset - self.lo[i]), &step);
        let last = Integer::div_floor(&(self.hi[i] - offset), &step);
        for zi in first..=last {
            let yi = offset + step * zi;
            self.z[i] = zi;
            self.y[i] = yi;
            let mut ok = true;
            for (k, row) in self.rows.iter().enumerate() {
                self.partial[k] += row.coeffs[i] * yi;
                if self.partial[k] + row.best[i] < row.rhs {
                    ok = false;
                }
            }
            if ok {
                self.go(i + 1)?;
            }
            for (k, row) in self.rows.iter().enumerate() {
                self.partial[k] -= row.coeffs[i] * yi;
            }
        }
        Ok(())
    }
}

fn small(x: &BigInt) -> Result<i128, PolyError> {
    // leave headroom so that products with box coordinates stay in range
    x.to_i64().map(i128::from).ok_or(PolyError::Overflow)
}

/// All points of `l` in `p` in lexicographic order, at most `cap` of them.
pub fn scaled_lattice_points(
    p: &HPolytope,
    l: &GraphLattice,
    cap: usize,
) -> Result<ScaledPoints, PolyError> {
    let n = p.ambient_dim();
    if l.ambient_dim() != n {
        return Err(PolyError::DimensionMismatch {
            expected: n,
            found: l.ambient_dim(),
        });
    }
    let scale = l.denominator().clone();
    let v = match vertices(p) {
        Ok(v) => v,
        Err(PolyError::Infeasible) => {
            return Ok(ScaledPoints {
                scale,
                points: Vec::new(),
            })
        }
        Err(e) => return Err(e),
    };
    if !v.is_bounded() {
        return Err(PolyError::Unbounded);
    }
    let d = Rational::from_integer(scale.clone());
    let mut lo = Vec::with_capacity(n);
    let mut hi = Vec::with_capacity(n);
    for i in 0..n {
        let min = v
            .vertices
            .iter()
            .map(|x| &x[i] * &d)
            .min()
            .expect("nonempty");
        let max = v
            .vertices
            .iter()
            .map(|x| &x[i] * &d)
            .max()
            .expect("nonempty");
        lo.push(small(&min.ceil().to_integer())?);
        hi.push(small(&max.floor().to_integer())?);
    }
    let hermite_cols = l.hermite_basis();
    let hermite: Vec<Vec<i128>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|j| small(&hermite_cols[j][r]))
                .collect::<Result<_, _>>()
        })
        .collect::<Result<_, _>>()?;

    let mut rows = Vec::new();
    for row in p.rows() {
        if row.normal.is_zero() {
            continue;
        }
        let target = &row.rhs * &d;
        let denom = Rational::from_integer(common_denominator(
            row.normal.iter().chain(std::iter::once(&target)),
        ));
        let coeffs: Vec<i128> = row
            .normal
            .iter()
            .map(|c| small(&(c * &denom).to_integer()))
            .collect::<Result<_, _>>()?;
        let rhs = small(&(&target * &denom).to_integer())?;
        let mut best = vec![0i128; n];
        let mut acc = 0i128;
        for k in (0..n).rev() {
            best[k] = acc;
            let c = coeffs[k];
            acc += (c * lo[k]).max(c * hi[k]);
        }
        rows.push(IntRow { coeffs, rhs, best });
    }

    let mut walk = Walk {
        hermite: &hermite,
        lo: &lo,
        hi: &hi,
        rows: &rows,
        cap,
        y: vec![0; n],
        z: vec![0; n],
        partial: vec![0; rows.len()],
        out: Vec::new(),
    };
    if n == 0 {
        walk.out.push(Vec::new());
    } else {
        walk.go(0)?;
    }
    debug_assert!(walk.out.windows(2).all(|w| w[0] < w[1]));
    Ok(ScaledPoints {
        scale,
        points: walk.out,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::{Row, RowLabel};
    use crate::rational::int;

    #[test]
    fn unit_square() {
        let sq = HPolytope::cube(2, &int(0), &int(1));
        assert_eq!(
            lattice_points(&sq, &GraphLattice::integer(2))
                .unwrap()
                .len(),
            4
        );
    }

    #[test]
    fn even_interval() {
        let p = HPolytope::cube(1, &int(0), &int(2));
        let pts = lattice_points(&p, &GraphLattice::even(1)).unwrap();
        assert_eq!(
            pts,
            vec![EdgeVector::from_ints(&[0]), EdgeVector::from_ints(&[2])]
        );
    }

    #[test]
    fn half_lattice_and_order() {
        // {x : 0 <= x_i <= 1, x_0 + x_1 <= 1} over (1/2) Z^2
        let mut p = HPolytope::cube(2, &int(0), &int(1));
        let mut rows = p.rows().to_vec();
        rows.push(Row::new(
            EdgeVector::from_ints(&[-1, -1]),
            int(-1),
            RowLabel::Custom("diag".into()),
        ));
        p = HPolytope::new(2, rows).unwrap();
        let half = GraphLattice::from_basis(
            BigInt::from(2),
            vec![vec![1.into(), 0.into()], vec![0.into(), 1.into()]],
        )
        .unwrap();
        let pts = lattice_points(&p, &half).unwrap();
        assert_eq!(pts.len(), 6);
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
    }

    #[test]
    fn cap_and_unbounded() {
        let p = HPolytope::cube(2, &int(0), &int(9));
        assert_eq!(
            lattice_points_capped(&p, &GraphLattice::integer(2), 50),
            Err(PolyError::ResourceLimit { limit: 50 })
        );
        let ray = HPolytope::new(
            1,
            vec![Row::new(
                EdgeVector::from_ints(&[1]),
                int(0),
                RowLabel::Custom("a".into()),
            )],
        )
        .unwrap();
        assert_eq!(
            lattice_points(&ray, &GraphLattice::integer(1)),
            Err(PolyError::Unbounded)
        );
    }
}
