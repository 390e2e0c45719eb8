//! Small exact linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Rank of a list of row vectors.
pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Matrix = rows.to_vec();
    row_reduce(&mut m).len()
}

/// In-place reduced row echelon form; returns pivot columns.
pub fn row_reduce(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Inverse of a square matrix, or `None` if singular.
pub fn inverse(m: &[Vec<Rational>]) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

/// Lower-triangular basis `H` (columns are generators) of the integer lattice
/// spanned by the columns of `basis`, with positive diagonal.
pub fn hermite_lower(basis: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = basis.len();
    // cols[j][i]: column j, row i
    let mut cols: Vec<Vec<BigInt>> = basis.to_vec();
    for i in 0..n {
        loop {
            let nonzero: Vec<usize> = (i..n).filter(|&j| !cols[j][i].is_zero()).collect();
            if nonzero.len() <= 1 {
                if let Some(&j) = nonzero.first() {
                    cols.swap(i, j);
                }
                break;
            }
            let pivot = *nonzero
                .iter()
                .min_by(|&&a, &&b| cols[a][i].abs().cmp(&cols[b][i].abs()))
                .expect("nonempty");
            for &j in &nonzero {
                if j == pivot {
                    continue;
                }
                let q = cols[j][i].div_floor(&cols[pivot][i]);
                for r in 0..n {
                    let delta = &q * &cols[pivot][r];
                    cols[j][r] -= delta;
                }
            }
        }
        assert!(!cols[i][i].is_zero(), "basis must have full rank");
        if cols[i][i].is_negative() {
            for x in cols[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    cols
}

/// Greatest common divisor of all entries (zero for an all-zero slice).
pub fn gcd_all(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}
