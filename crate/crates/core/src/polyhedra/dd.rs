//! Double description method for pointed cones `{x : A x >= 0}`.
//!
//! Rows are added one at a time to an initial simplicial cone. Extreme rays
//! are kept with their zero sets over the rows processed so far; a positive
//! and a negative ray are combined only when they are adjacent, which is
//! decided combinatorially: no third ray is tight on every row both are.
//!
//! The arithmetic is generic so that the common case runs on checked `i128`
//! and falls back to `BigInt` only on overflow.

use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive};

use crate::linalg;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum DdFailure {
    /// The rows do not have full column rank, so the cone has a lineality space.
    NotPointed,
    Overflow,
    Timeout,
}

pub(crate) trait DdInt:
    Clone + Ord + Integer + Signed + CheckedAdd + CheckedMul + CheckedSub
{
    fn from_big(value: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl DdInt for i128 {
    fn from_big(value: &BigInt) -> Option<Self> {
        value.to_i128()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl DdInt for BigInt {
    fn from_big(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn contains(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray<T> {
    coords: Vec<T>,
    zeros: Bits,
}

fn dot<T: DdInt>(row: &[T], v: &[T]) -> Result<T, DdFailure> {
    let mut acc = T::zero();
    for (a, b) in row.iter().zip(v) {
        acc = acc
            .checked_add(&a.checked_mul(b).ok_or(DdFailure::Overflow)?)
            .ok_or(DdFailure::Overflow)?;
    }
    Ok(acc)
}

fn normalize<T: DdInt>(v: &mut [T]) {
    let g = v.iter().fold(T::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = Integer::div_floor(x, &g);
        }
    }
}

/// Extreme rays of `{x : rows * x >= 0}` with their zero sets (row indices).
pub(crate) fn extreme_rays(
    rows: &[Vec<BigInt>],
    dim: usize,
    deadline: Option<Instant>,
) -> Result<Vec<(Vec<BigInt>, Bits)>, DdFailure> {
    match run::<i128>(rows, dim, deadline) {
        Err(DdFailure::Overflow) => run::<BigInt>(rows, dim, deadline),
        other => other,
    }
}

fn initial_basis(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let candidate: Vec<Rational> = row
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        basis.push(candidate);
        if linalg::rank(&basis) == basis.len() {
            chosen.push(i);
            if chosen.len() == dim {
                return Some(chosen);
            }
        } else {
            basis.pop();
        }
    }
    None
}

fn run<T: DdInt>(
    rows: &[Vec<BigInt>],
    dim: usize,
    deadline: Option<Instant>,
) -> Result<Vec<(Vec<BigInt>, Bits)>, DdFailure> {
    let m = rows.len();
    let rows_t: Vec<Vec<T>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| T::from_big(x).ok_or(DdFailure::Overflow))
                .collect()
        })
        .collect::<Result<_, _>>()?;
    let start = initial_basis(rows, dim).ok_or(DdFailure::NotPointed)?;

    // Rays of the simplicial cone are the columns of the inverse of the
    // chosen rows, scaled to integers.
    let square: Vec<Vec<Rational>> = start
        .iter()
        .map(|&i| {
            rows[i]
                .iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    let inv = linalg::inverse(&square).expect("chosen rows are independent");
    let mut rays: Vec<Ray<T>> = Vec::with_capacity(dim);
    for j in 0..dim {
        let column: Vec<Rational> = (0..dim).map(|i| inv[i][j].clone()).collect();
        let denom = crate::rational::common_denominator(&column);
        let mut coords: Vec<T> = column
            .iter()
            .map(|x| {
                T::from_big(&(x * Rational::from_integer(denom.clone())).to_integer())
                    .ok_or(DdFailure::Overflow)
            })
            .collect::<Result<_, _>>()?;
        normalize(&mut coords);
        let mut zeros = Bits::new(m);
        for (k, &i) in start.iter().enumerate() {
            if k != j {
                zeros.set(i);
            }
        }
        rays.push(Ray { coords, zeros });
    }

    let mut processed = vec![false; m];
    for &i in &start {
        processed[i] = true;
    }
    for i in 0..m {
        if processed[i] {
            continue;
        }
        processed[i] = true;
        if deadline.is_some_and(|d| Instant::now() > d) {
            return Err(DdFailure::Timeout);
        }
        let values: Vec<T> = rays
            .iter()
            .map(|r| dot(&rows_t[i], &r.coords))
            .collect::<Result<_, _>>()?;
        let negative: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_negative())
            .collect();
        if negative.is_empty() {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    ray.zeros.set(i);
                }
            }
            continue;
        }
        let positive: Vec<usize> = (0..rays.len())
            .filter(|&k| values[k].is_positive())
            .collect();
        let mut created = Vec::new();
        for &p in &positive {
            for &q in &negative {
                let common = rays[p].zeros.and(&rays[q].zeros);
                if common.count() + 2 < dim {
                    continue;
                }
                let adjacent = rays
                    .iter()
                    .enumerate()
                    .all(|(k, r)| k == p || k == q || !r.zeros.contains(&common));
                if !adjacent {
                    continue;
                }
                let (vp, vq) = (&values[p], &values[q]);
                let mut coords = Vec::with_capacity(dim);
                for (x, y) in rays[q].coords.iter().zip(&rays[p].coords) {
                    let a = vp.checked_mul(x).ok_or(DdFailure::Overflow)?;
                    let b = vq.checked_mul(y).ok_or(DdFailure::Overflow)?;
                    coords.push(a.checked_sub(&b).ok_or(DdFailure::Overflow)?);
                }
                normalize(&mut coords);
                let mut zeros = common;
                zeros.set(i);
                created.push(Ray { coords, zeros });
            }
        }
        let mut next: Vec<Ray<T>> = Vec::with_capacity(positive.len() + created.len());
        for (k, ray) in rays.into_iter().enumerate() {
            if values[k].is_negative() {
                continue;
            }
            let mut ray = ray;
            if values[k].is_zero() {
                ray.zeros.set(i);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }
    Ok(rays
        .into_iter()
        .map(|r| (r.coords.iter().map(DdInt::to_big).collect(), r.zeros))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigInt>> {
        data.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn orthant_rays_are_unit_vectors() {
        let r = extreme_rays(&rows(&[&[1, 0], &[0, 1]]), 2, None).unwrap();
        let mut coords: Vec<Vec<BigInt>> = r.into_iter().map(|x| x.0).collect();
        coords.sort();
        assert_eq!(coords, rows(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn square_cone_has_four_rays() {
        // homogenised unit square: x0 >= 0, x >= 0, y >= 0, x <= x0, y <= x0
        let r = extreme_rays(
            &rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1]]),
            3,
            None,
        )
        .unwrap();
        assert_eq!(r.len(), 4);
    }

    #[test]
    fn lineality_is_reported() {
        assert_eq!(
            extreme_rays(&rows(&[&[1, 0]]), 2, None).unwrap_err(),
            DdFailure::NotPointed
        );
    }

    #[test]
    fn overflow_falls_back_to_bigint() {
        let big = BigInt::from(i128::MAX) * BigInt::from(4);
        let data = vec![
            vec![BigInt::one(), BigInt::zero()],
            vec![big.clone(), -BigInt::one()],
        ];
        assert!(run::<i128>(&data, 2, None).is_err());
        let r = extreme_rays(&data, 2, None).unwrap();
        assert_eq!(r.len(), 2);
    }
}
