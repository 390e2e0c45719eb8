//! Exact rationals and edge-indexed vectors.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// `p/q` or `p`, never a decimal.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.contains('/') {
        let (n, d) = text.split_once('/')?;
        let n = BigInt::from_str(n.trim()).ok()?;
        let d = BigInt::from_str(d.trim()).ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        BigInt::from_str(text).ok().map(Rational::from_integer)
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// A point or direction in edge space: coordinate `i` belongs to edge `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeVector(Vec<Rational>);

impl EdgeVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        EdgeVector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        EdgeVector(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        EdgeVector(coords.iter().map(|&c| int(c)).collect())
    }

    /// Standard basis vector `b_edge`.
    pub fn unit(dim: usize, edge: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[edge] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn dot(&self, other: &EdgeVector) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch in dot product");
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> EdgeVector {
        EdgeVector(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(format_rational).collect()
    }

    pub fn from_strings<S: AsRef<str>>(items: &[S]) -> Option<Self> {
        items
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Option<Vec<_>>>()
            .map(EdgeVector)
    }
}

impl Index<usize> for EdgeVector {
    type Output = Rational;
    fn index(&self, index: usize) -> &Rational {
        &self.0[index]
    }
}

impl Add for &EdgeVector {
    type Output = EdgeVector;
    fn add(self, rhs: &EdgeVector) -> EdgeVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in addition");
        EdgeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &EdgeVector {
    type Output = EdgeVector;
    fn sub(self, rhs: &EdgeVector) -> EdgeVector {
        assert_eq!(self.dim(), rhs.dim(), "dimension mismatch in subtraction");
        EdgeVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &EdgeVector {
    type Output = EdgeVector;
    fn neg(self) -> EdgeVector {
        EdgeVector(self.0.iter().map(|c| -c).collect())
    }
}

impl FromIterator<Rational> for EdgeVector {
    fn from_iter<I: IntoIterator<Item = Rational>>(iter: I) -> Self {
        EdgeVector(iter.into_iter().collect())
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl Serialize for EdgeVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for EdgeVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(deserializer)?;
        EdgeVector::from_strings(&items)
            .ok_or_else(|| serde::de::Error::custom("invalid rational coordinate"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(format_rational(&ratio(-3, 6)), "-1/2");
        assert_eq!(format_rational(&int(4)), "4");
        assert_eq!(parse_rational("3/6"), Some(ratio(1, 2)));
        assert_eq!(parse_rational("-7"), Some(int(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("0.5"), None);
    }

    #[test]
    fn vector_arithmetic() {
        let a = EdgeVector::from_ints(&[1, 2, 3]);
        let b = EdgeVector::new(vec![ratio(1, 2), int(0), int(-1)]);
        assert_eq!(a.dot(&b), ratio(-5, 2));
        assert_eq!(&(&a + &b) - &b, a);
        assert!(!b.is_integral());
        assert_eq!(b.to_string(), "(1/2, 0, -1)");
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, r#"["1/2","0","-1"]"#);
        assert_eq!(serde_json::from_str::<EdgeVector>(&json).unwrap(), b);
    }
}
