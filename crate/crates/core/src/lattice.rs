//! Points of the character lattice `Z^n` and coordinate permutations.
//!
//! An [`ExponentVector`] stands for a monomial exponent, a derivation degree,
//! or a weight. Its derived `Ord` is the lexicographic order on coordinates,
//! which is the canonical order used for generator lists and point sets.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The standard basis vector `e_i` (0-based index).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        Self(coords)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// True when every coordinate is `>= 0`, i.e. the point lies in the orthant.
    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Componentwise `self <= other`; on the orthant this is monomial divisibility.
    pub fn le(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn check_dim(&self, n: usize) -> Result<()> {
        if self.dim() == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: n,
                found: self.dim(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Adds `delta` to coordinate `i`.
    pub fn shifted(&self, i: usize, delta: i64) -> Self {
        let mut coords = self.0.clone();
        coords[i] += delta;
        Self(coords)
    }

    /// Image under the coordinate permutation: `(σ·v)[σ(i)] = v[i]`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        debug_assert_eq!(self.dim(), sigma.len());
        let mut coords = vec![0; self.dim()];
        for (i, &c) in self.0.iter().enumerate() {
            coords[sigma.apply(i)] = c;
        }
        Self(coords)
    }

    /// Space-separated coordinates, as used in the line-oriented formats.
    pub fn to_record(&self) -> String {
        self.0
            .iter()
            .map(i64::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl From<Vec<i64>> for ExponentVector {
    fn from(coords: Vec<i64>) -> Self {
        Self(coords)
    }
}

impl<const N: usize> From<[i64; N]> for ExponentVector {
    fn from(coords: [i64; N]) -> Self {
        Self(coords.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Iterates the integer points of the box `[lo, hi]` (inclusive) in
/// lexicographic order. Empty when some `lo_i > hi_i`.
pub fn box_points(lo: &ExponentVector, hi: &ExponentVector) -> BoxPoints {
    debug_assert_eq!(lo.dim(), hi.dim());
    let empty = lo.0.iter().zip(&hi.0).any(|(a, b)| a > b);
    BoxPoints {
        lo: lo.0.clone(),
        hi: hi.0.clone(),
        next: if empty { None } else { Some(lo.0.clone()) },
    }
}

pub struct BoxPoints {
    lo: Vec<i64>,
    hi: Vec<i64>,
    next: Option<Vec<i64>>,
}

impl Iterator for BoxPoints {
    type Item = ExponentVector;

    fn next(&mut self) -> Option<ExponentVector> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        while i > 0 {
            i -= 1;
            if succ[i] < self.hi[i] {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = self.lo[i];
        }
        Some(ExponentVector(current))
    }
}

/// A permutation of `{0, .., n-1}` in one-line notation: `sigma[i] = σ(i)`.
///
/// Acting on variables it sends `x_i` to `x_{σ(i)}`. The derived `Ord` is the
/// lexicographic order on one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &j in &images {
            if j >= n || seen[j] {
                return Err(Error::InvalidArgument(format!(
                    "{images:?} is not a permutation of 0..{n}"
                )));
            }
            seen[j] = true;
        }
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&j| self.0[j]).collect())
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n).collect()),
        }
    }
}

impl fmt::Display for Permutation {
    /// 1-based one-line notation, e.g. `[2 1]` for the swap.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, j) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", j + 1)?;
        }
        write!(f, "]")
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if next_permutation(&mut succ) {
            self.next = Some(succ);
        }
        Some(Permutation(current))
    }
}

/// Advances to the lexicographic successor; false when `v` was the last one.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
