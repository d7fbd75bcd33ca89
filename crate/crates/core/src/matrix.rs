//! Exact sparse matrices over `Q`, used for derivation matrices on the
//! monomial basis of a quotient algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::derivation::Rational;
use crate::lattice::ExponentVector;

/// Square matrix storing only nonzero entries, keyed by `(row, col)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    size: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn zero(size: usize) -> Self {
        Self {
            size,
            entries: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.size && col < self.size, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nonzero_entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let mut by_row: BTreeMap<usize, Vec<(usize, &Rational)>> = BTreeMap::new();
        for (&(r, c), v) in &other.entries {
            by_row.entry(r).or_default().push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), Rational> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            if let Some(row) = by_row.get(&k) {
                for &(j, b) in row {
                    *acc.entry((i, j)).or_insert_with(Rational::zero) += a * b;
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Self {
            size: self.size,
            entries: acc,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.size, other.size);
        let mut entries = self.entries.clone();
        for (&key, v) in &other.entries {
            *entries.entry(key).or_insert_with(Rational::zero) -= v;
        }
        entries.retain(|_, v| !v.is_zero());
        Self {
            size: self.size,
            entries,
        }
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut dense = vec![vec![Rational::zero(); self.size]; self.size];
        for (&(r, c), v) in &self.entries {
            dense[r][c] = v.clone();
        }
        dense
    }
}

/// The matrix of a derivation on the ordered monomial basis of `K[x]/I`.
///
/// Column `j` is the image of `basis[j]`; each column has at most one
/// nonzero entry, in the row of `basis[j] + α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationMatrix {
    pub basis: Arc<[ExponentVector]>,
    pub matrix: SparseMatrix,
}

/// Rank over `Q` of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: &[BTreeMap<K, Rational>]) -> usize {
    let mut pivots: BTreeMap<K, BTreeMap<K, Rational>> = BTreeMap::new();
    for v in vectors {
        let mut v: BTreeMap<K, Rational> = v
            .iter()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (k.clone(), x.clone()))
            .collect();
        for (key, row) in &pivots {
            let Some(coeff) = v.get(key).cloned() else {
                continue;
            };
            let factor = coeff / &row[key];
            for (k, x) in row {
                let e = v.entry(k.clone()).or_insert_with(Rational::zero);
                *e -= &factor * x;
            }
            v.retain(|_, x| !x.is_zero());
        }
        if let Some(lead) = v.keys().next().cloned() {
            pivots.insert(lead, v);
        }
    }
    pivots.len()
}
