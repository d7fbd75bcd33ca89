//! Staircases: the finite complement of a monomial ideal in the orthant.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::lattice::{box_points, ExponentVector};

/// A finite set of points of `Z^n_{>=0}`.
///
/// When produced by [`cosupport`] it is the staircase of a full finite ideal
/// and its points index the monomial basis of the quotient algebra. Arbitrary
/// point sets are allowed so that lattice checks can run on synthetic input.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoSupport {
    n: usize,
    points: BTreeSet<ExponentVector>,
    corner: ExponentVector,
}

impl CoSupport {
    pub fn new<I>(n: usize, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for p in points {
            p.check_dim(n)?;
            if !p.is_nonneg() {
                return Err(Error::NegativeExponent(p));
            }
            set.insert(p);
        }
        let mut corner = vec![0; n];
        for p in &set {
            for (c, &x) in corner.iter_mut().zip(p.coords()) {
                *c = (*c).max(x);
            }
        }
        Ok(Self {
            n,
            points: set,
            corner: ExponentVector::new(corner),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, m: &ExponentVector) -> bool {
        self.points.contains(m)
    }

    /// Points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = &ExponentVector> {
        self.points.iter()
    }

    /// Componentwise maximum over all points (zero for the empty set).
    pub fn corner(&self) -> &ExponentVector {
        &self.corner
    }

    /// Points in graded order: total degree ascending, ties broken with
    /// `x_1 > x_2 > .. > x_n` (so `x` precedes `y`).
    pub fn graded_basis(&self) -> Vec<ExponentVector> {
        let mut basis: Vec<_> = self.points.iter().cloned().collect();
        basis.sort_by(graded_cmp);
        basis
    }

    /// First witness that the set is not closed under `c -> c - e_i`.
    pub fn downward_closure_violation(&self) -> Option<(ExponentVector, ExponentVector)> {
        for p in &self.points {
            for i in 0..self.n {
                if p.get(i) > 0 {
                    let below = p.shifted(i, -1);
                    if !self.points.contains(&below) {
                        return Some((p.clone(), below));
                    }
                }
            }
        }
        None
    }

    pub fn is_downward_closed(&self) -> bool {
        self.downward_closure_violation().is_none()
    }
}

pub(crate) fn graded_cmp(a: &ExponentVector, b: &ExponentVector) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then_with(|| b.cmp(a))
}

/// Enumerates `supp^c(I)` inside the pure-power box.
pub fn cosupport(ideal: &MonomialIdeal) -> Result<CoSupport> {
    ideal.ensure_full_finite()?;
    let n = ideal.n();
    let hi = ideal
        .pure_power_box()?
        .sub(&ExponentVector::new(vec![1; n]));
    let points = box_points(&ExponentVector::zero(n), &hi).filter(|m| !ideal.in_support(m));
    CoSupport::new(n, points)
}

/// Recovers the ideal whose staircase is `c`: its generators are the outer
/// corners `β ∉ C` with `β - e_i ∈ C` for every `i` in the support of `β`.
pub fn ideal_from_cosupport(c: &CoSupport) -> Result<MonomialIdeal> {
    if let Some((point, missing)) = c.downward_closure_violation() {
        return Err(Error::NotDownwardClosed { point, missing });
    }
    let n = c.n();
    let hi = c.corner().add(&ExponentVector::new(vec![1; n]));
    let corners = box_points(&ExponentVector::zero(n), &hi).filter(|b| {
        !c.contains(b) && (0..n).all(|i| b.get(i) == 0 || c.contains(&b.shifted(i, -1)))
    });
    minimalize(corners, n)
}

/// True iff the points span `Z^n` as an abelian group, i.e. the torus acts
/// faithfully on the span of these weights.
pub fn weights_generate_lattice(c: &CoSupport) -> bool {
    let rows: Vec<Vec<i128>> = c
        .points()
        .map(|p| p.coords().iter().map(|&x| x as i128).collect())
        .collect();
    lattice_index(rows, c.n()) == Some(1)
}

/// Index of the sublattice spanned by `rows` in `Z^n`, or `None` when the
/// span has rank below `n`. Integer row echelon form via Euclid per column.
fn lattice_index(mut rows: Vec<Vec<i128>>, n: usize) -> Option<i128> {
    let mut index: i128 = 1;
    // a pivot is found for every column or we bail out, so the pivot row is `col`
    for col in 0..n {
        // Euclid on the column among rows[col..] until one nonzero entry remains.
        loop {
            let p = (col..rows.len())
                .filter(|&r| rows[r][col] != 0)
                .min_by_key(|&r| rows[r][col].abs())?;
            rows.swap(col, p);
            let (head, tail) = rows.split_at_mut(col + 1);
            let pivot = &head[col];
            let mut done = true;
            for row in tail.iter_mut() {
                let q = row[col] / pivot[col];
                if q != 0 {
                    for (x, y) in row[col..].iter_mut().zip(&pivot[col..]) {
                        *x -= q * y;
                    }
                }
                if row[col] != 0 {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        index *= rows[col][col].abs();
    }
    Some(index)
}
