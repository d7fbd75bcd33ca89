//! Recovering a monomial ideal from weight data.
//!
//! The weight function of a finite set `C ⊂ Z^n_{>=0}` is
//! `m_C(α) = ♯{ i : α + e_i ∈ C }`. It determines `C`: sweeping the first
//! coordinate upwards, `α ∈ C` iff `m_C(α - e_1)` exceeds the count already
//! explained by the points of `C` with smaller first coordinate.
//!
//! Derivation weight dimensions agree with `m_I` on inner degrees, and the
//! outer degrees adjacent to the orthant supply the rest, so the group-visible
//! dimensions are enough to rebuild the staircase and hence the ideal.

use std::collections::BTreeMap;

use crate::algebra::{QuotientAlgebra, WeightDecomposition};
use crate::cosupport::{ideal_from_cosupport, CoSupport};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, Permutation};

/// A finitely supported map `Z^n -> Z_{>=0}`; absent degrees are 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    n: usize,
    values: BTreeMap<ExponentVector, usize>,
}

impl WeightFunction {
    /// Zero values are dropped. Values must be at most `n` and the support
    /// must lie in `[-1, ∞)^n`.
    pub fn new<I>(n: usize, values: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, usize)>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut map = BTreeMap::new();
        for (alpha, v) in values {
            alpha.check_dim(n)?;
            if v == 0 {
                continue;
            }
            if v > n {
                return Err(Error::InconsistentWeightFunction(format!(
                    "value {v} at {alpha} exceeds n = {n}"
                )));
            }
            if alpha.coords().iter().any(|&a| a < -1) {
                return Err(Error::InconsistentWeightFunction(format!(
                    "support point {alpha} has a coordinate below -1"
                )));
            }
            map.insert(alpha, v);
        }
        Ok(Self { n, values: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, alpha: &ExponentVector) -> usize {
        self.values.get(alpha).copied().unwrap_or(0)
    }

    /// Nonzero values in lexicographic order of degree.
    pub fn support(&self) -> impl Iterator<Item = (&ExponentVector, usize)> {
        self.values.iter().map(|(a, &v)| (a, v))
    }
}

/// `m_C = Σ_i 1_{C - e_i}`.
pub fn weight_function_of(c: &CoSupport) -> WeightFunction {
    WeightFunction {
        n: c.n(),
        values: weight_counts(c.n(), c.points()),
    }
}

fn weight_counts<'a, I>(n: usize, points: I) -> BTreeMap<ExponentVector, usize>
where
    I: IntoIterator<Item = &'a ExponentVector>,
{
    let mut values = BTreeMap::new();
    for c in points {
        add_point(&mut values, n, c);
    }
    values
}

fn add_point(values: &mut BTreeMap<ExponentVector, usize>, n: usize, c: &ExponentVector) {
    for i in 0..n {
        *values.entry(c.shifted(i, -1)).or_insert(0) += 1;
    }
}

/// Inverts [`weight_function_of`] on subsets of the orthant.
///
/// Layer `a` of the sweep admits `α` with `α_1 = a` exactly when
/// `m(α - e_1) - m_{C_{a-1}}(α - e_1) = 1`, where `C_{a-1}` holds the points
/// found so far. Any other difference, an admitted point outside the
/// orthant, or a final mismatch `m_C != m` means `m` is not the weight
/// function of a subset of `Z^n_{>=0}`.
pub fn reconstruct_cosupport(m: &WeightFunction) -> Result<CoSupport> {
    let n = m.n();
    let mut layers: BTreeMap<i64, Vec<(&ExponentVector, usize)>> = BTreeMap::new();
    for (beta, v) in m.support() {
        layers.entry(beta.get(0)).or_default().push((beta, v));
    }
    let mut points: Vec<ExponentVector> = Vec::new();
    let mut partial: BTreeMap<ExponentVector, usize> = BTreeMap::new();
    for (_, layer) in layers {
        let mut admitted = Vec::new();
        for (beta, v) in layer {
            let explained = partial.get(beta).copied().unwrap_or(0);
            let indicator = v as i64 - explained as i64;
            let alpha = beta.shifted(0, 1);
            match indicator {
                0 => {}
                1 if alpha.is_nonneg() => admitted.push(alpha),
                1 => {
                    return Err(Error::InconsistentWeightFunction(format!(
                        "recovered point {alpha} lies outside the orthant"
                    )))
                }
                _ => {
                    return Err(Error::InconsistentWeightFunction(format!(
                        "indicator at {alpha} evaluates to {indicator}"
                    )))
                }
            }
        }
        for alpha in admitted {
            add_point(&mut partial, n, &alpha);
            points.push(alpha);
        }
    }
    if partial != m.values {
        return Err(Error::InconsistentWeightFunction(
            "recovered set does not reproduce the weight function".into(),
        ));
    }
    CoSupport::new(n, points)
}

/// Weight-space dimensions visible from the automorphism group: inner
/// degrees, and outer degrees `α` with some `α + e_k` inner. Absent degrees
/// are 0; the torus degree `0` must be present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedWeightData {
    n: usize,
    dims: BTreeMap<ExponentVector, usize>,
}

impl RestrictedWeightData {
    pub fn new<I>(n: usize, dims: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, usize)>,
    {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut map = BTreeMap::new();
        for (alpha, d) in dims {
            alpha.check_dim(n)?;
            let bound = if alpha.is_nonneg() {
                n
            } else if adjacent_axis(&alpha).is_some() {
                1
            } else {
                return Err(Error::InvalidWeightData(format!(
                    "degree {alpha} is neither inner nor adjacent to the orthant"
                )));
            };
            if d > bound {
                return Err(Error::InvalidWeightData(format!(
                    "dimension {d} at {alpha} exceeds {bound}"
                )));
            }
            if map.insert(alpha.clone(), d).is_some() {
                return Err(Error::InvalidWeightData(format!(
                    "degree {alpha} listed twice"
                )));
            }
        }
        Ok(Self { n, dims: map })
    }

    /// All weight spaces of a decomposition; every nonzero outer weight space
    /// is adjacent to the orthant.
    pub fn from_decomposition(wd: &WeightDecomposition) -> Self {
        Self {
            n: wd.n,
            dims: wd.dims(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, alpha: &ExponentVector) -> usize {
        self.dims.get(alpha).copied().unwrap_or(0)
    }

    /// Stored entries, zeros included.
    pub fn entries(&self) -> impl Iterator<Item = (&ExponentVector, usize)> {
        self.dims.iter().map(|(a, &d)| (a, d))
    }

    fn nonzero(&self) -> BTreeMap<ExponentVector, usize> {
        self.dims
            .iter()
            .filter(|(_, &d)| d > 0)
            .map(|(a, &d)| (a.clone(), d))
            .collect()
    }

    /// Renames variables by `σ`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        Self {
            n: self.n,
            dims: self
                .dims
                .iter()
                .map(|(a, &d)| (a.permuted(sigma), d))
                .collect(),
        }
    }
}

/// For outer `α`, the unique `k` with `α + e_k` inner.
fn adjacent_axis(alpha: &ExponentVector) -> Option<usize> {
    let mut k = None;
    for (i, &a) in alpha.coords().iter().enumerate() {
        if a == -1 && k.is_none() {
            k = Some(i);
        } else if a < 0 {
            return None;
        }
    }
    k
}

/// Extends the restricted data to the full weight function `m_I`.
///
/// Inner degrees copy their dimension. An adjacent outer degree `α` with
/// axis `k` gets 1 when `α + e_k` carries a nonzero weight space (that point
/// then lies in the staircase) and otherwise copies its own dimension. All
/// remaining outer degrees are 0.
pub fn extend_restricted(data: &RestrictedWeightData) -> Result<WeightFunction> {
    let n = data.n();
    let origin = ExponentVector::zero(n);
    if !data.dims.contains_key(&origin) {
        return Err(Error::MissingKey(origin));
    }
    let mut values = BTreeMap::new();
    for (alpha, d) in data.nonzero() {
        if alpha.is_nonneg() {
            for k in (0..n).filter(|&k| alpha.get(k) == 0) {
                values.insert(alpha.shifted(k, -1), 1);
            }
            values.insert(alpha, d);
        }
    }
    for (alpha, d) in data.nonzero() {
        if let Some(k) = adjacent_axis(&alpha) {
            if data.get(&alpha.shifted(k, 1)) == 0 {
                values.insert(alpha, d);
            }
        }
    }
    WeightFunction::new(n, values)
}

/// Weight data → extended weight function → staircase → ideal.
pub fn reconstruct_ideal(data: &RestrictedWeightData) -> Result<MonomialIdeal> {
    let m = extend_restricted(data)?;
    let c = reconstruct_cosupport(&m)?;
    ideal_from_cosupport(&c)
}

/// The group-visible weight data of `K[x]/I`.
pub fn weight_data_of(ideal: &MonomialIdeal) -> Result<RestrictedWeightData> {
    let algebra = QuotientAlgebra::new(ideal.clone())?;
    Ok(RestrictedWeightData::from_decomposition(
        &algebra.weight_decomposition(),
    ))
}

/// Least permutation (lexicographic, one-line notation) with `σ·I1 = I2`.
pub fn iso_check(i1: &MonomialIdeal, i2: &MonomialIdeal) -> Option<Permutation> {
    if i1.n() != i2.n() {
        return None;
    }
    Permutation::all(i1.n()).find(|sigma| &i1.permuted(sigma) == i2)
}

/// Least permutation with `σ·d1 = d2` on nonzero dimensions. Both inputs
/// are first reconstructed, so invalid data is reported as an error.
pub fn weight_data_iso_check(
    d1: &RestrictedWeightData,
    d2: &RestrictedWeightData,
) -> Result<Option<Permutation>> {
    reconstruct_ideal(d1)?;
    reconstruct_ideal(d2)?;
    if d1.n() != d2.n() {
        return Ok(None);
    }
    let target = d2.nonzero();
    Ok(Permutation::all(d1.n()).find(|sigma| d1.permuted(sigma).nonzero() == target))
}
