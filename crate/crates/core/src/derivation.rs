//! Homogeneous derivations `∂_{α,p}: x^m ↦ p(m) x^{m+α}` and the dimension of
//! each weight space `g_α` of the derivation algebra of `K[x]/I`.
//!
//! Inner degrees (`α >= 0`) are spanned by `∂_{α,e_i^*}` for `i ∈ E_α`.
//! Outer degrees admit at most the line through `∂_{α,e_k^*}`, where `k` is
//! the unique coordinate with `α_k = -1`, and only when that derivation
//! preserves the ideal and survives in the quotient.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, Permutation};

pub type Rational = BigRational;

pub fn rational(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// `∂_{α,p}` with degree `α` and covector `p = Σ p_i e_i^*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousDerivation {
    degree: ExponentVector,
    covector: Vec<Rational>,
}

impl HomogeneousDerivation {
    pub fn new(degree: ExponentVector, covector: Vec<Rational>) -> Result<Self> {
        if degree.dim() != covector.len() {
            return Err(Error::DimensionMismatch {
                expected: degree.dim(),
                found: covector.len(),
            });
        }
        Ok(Self { degree, covector })
    }

    pub fn from_integers(degree: ExponentVector, covector: &[i64]) -> Result<Self> {
        Self::new(degree, covector.iter().map(|&c| rational(c)).collect())
    }

    /// `∂_{α,e_i^*}` (0-based `i`).
    pub fn basis(degree: ExponentVector, i: usize) -> Self {
        let n = degree.dim();
        let mut covector = vec![Rational::zero(); n];
        covector[i] = Rational::one();
        Self { degree, covector }
    }

    pub fn n(&self) -> usize {
        self.degree.dim()
    }

    pub fn degree(&self) -> &ExponentVector {
        &self.degree
    }

    pub fn covector(&self) -> &[Rational] {
        &self.covector
    }

    pub fn is_inner(&self) -> bool {
        self.degree.is_nonneg()
    }

    /// True when the covector vanishes, i.e. the derivation is zero already on `K[x]`.
    pub fn is_zero(&self) -> bool {
        self.covector.iter().all(Zero::is_zero)
    }

    /// The pairing `p(m) = Σ p_i m_i`.
    pub fn evaluate(&self, m: &ExponentVector) -> Rational {
        self.covector
            .iter()
            .zip(m.coords())
            .filter(|(p, &x)| x != 0 && !p.is_zero())
            .fold(Rational::zero(), |acc, (p, &x)| acc + p * rational(x))
    }

    /// Index `i` when the covector is exactly `e_i^*`.
    pub fn unit_index(&self) -> Option<usize> {
        let mut found = None;
        for (i, c) in self.covector.iter().enumerate() {
            if c.is_one() && found.is_none() {
                found = Some(i);
            } else if !c.is_zero() {
                return None;
            }
        }
        found
    }

    /// Renames variables by `σ`: degree and covector coordinates move together.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        let mut covector = vec![Rational::zero(); self.n()];
        for (i, c) in self.covector.iter().enumerate() {
            covector[sigma.apply(i)] = c.clone();
        }
        Self {
            degree: self.degree.permuted(sigma),
            covector,
        }
    }
}

impl fmt::Display for HomogeneousDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d[{}; ", self.degree)?;
        if let Some(i) = self.unit_index() {
            return write!(f, "e{}*]", i + 1);
        }
        let mut first = true;
        for (i, c) in self.covector.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*e{}*", i + 1)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, "]")
    }
}

/// The homogeneous component `g_α` together with an explicit basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub degree: ExponentVector,
    pub basis: Vec<HomogeneousDerivation>,
}

impl WeightSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_inner(&self) -> bool {
        self.degree.is_nonneg()
    }
}

/// `E_α = { i : α + e_i ∈ supp^c(I) }`, as 0-based indices.
pub fn e_alpha_set(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<BTreeSet<usize>> {
    alpha.check_dim(ideal.n())?;
    Ok(e_alpha_unchecked(ideal, alpha))
}

fn e_alpha_unchecked(ideal: &MonomialIdeal, alpha: &ExponentVector) -> BTreeSet<usize> {
    (0..ideal.n())
        .filter(|&i| {
            let shifted = alpha.shifted(i, 1);
            shifted.is_nonneg() && !ideal.in_support(&shifted)
        })
        .collect()
}

/// `g_α` for inner `α`: dimension `♯E_α`, basis `∂_{α,e_i^*}` for `i ∈ E_α`.
pub fn inner_weight_space(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<WeightSpace> {
    alpha.check_dim(ideal.n())?;
    if !alpha.is_nonneg() {
        return Err(Error::NotInner(alpha.clone()));
    }
    let basis = e_alpha_unchecked(ideal, alpha)
        .into_iter()
        .map(|i| HomogeneousDerivation::basis(alpha.clone(), i))
        .collect();
    Ok(WeightSpace {
        degree: alpha.clone(),
        basis,
    })
}

pub fn inner_weight_dim(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<usize> {
    inner_weight_space(ideal, alpha).map(|w| w.dim())
}

/// For outer `α`, the unique `k` with `α_k = -1` and `α_j >= 0` otherwise.
pub fn outer_shape(alpha: &ExponentVector) -> Result<Option<usize>> {
    if alpha.is_nonneg() {
        return Err(Error::NotOuter(alpha.clone()));
    }
    Ok(outer_shape_unchecked(alpha))
}

fn outer_shape_unchecked(alpha: &ExponentVector) -> Option<usize> {
    let mut k = None;
    for (i, &a) in alpha.coords().iter().enumerate() {
        match a {
            -1 if k.is_none() => k = Some(i),
            a if a < 0 => return None,
            _ => {}
        }
    }
    k
}

/// Whether `∂_{α,e_k^*}` maps `I` into `I`. Checked on generators only: a
/// generator with `β_k = 0` is killed, otherwise `α + β` must leave the
/// orthant or stay in the ideal.
pub fn preserves_ideal(ideal: &MonomialIdeal, alpha: &ExponentVector, k: usize) -> bool {
    ideal.generators().iter().all(|beta| {
        if beta.get(k) == 0 {
            return true;
        }
        let image = alpha.add(beta);
        !image.is_nonneg() || ideal.in_support(&image)
    })
}

/// `dim g_α` for outer `α`, which is 0 or 1.
pub fn outer_weight_dim(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<usize> {
    alpha.check_dim(ideal.n())?;
    Ok(outer_weight_space(ideal, alpha)?.dim())
}

fn outer_weight_space(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<WeightSpace> {
    let k = outer_shape(alpha)?;
    let basis = match k {
        Some(k) if preserves_ideal(ideal, alpha, k) && !ideal.in_support(&alpha.shifted(k, 1)) => {
            vec![HomogeneousDerivation::basis(alpha.clone(), k)]
        }
        _ => Vec::new(),
    };
    Ok(WeightSpace {
        degree: alpha.clone(),
        basis,
    })
}

/// `g_α` for any degree, dispatching on inner/outer.
pub fn weight_space(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<WeightSpace> {
    alpha.check_dim(ideal.n())?;
    if alpha.is_nonneg() {
        inner_weight_space(ideal, alpha)
    } else {
        outer_weight_space(ideal, alpha)
    }
}

pub fn weight_dim(ideal: &MonomialIdeal, alpha: &ExponentVector) -> Result<usize> {
    weight_space(ideal, alpha).map(|w| w.dim())
}

/// Checks that `d` is induced by a derivation of `K[x]` preserving `I`.
///
/// Inner degrees always qualify. At an outer degree the covector must be a
/// multiple of `e_k^*` for the shape index `k` and the ideal must be
/// preserved; the zero covector is accepted at every degree.
pub fn check_derivation(ideal: &MonomialIdeal, d: &HomogeneousDerivation) -> Result<()> {
    d.degree().check_dim(ideal.n())?;
    if d.is_inner() || d.is_zero() {
        return Ok(());
    }
    let Some(k) = outer_shape_unchecked(d.degree()) else {
        return Err(Error::NotADerivation(format!(
            "outer degree {} has no coordinate equal to -1 with the rest nonnegative",
            d.degree()
        )));
    };
    if d.covector()
        .iter()
        .enumerate()
        .any(|(i, c)| i != k && !c.is_zero())
    {
        return Err(Error::NotADerivation(format!(
            "at outer degree {} the covector must be a multiple of e{}*",
            d.degree(),
            k + 1
        )));
    }
    if !preserves_ideal(ideal, d.degree(), k) {
        return Err(Error::NotADerivation(format!(
            "{d} does not preserve the ideal"
        )));
    }
    Ok(())
}
