//! The finite monomial algebra `A = K[x]/I` with its monomial basis, and the
//! torus weight decomposition of its derivation algebra.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;

use num_traits::Zero;

use crate::cosupport::{cosupport, CoSupport};
use crate::derivation::{check_derivation, weight_space, HomogeneousDerivation, WeightSpace};
use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, Permutation};
use crate::matrix::{DerivationMatrix, SparseMatrix};

/// A full finite monomial algebra together with its staircase basis.
#[derive(Clone, Debug)]
pub struct QuotientAlgebra {
    ideal: MonomialIdeal,
    cosupport: CoSupport,
    basis: Arc<[ExponentVector]>,
    index: HashMap<ExponentVector, usize>,
}

impl QuotientAlgebra {
    pub fn new(ideal: MonomialIdeal) -> Result<Self> {
        let cosupport = cosupport(&ideal)?;
        let basis: Arc<[ExponentVector]> = cosupport.graded_basis().into();
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Ok(Self {
            ideal,
            cosupport,
            basis,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.ideal.n()
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn cosupport(&self) -> &CoSupport {
        &self.cosupport
    }

    /// Monomial basis in graded order; positions index matrix rows and columns.
    pub fn basis(&self) -> &[ExponentVector] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, m: &ExponentVector) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Triviality test: `∂̄_{α,p} = 0` iff no staircase point `c`
    /// has `c - α >= 0` with `p(c - α) != 0`.
    pub fn is_trivial_on_quotient(&self, d: &HomogeneousDerivation) -> bool {
        self.cosupport.points().all(|c| {
            let source = c.sub(d.degree());
            !source.is_nonneg() || d.evaluate(&source).is_zero()
        })
    }

    /// Matrix of `∂̄_{α,p}`: entry `(m + α, m) = p(m)` whenever `m + α` is a basis monomial.
    pub fn derivation_matrix(&self, d: &HomogeneousDerivation) -> Result<DerivationMatrix> {
        check_derivation(&self.ideal, d)?;
        let mut matrix = SparseMatrix::zero(self.dim());
        for (col, m) in self.basis.iter().enumerate() {
            if let Some(row) = self.index_of(&m.add(d.degree())) {
                matrix.set(row, col, d.evaluate(m));
            }
        }
        Ok(DerivationMatrix {
            basis: self.basis.clone(),
            matrix,
        })
    }

    /// `[∂_{α,p}, ∂_{β,q}] = ∂_{α+β, p(β)q - q(α)p}`.
    pub fn lie_bracket(
        &self,
        d1: &HomogeneousDerivation,
        d2: &HomogeneousDerivation,
    ) -> Result<HomogeneousDerivation> {
        check_derivation(&self.ideal, d1)?;
        check_derivation(&self.ideal, d2)?;
        let p_beta = d1.evaluate(d2.degree());
        let q_alpha = d2.evaluate(d1.degree());
        let covector = d1
            .covector()
            .iter()
            .zip(d2.covector())
            .map(|(p, q)| &p_beta * q - &q_alpha * p)
            .collect();
        HomogeneousDerivation::new(d1.degree().add(d2.degree()), covector)
    }

    /// Degrees that can carry a nonzero weight space: `c - e_i` in the orthant
    /// (inner) and `c - e_k` with `c_k = 0` (outer), for `c` in the staircase.
    pub fn candidate_degrees(&self) -> BTreeSet<ExponentVector> {
        let mut candidates = BTreeSet::new();
        for c in self.cosupport.points() {
            for i in 0..self.n() {
                candidates.insert(c.shifted(i, -1));
            }
        }
        candidates
    }

    pub fn weight_decomposition(&self) -> WeightDecomposition {
        let spaces = self
            .candidate_degrees()
            .into_iter()
            .filter_map(|alpha| {
                let space = weight_space(&self.ideal, &alpha).expect("dimension checked");
                (space.dim() > 0).then_some((alpha, space))
            })
            .collect();
        WeightDecomposition {
            n: self.n(),
            spaces,
        }
    }

    pub fn aut_weight_report(&self) -> AutWeightReport {
        AutWeightReport::from_decomposition(&self.weight_decomposition(), self.dim())
    }
}

/// `g = ⊕ g_α`, restricted to degrees with `g_α != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDecomposition {
    pub n: usize,
    pub spaces: BTreeMap<ExponentVector, WeightSpace>,
}

impl WeightDecomposition {
    pub fn dim_at(&self, alpha: &ExponentVector) -> usize {
        self.spaces.get(alpha).map_or(0, WeightSpace::dim)
    }

    pub fn dims(&self) -> BTreeMap<ExponentVector, usize> {
        self.spaces
            .iter()
            .map(|(a, w)| (a.clone(), w.dim()))
            .collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.values().map(WeightSpace::dim).sum()
    }

    /// Image under renaming variables by `σ`; basis elements stay sorted by
    /// covector index.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        let spaces = self
            .spaces
            .values()
            .map(|w| {
                let mut basis: Vec<_> = w.basis.iter().map(|d| d.permuted(sigma)).collect();
                basis.sort_by_key(HomogeneousDerivation::unit_index);
                let degree = w.degree.permuted(sigma);
                (degree.clone(), WeightSpace { degree, basis })
            })
            .collect();
        Self { n: self.n, spaces }
    }
}

/// Weight data of `Aut^0(A)`: torus rank, roots with multiplicities, Lie
/// algebra dimension, and `dim_K A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutWeightReport {
    pub torus_rank: usize,
    pub roots: BTreeMap<ExponentVector, usize>,
    pub lie_dim: usize,
    pub algebra_dim: usize,
}

impl AutWeightReport {
    pub fn from_decomposition(wd: &WeightDecomposition, algebra_dim: usize) -> Self {
        let roots = wd
            .dims()
            .into_iter()
            .filter(|(a, _)| !a.is_zero())
            .collect();
        Self {
            torus_rank: wd.n,
            roots,
            lie_dim: wd.total_dim(),
            algebra_dim,
        }
    }
}
