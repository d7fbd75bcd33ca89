//! Monomial ideals of `K[x_1, .., x_n]`, stored by their minimal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, Permutation};

/// A monomial ideal given by its minimal generating antichain.
///
/// Generators are sorted lexicographically ascending and no generator
/// divides another.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<ExponentVector>,
}

/// Reduces `gens` to the unique antichain generating the same ideal.
pub fn minimalize<I>(gens: I, n: usize) -> Result<MonomialIdeal>
where
    I: IntoIterator<Item = ExponentVector>,
{
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut all = Vec::new();
    for g in gens {
        g.check_dim(n)?;
        if !g.is_nonneg() {
            return Err(Error::NegativeExponent(g));
        }
        if g.is_zero() {
            return Err(Error::ZeroGenerator);
        }
        all.push(g);
    }
    all.sort();
    all.dedup();
    let generators = all
        .iter()
        .filter(|g| !all.iter().any(|h| h != *g && h.le(g)))
        .cloned()
        .collect();
    Ok(MonomialIdeal { n, generators })
}

impl MonomialIdeal {
    /// Same as [`minimalize`].
    pub fn new<I>(n: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = ExponentVector>,
    {
        minimalize(gens, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Membership of `x^m` in the ideal; points outside the orthant are never members.
    pub fn contains(&self, m: &ExponentVector) -> Result<bool> {
        m.check_dim(self.n)?;
        Ok(self.in_support(m))
    }

    pub(crate) fn in_support(&self, m: &ExponentVector) -> bool {
        m.is_nonneg() && self.generators.iter().any(|g| g.le(m))
    }

    /// True iff no variable `x_i` lies in the ideal.
    pub fn is_full(&self) -> bool {
        self.first_variable_in_ideal().is_none()
    }

    fn first_variable_in_ideal(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.in_support(&ExponentVector::unit(self.n, i)))
    }

    /// Exponent of the pure power of `x_i` among the generators, if any.
    pub fn pure_power(&self, i: usize) -> Option<i64> {
        self.generators
            .iter()
            .find(|g| (0..self.n).all(|j| j == i || g.get(j) == 0))
            .map(|g| g.get(i))
    }

    /// True iff every variable has a pure power among the generators, which is
    /// exactly when the quotient algebra is finite dimensional.
    pub fn is_finite(&self) -> bool {
        self.first_axis_without_pure_power().is_none()
    }

    fn first_axis_without_pure_power(&self) -> Option<usize> {
        (0..self.n).find(|&i| self.pure_power(i).is_none())
    }

    /// Checks the standing hypotheses: full and finite.
    pub fn ensure_full_finite(&self) -> Result<()> {
        if let Some(i) = self.first_variable_in_ideal() {
            return Err(Error::NotFull(i + 1));
        }
        if let Some(i) = self.first_axis_without_pure_power() {
            return Err(Error::InfiniteAlgebra(i + 1));
        }
        Ok(())
    }

    /// Exponents of the pure powers, one per axis. Requires a finite ideal.
    pub fn pure_power_box(&self) -> Result<ExponentVector> {
        let mut corner = Vec::with_capacity(self.n);
        for i in 0..self.n {
            corner.push(self.pure_power(i).ok_or(Error::InfiniteAlgebra(i + 1))?);
        }
        Ok(ExponentVector::new(corner))
    }

    /// The ideal obtained by renaming `x_i` to `x_{σ(i)}`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        assert_eq!(
            sigma.len(),
            self.n,
            "permutation size must match ideal dimension"
        );
        let mut generators: Vec<_> = self.generators.iter().map(|g| g.permuted(sigma)).collect();
        generators.sort();
        Self {
            n: self.n,
            generators,
        }
    }

    /// All variable permutations `σ` with `σ·I = I`, in lexicographic order.
    pub fn perm_symmetries(&self) -> Vec<Permutation> {
        Permutation::all(self.n)
            .filter(|sigma| &self.permuted(sigma) == self)
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::parse::render_ideal(self))
    }
}
