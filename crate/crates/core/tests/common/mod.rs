//! Test-only oracles that never call the weight-space formulas under test.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use monalg::derivation::rational;
use monalg::matrix::rank;
use monalg::{
    CoSupport, DerivationMatrix, ExponentVector, HomogeneousDerivation, MonomialIdeal,
    QuotientAlgebra, Rational,
};
use num_traits::Zero;

pub fn ev<const N: usize>(c: [i64; N]) -> ExponentVector {
    ExponentVector::from(c)
}

pub fn ideal<const N: usize>(gens: &[[i64; N]]) -> MonomialIdeal {
    MonomialIdeal::new(N, gens.iter().map(|g| ev(*g))).unwrap()
}

/// Staircase by scanning a box large enough to contain it, using only
/// divisibility by generators.
pub fn brute_cosupport(ideal: &MonomialIdeal, bound: i64) -> BTreeSet<ExponentVector> {
    let n = ideal.n();
    let lo = ExponentVector::zero(n);
    let hi = ExponentVector::new(vec![bound; n]);
    monalg::lattice::box_points(&lo, &hi)
        .filter(|m| !ideal.generators().iter().any(|g| g.le(m)))
        .collect()
}

/// Dimension of the space of linear maps `x^m ↦ λ_m x^{m+α}` on the quotient
/// that satisfy the Leibniz rule on every pair of basis monomials, obtained
/// by solving the linear system directly.
pub fn brute_force_weight_dim(c: &CoSupport, alpha: &ExponentVector) -> usize {
    let unknowns: BTreeMap<ExponentVector, usize> = c
        .points()
        .filter(|m| c.contains(&m.add(alpha)))
        .cloned()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    if unknowns.is_empty() {
        return 0;
    }
    let points: Vec<_> = c.points().cloned().collect();
    let mut equations: Vec<BTreeMap<usize, Rational>> = Vec::new();
    for (a, m) in points.iter().enumerate() {
        for m2 in &points[a..] {
            let prod = m.add(m2);
            let target = prod.add(alpha);
            if !c.contains(&target) {
                continue;
            }
            // D(x^m x^m2) = D(x^m) x^m2 + x^m D(x^m2), coefficient of x^target
            let mut eq: BTreeMap<usize, Rational> = BTreeMap::new();
            if c.contains(&prod) {
                *eq.entry(unknowns[&prod]).or_insert_with(Rational::zero) += rational(1);
            }
            for (src, _) in [(m, m2), (m2, m)] {
                if let Some(&u) = unknowns.get(src) {
                    *eq.entry(u).or_insert_with(Rational::zero) -= rational(1);
                }
            }
            eq.retain(|_, v| !v.is_zero());
            if !eq.is_empty() {
                equations.push(eq);
            }
        }
    }
    unknowns.len() - rank(&equations)
}

/// Product of basis monomials in the quotient, `None` when it vanishes.
fn mul_basis(c: &CoSupport, a: &ExponentVector, b: &ExponentVector) -> Option<ExponentVector> {
    let p = a.add(b);
    c.contains(&p).then_some(p)
}

/// Image of each basis monomial: `x^m ↦ v x^t` as `m -> (t, v)`.
fn images(dm: &DerivationMatrix) -> HashMap<ExponentVector, (ExponentVector, Rational)> {
    dm.matrix
        .nonzero_entries()
        .map(|(&(r, c), v)| (dm.basis[c].clone(), (dm.basis[r].clone(), v.clone())))
        .collect()
}

/// Checks `D(x^a x^b) = D(x^a) x^b + x^a D(x^b)` through the matrix alone.
/// With `only_landing` the pairs are restricted to products inside the staircase.
pub fn leibniz_holds(c: &CoSupport, dm: &DerivationMatrix, only_landing: bool) -> bool {
    let image = images(dm);
    let points: Vec<_> = c.points().cloned().collect();
    for (i, a) in points.iter().enumerate() {
        for b in &points[i..] {
            let prod = a.add(b);
            if only_landing && !c.contains(&prod) {
                continue;
            }
            let mut lhs: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
            if let Some((t, v)) = image.get(&prod) {
                lhs.insert(t.clone(), v.clone());
            }
            let mut rhs: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
            for (x, y) in [(a, b), (b, a)] {
                if let Some((t, v)) = image.get(x) {
                    if let Some(p) = mul_basis(c, t, y) {
                        *rhs.entry(p).or_insert_with(Rational::zero) += v;
                    }
                }
            }
            rhs.retain(|_, v| !v.is_zero());
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Valid derivations at a degree: all unit covectors for inner degrees, the
/// single `e_k^*` for an outer degree that preserves the ideal.
pub fn valid_unit_derivations(
    alg: &QuotientAlgebra,
    alpha: &ExponentVector,
) -> Vec<HomogeneousDerivation> {
    (0..alg.n())
        .map(|i| HomogeneousDerivation::basis(alpha.clone(), i))
        .filter(|d| monalg::derivation::check_derivation(alg.ideal(), d).is_ok())
        .collect()
}
