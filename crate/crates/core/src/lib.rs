//! Derivations of finite monomial algebras `K[x_1, .., x_n]/I` and the
//! reconstruction of `I` from the torus weight data of those derivations.

pub mod algebra;
pub mod cosupport;
pub mod derivation;
pub mod error;
pub mod ideal;
pub mod lattice;
pub mod matrix;
pub mod parse;
pub mod reconstruct;
pub mod report;
pub mod sample;
pub mod staircase;

pub use algebra::{AutWeightReport, QuotientAlgebra, WeightDecomposition};
pub use cosupport::{cosupport, ideal_from_cosupport, weights_generate_lattice, CoSupport};
pub use derivation::{HomogeneousDerivation, Rational, WeightSpace};
pub use error::{Error, Result};
pub use ideal::{minimalize, MonomialIdeal};
pub use lattice::{ExponentVector, Permutation};
pub use matrix::{DerivationMatrix, SparseMatrix};
