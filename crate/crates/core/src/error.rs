use thiserror::Error;

use crate::lattice::ExponentVector;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension must be positive")]
    ZeroDimension,

    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("generator {0} has a negative exponent")]
    NegativeExponent(ExponentVector),

    #[error("the zero vector is not allowed as a generator (unit ideal)")]
    ZeroGenerator,

    #[error("ideal is not full: variable x{0} lies in the ideal")]
    NotFull(usize),

    #[error("quotient algebra is infinite: no pure power of x{0} in the ideal")]
    InfiniteAlgebra(usize),

    #[error("point set is not downward closed: {missing} is missing below {point}")]
    NotDownwardClosed {
        point: ExponentVector,
        missing: ExponentVector,
    },

    #[error("degree {0} is not inner")]
    NotInner(ExponentVector),

    #[error("degree {0} is not outer")]
    NotOuter(ExponentVector),

    #[error("not a derivation of the quotient: {0}")]
    NotADerivation(String),

    #[error("weight function is not of the form m_C: {0}")]
    InconsistentWeightFunction(String),

    #[error("invalid weight data: {0}")]
    InvalidWeightData(String),

    #[error("weight data is missing the required degree {0}")]
    MissingKey(ExponentVector),

    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
