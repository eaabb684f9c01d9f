use thiserror::Error;

use crate::series::Var;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cell ({row}, {col}) is not in the partition")]
    InvalidCell { row: usize, col: usize },

    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),

    #[error("cannot parse partition from {0:?}")]
    ParsePartition(String),

    #[error("variable mismatch: {0} vs {1}")]
    VarMismatch(Var, Var),

    #[error("coefficient of exponent {exp} requested beyond truncation order {trunc}")]
    BeyondTruncation { exp: i64, trunc: i64 },

    #[error("series constant term is not invertible")]
    NotInvertible,

    #[error("exp requires a zero constant term")]
    ExpDomain,

    #[error("log requires constant term 1")]
    LogDomain,

    #[error("substitution needs an inner series without constant term or a polynomial outer series")]
    SubstituteDomain,

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("denominator vanishes at q = 0; factor out the pole first")]
    PoleAtZero,

    #[error("denominator vanishes identically to the working order")]
    DegenerateDenominator,

    #[error("u-expansion has a nonzero imaginary part at u^{0}")]
    NonRealCoefficient(i64),

    #[error("u-expansion has a nonzero odd-power term at u^{0}")]
    OddPowerTerm(i64),

    #[error("multiplicities must be positive, got {0}")]
    NonPositiveMultiplicity(i64),

    #[error("invalid curve species {0:?}")]
    InvalidSpecies(String),

    #[error("expected a non-negative integer coefficient, got {0}")]
    NotInteger(String),

    #[error("malformed JSON document: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
