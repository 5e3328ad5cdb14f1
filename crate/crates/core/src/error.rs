//! Crate-wide error type.

use crate::poly::Var;

/// Errors produced by polynomial, series, permutation, and verification
/// operations.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("variable {0} is not bound")]
    UnboundVariable(Var),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("cannot divide by a non-constant polynomial")]
    NonConstantDivisor,
    #[error("series reciprocal requires a nonzero rational constant term, found `{0}`")]
    NonConstantLeadingTerm(String),
    #[error("series logarithm requires constant term 1, found `{0}`")]
    LogConstantTerm(String),
    #[error("series exponential requires constant term 0, found `{0}`")]
    ExpConstantTerm(String),
    #[error("series power requires constant term 1, found `{0}`")]
    PowConstantTerm(String),
    #[error("cannot differentiate a series of order 0")]
    DerivativeOrderZero,
    #[error("Chebyshev index {0} is below -1")]
    ChebIndexOutOfRange(i64),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("letter {letter} is out of range for a permutation of [{n}]")]
    LetterOutOfRange { letter: u32, n: usize },
    #[error("expected a derangement, found a permutation with a fixed point")]
    NotADerangement,
    #[error("invalid colored permutation: {0}")]
    InvalidColoredPerm(String),
    #[error("invalid bar-tiling object: {0}")]
    InvalidBarTiling(String),
    #[error("involution applied to a fixed-point object")]
    InvolutionFixedPoint,
    #[error("unknown statistic `{0}`")]
    UnknownStat(String),
    #[error("unknown permutation set `{0}`")]
    UnknownPermSet(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("statistic list and variable list have different lengths ({stats} vs {vars})")]
    StatVarMismatch { stats: usize, vars: usize },
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
