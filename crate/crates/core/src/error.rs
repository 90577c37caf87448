use thiserror::Error;

/// Errors raised by the arithmetic, evaluation and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{value} is not a {p}-adic integer (denominator divisible by {p})")]
    NonUnitDenominator { value: String, p: u64 },

    #[error("precision {0} outside the supported range 1..=6")]
    PrecisionOutOfRange(u32),

    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    #[error("{0} is not invertible")]
    NonInvertible(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("pole at summation index {index}: lower parameter {parameter} vanishes")]
    PoleInRange { index: usize, parameter: String },

    #[error("alpha = {alpha} has least residue {residue} mod {p}, outside [0, {bound}]")]
    AlphaOutOfRange {
        alpha: String,
        p: u64,
        residue: u64,
        bound: u64,
    },

    #[error("coefficient index {index} exceeds expansion limit {limit}")]
    LimitExceeded { index: usize, limit: usize },

    #[error("p = {p} outside the supported range {range}")]
    RangeUnsupported { p: u64, range: String },

    #[error("operands live in different rings")]
    ModulusMismatch,

    #[error("cannot parse {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
