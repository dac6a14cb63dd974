use thiserror::Error;

use crate::monomial::RingDescriptor;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingDescriptor, RingDescriptor),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("variable z_{{{row},{level}}} is not in {ring}")]
    VariableOutOfRange {
        ring: RingDescriptor,
        row: usize,
        level: usize,
    },

    #[error("{op} requires a proper nonzero ideal")]
    DegenerateIdeal { op: &'static str },

    #[error("{op} requires a squarefree ideal")]
    NotSquarefree { op: &'static str },

    #[error("{op} requires an ideal over a {expected} ring")]
    WrongRingKind {
        op: &'static str,
        expected: &'static str,
    },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("{0} is not a minimal generator")]
    NotAGenerator(String),

    #[error("parameters violate {inequality}: s={s}, b={b}, a={a}")]
    Setting {
        inequality: &'static str,
        s: u32,
        b: u32,
        a: u32,
    },

    #[error("too many variables for the homology oracle: {0} (limit {1})")]
    TooManyVariables(usize, usize),

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("linear quotient certificate failed at {0}")]
    CertificateFailed(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("malformed input: {0}")]
    Parse(String),
}
