use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field degree {m} is outside the supported range 2..=24")]
    DegreeOutOfRange { m: u32 },
    #[error("polynomial has degree {actual}, expected {expected}")]
    DegreeMismatch { expected: u32, actual: u32 },
    #[error("polynomial {0} is not irreducible over GF(2)")]
    NotIrreducible(String),
    #[error("polynomial {0} is irreducible but not primitive")]
    NotPrimitive(String),
    #[error("cannot parse polynomial {input:?}: {reason}")]
    ParsePolynomial { input: String, reason: String },
    #[error("cannot parse sequence: {0}")]
    ParseSequence(String),
    #[error("the zero element has no inverse")]
    ZeroInverse,
    #[error("shift {tau} is outside the valid range {min}..={max}")]
    TauOutOfRange { tau: usize, min: usize, max: usize },
    #[error("run length {l} is outside the valid range {min}..={max}")]
    LOutOfRange { l: u32, min: u32, max: u32 },
    #[error("pattern of length {len} does not fit a sequence of period {period}")]
    PatternTooLong { len: usize, period: usize },
    #[error("shift by {tau} reproduces the sequence; its correlation is undefined")]
    ShiftEqualsSequence { tau: usize },
    #[error("the two rows are equal")]
    EqualSequences,
    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },
    #[error("sequence period must be at least 2, got {0}")]
    PeriodTooShort(usize),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
