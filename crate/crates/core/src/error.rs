use thiserror::Error;

/// Errors raised by the exact algebra and matrix layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("division by a non-constant or zero polynomial")]
    InvalidDivisor,

    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("series has {got} coefficients, expected {expected} for its order")]
    CoefficientCount { expected: usize, got: usize },

    #[error("constant term is not an invertible constant")]
    NotInvertible,

    #[error("constant term must vanish before dividing by t")]
    NonzeroConstantTerm,

    #[error("cannot shift down a series of order 0")]
    EmptyShift,

    #[error("sequence has {got} entries, need at least {needed}")]
    SequenceTooShort { needed: usize, got: usize },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("malformed term record: {0}")]
    TermRecord(String),

    #[error("transcription data: {0}")]
    Transcription(String),
}

pub type Result<T> = std::result::Result<T, Error>;
