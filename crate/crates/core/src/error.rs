use thiserror::Error;

/// Errors raised by the algebra, the matrix oracle and the codecs.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("incompatible algebras: dimension {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("blade dimension must be at least 1")]
    ZeroDimension,

    #[error("invalid blade literal {literal:?}: {reason}")]
    InvalidLiteral { literal: String, reason: String },

    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(i64),

    #[error("invalid Pauli selector {0}, expected 1, 2 or 3")]
    InvalidPauli(u8),

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("dimension {dim} needs at least {needed} tensor factors, got {factors}")]
    RepresentationTooSmall {
        dim: usize,
        factors: usize,
        needed: usize,
    },

    #[error("factor count {factors} exceeds the dense oracle limit of {max}")]
    RepresentationTooLarge { factors: usize, max: usize },

    #[error("filler bits k={k} must satisfy 1 <= k <= n={n}")]
    InvalidFillerBits { n: usize, k: usize },

    #[error("support width {k} exceeds dimension {n}")]
    InvalidSupport { n: usize, k: usize },

    #[error("matrix order {0} is not a power of two")]
    InvalidOrder(usize),

    #[error("matrix orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("duplicate symbol name {0:?}")]
    DuplicateName(String),

    #[error("symbol {name:?} collides with the bit string of {other:?}")]
    DuplicateBlade { name: String, other: String },

    #[error("filler {name:?} has nonzero bits beyond position {k}")]
    FillerOutsideSupport { name: String, k: usize },

    #[error("role {0:?} is the scalar blade")]
    ScalarRole(String),

    #[error(
        "could not draw a distinct blade for {name:?} after {attempts} attempts; n is too small"
    )]
    SymbolSpaceExhausted { name: String, attempts: usize },

    #[error("unknown role {0:?}")]
    UnknownRole(String),

    #[error("unknown filler {0:?}")]
    UnknownFiller(String),

    #[error("{pairs} bound pairs but {weights} weights")]
    WeightCountMismatch { pairs: usize, weights: usize },

    #[error("clean-up memory is empty")]
    EmptyMemory,

    #[error("cannot chunk an empty list")]
    EmptyChunk,

    #[error("expected a {expected} record, got a {found} record")]
    CodecMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("clean-up memory uses the {found} metric, expected {expected}")]
    MetricMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("malformed file: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
