use thiserror::Error;

use crate::ring::RingSpec;

/// Why a convolution inverse could not be produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvFailure {
    /// `f ⋆ x = η∘ε` has no solution.
    NoRightInverse,
    /// A right inverse exists but it is not unique or not a left inverse.
    OneSided,
}

impl std::fmt::Display for ConvFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConvFailure::NoRightInverse => f.write_str("no right inverse exists"),
            ConvFailure::OneSided => f.write_str("only one-sided inverses exist"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(RingSpec, RingSpec),
    #[error("modulus must be an integer >= 2, got {0}")]
    InvalidModulus(String),
    #[error("invalid ring element {value:?} for {ring}")]
    InvalidScalar { ring: RingSpec, value: String },
    #[error("duplicate basis label {0:?}")]
    DuplicateLabel(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("not convolution invertible: {0}")]
    NotConvInvertible(ConvFailure),
    #[error("1#1 is not a unit: the cocycle is not normal")]
    NotUnital,
    #[error("associativity disagrees with the cocycle flags: {0}")]
    AssociativityMismatch(String),
    #[error("value escapes the coinvariant subalgebra: {0}")]
    CoinvariantEscape(String),
    #[error("subalgebra U is declared on the wrong side for this construction")]
    SideMismatch,
    #[error("diagram does not commute: {map} fails at {witness}")]
    CommutativityFailure { map: String, witness: String },
    #[error("non-unique solution: {0}")]
    NonUniqueSolution(String),
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("twisted antipode required but not available")]
    MissingTwistedAntipode,
    #[error("invalid subalgebra: {0}")]
    InvalidSubalgebra(String),
    #[error("validation failed: {0}")]
    Validation(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
