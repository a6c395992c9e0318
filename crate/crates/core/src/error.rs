//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong when constructing monoids or running
/// the arithmetic on them. Domain errors only — precondition violations
/// that indicate a programming bug (e.g. an out-of-range claim tag) panic
/// instead.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyGenerators,

    #[error("generators must be positive")]
    ZeroGenerator,

    /// Construction caps generators at 2^32 so that products of two of them
    /// always fit in 64 bits.
    #[error("generator {0} exceeds the construction cap of 2^32")]
    GeneratorTooLarge(u64),

    #[error("generators have gcd {0}; the complement is infinite unless the gcd is 1")]
    NonCoprime(u64),

    #[error("{0} is not an element of the monoid")]
    NotAnElement(u64),

    /// The factorization enumerator refuses to materialize more vectors
    /// than the configured guard allows.
    #[error("element {element} has {count} factorizations, over the guard of {limit}")]
    ExplosionGuard { element: u64, count: u64, limit: u64 },

    /// Distance invariants are vacuous when there are fewer than two atoms:
    /// every element then has exactly one factorization length.
    #[error("monoid has fewer than two atoms, so every set of lengths is a singleton")]
    HalfFactorialTrivial,

    #[error("length-set gap {gap} is not a multiple of the stride {stride}")]
    GapNotMultiple { gap: u64, stride: u64 },

    #[error("family parameter m = {0} is below the minimum of 6")]
    MTooSmall(u64),

    #[error("scan bound {bound} is below the required {required}")]
    BoundTooSmall { bound: u64, required: u64 },

    #[error("monoid list is empty")]
    EmptyMonoidList,

    #[error("arithmetic overflow while computing {0}")]
    ArithmeticOverflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable code, used by the CLI envelope.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyGenerators => "EmptyGenerators",
            Error::ZeroGenerator => "ZeroGenerator",
            Error::GeneratorTooLarge(_) => "GeneratorTooLarge",
            Error::NonCoprime(_) => "NonCoprime",
            Error::NotAnElement(_) => "NotAnElement",
            Error::ExplosionGuard { .. } => "ExplosionGuard",
            Error::HalfFactorialTrivial => "HalfFactorialTrivial",
            Error::GapNotMultiple { .. } => "GapNotMultiple",
            Error::MTooSmall(_) => "MTooSmall",
            Error::BoundTooSmall { .. } => "BoundTooSmall",
            Error::EmptyMonoidList => "EmptyMonoidList",
            Error::ArithmeticOverflow(_) => "ArithmeticOverflow",
        }
    }
}
