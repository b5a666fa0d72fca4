//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by constructions and queries.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier mismatch: expected carrier {expected}, got {found}")]
    CarrierMismatch { expected: u32, found: u32 },

    #[error("unknown element index {index} (carrier has {carrier_len} elements)")]
    UnknownElement { index: usize, carrier_len: usize },

    #[error("product undefined for word {word}")]
    UndefinedProduct { word: String },

    #[error("conjugation undefined: {element} is not in the conjugation domain of {by}")]
    ConjugationUndefined { element: String, by: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("carrier too large for automorphism search: {size} > cap {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("action not verified: {0}")]
    InvalidAction(String),

    #[error("incompatible component isomorphisms: {0}")]
    IncompatibleIsos(String),

    #[error("hypothesis failed ({bullet}): {detail}")]
    HypothesisFailed { bullet: String, detail: String },

    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),

    #[error("mixed primes: {0} vs {1}")]
    MixedPrimes(u32, u32),

    #[error("fixture invalid: {0}")]
    FixtureInvalid(String),

    #[error("verification failed: {0}")]
    VerificationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
