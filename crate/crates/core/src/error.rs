use thiserror::Error;

/// Errors surfaced by the exact-arithmetic and block machinery.
///
/// Violations of *verified* mathematical claims (theorem checks) are reported
/// as data by the verification layer, not as errors; this enum covers contract
/// violations and impossible states only.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A dyadic sum left the probability range `[0, 1]`.
    #[error("dyadic sum {0} + {1} exceeds one")]
    SumAboveOne(String, String),

    /// A dyadic value was constructed with numerator above `2^exp`.
    #[error("dyadic value {num}/2^{exp} lies outside [0, 1]")]
    MassAboveOne { num: String, exp: u64 },

    /// A signed quantity that must be a probability came out negative.
    #[error("expected a non-negative probability, got {0}")]
    NegativeProbability(String),

    /// The closed form for a delta increment failed to reduce to a dyadic
    /// rational; this indicates an implementation bug, never valid input.
    #[error("closed form for delta(k={k}, i={i}) does not reduce to a dyadic rational")]
    NonDyadicDelta { k: u64, i: u64 },

    /// A delta sequence broke the monotone-negative invariant.
    #[error("delta sequence for k={k} violates its invariant at i={i}: {detail}")]
    DeltaInvariant { k: u64, i: u64, detail: String },

    #[error("{what} must be at least {min}, got {got}")]
    ArgBelowMinimum {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("{what} must be at most {max}, got {got}")]
    ArgAboveMaximum {
        what: &'static str,
        max: u64,
        got: u64,
    },

    /// A sigma threshold (or other rational argument) could not be parsed
    /// or is out of the supported range.
    #[error("invalid threshold: {0}")]
    InvalidThreshold(String),
}

pub type Result<T> = std::result::Result<T, Error>;
