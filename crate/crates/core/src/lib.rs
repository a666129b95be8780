//! Exact computation of tail probabilities of sums of independent
//! Rademacher (±1) random variables.
//!
//! The central quantity is `P_n = P{|S_n| <= a·√n}` for `S_n` a sum of `n`
//! independent signs. Everything here is exact: probabilities are dyadic
//! rationals over big integers, interval endpoints of the form `c + s·√m`
//! are compared with integers by squaring, and no floating point enters any
//! computed value.
//!
//! Layout:
//! - [`exactnum`]: big-integer binomials, dyadic rationals, surd endpoints.
//! - [`distribution`]: the exact law of `S_n` and its binomial reformulation.
//! - [`blocks`]: the square-delimited block structure of the sequence `P_n`
//!   — per-step increments, delta sequences, envelopes, and the verifier
//!   that checks every claimed inequality with exact witnesses.
//! - [`oracle`]: independent ground-truth engines (exhaustive enumeration
//!   and additive convolution) that share no code with the formula paths.

pub mod blocks;
pub mod distribution;
pub mod error;
pub mod exactnum;
pub mod oracle;

pub use blocks::{
    anchor_identity, block_of, build_block, classify_step, cmp_to_normal_limit, delta,
    delta_sequence, envelope, recursive_pn, verify_theorem, within_of_normal_limit, Block,
    BlockReport, DeltaSequence, RecursionSweep, Side, StepClassification, StepSweep, SweepPoint,
    NORMAL_CENTRAL_MASS_DEN, NORMAL_CENTRAL_MASS_NUM,
};
pub use distribution::{
    binomial_central_prob, binomial_range_prob, central_prob, interval_prob, pmf, support,
    SigmaThreshold,
};
pub use error::{Error, Result};
pub use exactnum::{
    binomial, cmp_int_surd, decimal_ratio_string, factored_binomial, in_half_open, BigCount,
    BinomialRow, DyadicProb, RollingBinomial, SignedDyadic, SurdBound,
};
pub use oracle::{convolve_counts, enumerate_counts, oracle_central_prob, CountTable, OracleEngine};
