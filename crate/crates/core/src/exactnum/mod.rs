//! Exact arithmetic foundation: big integers, dyadic rationals, binomial
//! coefficients, and quadratic-surd interval endpoints.

pub mod binomial;
pub mod dyadic;
pub mod surd;

pub use binomial::{binomial, factored_binomial, BigCount, BinomialRow, RollingBinomial};
pub use dyadic::{decimal_ratio_string, DyadicProb, SignedDyadic};
pub use surd::{cmp_int_surd, in_half_open, SurdBound};
