//! The exact distribution of a sum of `n` independent ±1 signs, and the
//! equivalent formulation through a symmetric binomial count.
//!
//! The sum `S_n` is supported on integers of the same parity as `n` inside
//! `[-n, n]`, with `P{S_n = m} = binom(n, (n+m)/2) / 2^n`. Central
//! probabilities `P{|S_n| <= a·√n}` reduce the irrational threshold to the
//! integer comparison `q²m² <= p²n`, so both boundaries are exact and
//! closed.

use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Roots;
use num_rational::Ratio;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::binomial::binomial_auto;
use crate::exactnum::{
    factored_binomial, in_half_open, BinomialRow, DyadicProb, RollingBinomial, SurdBound,
};

/// An exact number of standard deviations `a = p/q >= 0`, kept in lowest
/// terms with `q >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaThreshold {
    p: u64,
    q: u64,
}

/// Numerator/denominator ceiling; keeps `q²m² <= p²n` inside `u128`.
const THRESHOLD_MAX: u64 = 1 << 31;

impl SigmaThreshold {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidThreshold("denominator is zero".into()));
        }
        if p > THRESHOLD_MAX || q > THRESHOLD_MAX {
            return Err(Error::InvalidThreshold(format!(
                "{p}/{q} exceeds the supported magnitude 2^31"
            )));
        }
        let g = if p == 0 { q } else { gcd(p, q) };
        Ok(SigmaThreshold {
            p: p / g,
            q: q / g,
        })
    }

    pub fn one() -> Self {
        SigmaThreshold { p: 1, q: 1 }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_zero(&self) -> bool {
        self.p == 0
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl FromStr for SigmaThreshold {
    type Err = Error;

    /// Accepts `"p"` or `"p/q"` with non-negative integers.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |_| Error::InvalidThreshold(format!("cannot parse {s:?} as p or p/q"));
        match s.split_once('/') {
            None => SigmaThreshold::new(s.trim().parse().map_err(bad)?, 1),
            Some((p, q)) => {
                SigmaThreshold::new(p.trim().parse().map_err(bad)?, q.trim().parse().map_err(bad)?)
            }
        }
    }
}

impl std::fmt::Display for SigmaThreshold {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.q == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}/{}", self.p, self.q)
        }
    }
}

/// All values the sum of `n` signs takes with positive probability, in
/// increasing order: integers of the parity of `n` inside `[-n, n]`.
pub fn support(n: u64) -> Vec<i64> {
    assert!(n >= 1, "support requires n >= 1");
    let n = n as i64;
    (-n..=n).step_by(2).collect()
}

/// `P{S_n = m}`, exactly; zero off the support (wrong parity or `|m| > n`).
pub fn pmf(n: u64, m: i64) -> DyadicProb {
    assert!(n >= 1, "pmf requires n >= 1");
    if m.unsigned_abs() > n || (m.rem_euclid(2) as u64) != n % 2 {
        return DyadicProb::zero();
    }
    let j = (n as i64 + m) / 2;
    DyadicProb::new(binomial_auto(n, j), n).expect("pmf mass cannot exceed one")
}

/// `P{S_n ∈ [lo, hi)}` over surd-bounded endpoints, decided exactly for
/// every candidate support point.
pub fn interval_prob(n: u64, lo: &SurdBound, hi: &SurdBound) -> DyadicProb {
    assert!(n >= 1, "interval_prob requires n >= 1");
    let z_lo = lo.ceil().max(-(n as i64));
    let z_hi = hi.ceil().min(n as i64); // hi itself is excluded
    let mut acc = DyadicProb::zero();
    for z in z_lo..=z_hi {
        if in_half_open(z, lo, hi) {
            acc = acc
                .add(&pmf(n, z))
                .expect("interval mass cannot exceed one");
        }
    }
    acc
}

/// Largest `m >= 0` with `q²m² <= p²n`, i.e. `|m| <= a·√n` exactly.
fn central_m_max(n: u64, a: &SigmaThreshold) -> i64 {
    // q·m <= sqrt(p²n) for integers iff m <= floor(sqrt(p²n)) / q
    let p2n = (a.p as u128) * (a.p as u128) * (n as u128);
    (p2n.sqrt() / a.q as u128) as i64
}

/// `P{|S_n| <= a·√n}`, exactly, by direct summation over the support points
/// inside the closed interval.
pub fn central_prob(n: u64, a: &SigmaThreshold) -> DyadicProb {
    assert!(n >= 1, "central_prob requires n >= 1");
    let m_max = central_m_max(n, a).min(n as i64);
    // smallest in-parity point >= -m_max
    let m_lo = if m_max % 2 == n as i64 % 2 {
        -m_max
    } else {
        -m_max + 1
    };
    if m_lo > m_max {
        return DyadicProb::zero();
    }
    let mut roll = RollingBinomial::new(n, ((n as i64 + m_lo) / 2) as u64);
    let mut sum = roll.value().clone();
    let terms = ((m_max - m_lo) / 2) as u64;
    for _ in 0..terms {
        roll.inc_j();
        sum += roll.value();
    }
    DyadicProb::new(sum, n).expect("central mass cannot exceed one")
}

/// `P{lo <= T_n <= hi}` for `T_n` a Binomial(n, 1/2) count, with exact
/// rational endpoints (both ends closed).
pub fn binomial_range_prob(n: u64, lo: Ratio<i64>, hi: Ratio<i64>) -> DyadicProb {
    assert!(n >= 1, "binomial_range_prob requires n >= 1");
    let t_lo = lo.ceil().to_integer().max(0);
    let t_hi = hi.floor().to_integer().min(n as i64);
    if t_lo > t_hi {
        return DyadicProb::zero();
    }
    let row = BinomialRow::new(n);
    let sum: BigUint = row.coeffs()[t_lo as usize..=t_hi as usize].iter().sum();
    DyadicProb::new(sum, n).expect("range mass cannot exceed one")
}

/// `P{(n - a√n)/2 <= T_n <= (n + a√n)/2}` for `T_n` a Binomial(n, 1/2)
/// count: the central probability expressed through the count variable
/// `T_n = (S_n + n)/2`, with the surd thresholds resolved exactly through
/// that change of variable rather than approximated.
pub fn binomial_central_prob(n: u64, a: &SigmaThreshold) -> DyadicProb {
    assert!(n >= 1, "binomial_central_prob requires n >= 1");
    let m_max = central_m_max(n, a).min(n as i64);
    let m_top = if m_max % 2 == n as i64 % 2 {
        m_max
    } else {
        m_max - 1
    };
    if m_top < 0 {
        return DyadicProb::zero();
    }
    // t runs over the consecutive integers [(n - m_top)/2, (n + m_top)/2]
    let t_lo = ((n as i64 - m_top) / 2) as u64;
    let t_hi = ((n as i64 + m_top) / 2) as u64;
    let mut sum = BigUint::zero();
    let mut coeff = factored_binomial(n, t_lo as i64);
    for t in t_lo..=t_hi {
        sum += &coeff;
        if t < t_hi {
            coeff = coeff * (n - t) / (t + 1);
        }
    }
    DyadicProb::new(sum, n).expect("central mass cannot exceed one")
}
