//! Independent ground-truth engines for the distribution of sign sums.
//!
//! Two oracles with disjoint strategies, neither touching the binomial code
//! path: [`enumerate_counts`] walks all `2^n` sign vectors and tallies by
//! popcount, and [`convolve_counts`] grows the count table one summand at a
//! time through the additive recurrence
//! `counts_n(m) = counts_{n-1}(m-1) + counts_{n-1}(m+1)`.
//! A bug in the formula-based modules cannot validate itself against these.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::DyadicProb;
use crate::distribution::SigmaThreshold;

/// Hard ceiling for exhaustive enumeration: `2^26` sign vectors.
pub const ENUMERATE_MAX_N: u64 = 26;

/// Which ground-truth engine to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleEngine {
    Enumerate,
    Convolve,
}

/// Exact counts of sign vectors by their sum: `counts[m]` is the number of
/// vectors in `{-1, +1}^n` summing to `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    n: u64,
    counts: BTreeMap<i64, BigUint>,
}

impl CountTable {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<i64, BigUint> {
        &self.counts
    }

    /// Count at `m`; zero off the support.
    pub fn count(&self, m: i64) -> BigUint {
        self.counts.get(&m).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `P{|S_n| <= a·√n}` straight from the table: sums every count whose
    /// point satisfies `q²m² <= p²n` (closed boundary), divided by `2^n`.
    pub fn central_prob(&self, a: &SigmaThreshold) -> DyadicProb {
        let p2n = (a.p() as u128) * (a.p() as u128) * (self.n as u128);
        let q2 = (a.q() as u128) * (a.q() as u128);
        let mut mass = BigUint::zero();
        for (m, c) in &self.counts {
            let m2 = (m.unsigned_abs() as u128) * (m.unsigned_abs() as u128);
            if q2 * m2 <= p2n {
                mass += c;
            }
        }
        DyadicProb::new(mass, self.n).expect("oracle mass cannot exceed one")
    }
}

/// Exact counts by iterating all `2^n` sign vectors (bit patterns; a set bit
/// is a `+1`). Rejects `n` outside `[1, 26]`.
pub fn enumerate_counts(n: u64) -> Result<CountTable> {
    if n < 1 {
        return Err(Error::ArgBelowMinimum {
            what: "n",
            min: 1,
            got: n,
        });
    }
    if n > ENUMERATE_MAX_N {
        return Err(Error::ArgAboveMaximum {
            what: "n",
            max: ENUMERATE_MAX_N,
            got: n,
        });
    }
    let mut by_ones = vec![0u64; n as usize + 1];
    for bits in 0u64..(1u64 << n) {
        by_ones[bits.count_ones() as usize] += 1;
    }
    let counts = by_ones
        .into_iter()
        .enumerate()
        .map(|(ones, c)| (2 * ones as i64 - n as i64, BigUint::from(c)))
        .collect();
    Ok(CountTable { n, counts })
}

/// Exact counts via the additive recurrence, one summand at a time; no
/// binomial formula anywhere. Cost is quadratic in `n`.
pub fn convolve_counts(n: u64) -> CountTable {
    assert!(n >= 1, "convolve_counts requires n >= 1");
    // row for size s has s+1 entries; index i holds the count at m = 2i - s
    let mut row = vec![BigUint::one(), BigUint::one()];
    for s in 2..=n as usize {
        let mut next = Vec::with_capacity(s + 1);
        next.push(BigUint::one());
        for i in 1..s {
            next.push(&row[i - 1] + &row[i]);
        }
        next.push(BigUint::one());
        row = next;
    }
    let counts = row
        .into_iter()
        .enumerate()
        .map(|(i, c)| (2 * i as i64 - n as i64, c))
        .collect();
    CountTable { n, counts }
}

/// `P{|S_n| <= a·√n}` through the chosen ground-truth engine.
pub fn oracle_central_prob(n: u64, a: &SigmaThreshold, engine: OracleEngine) -> Result<DyadicProb> {
    let table = match engine {
        OracleEngine::Enumerate => enumerate_counts(n)?,
        OracleEngine::Convolve => convolve_counts(n),
    };
    Ok(table.central_prob(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(num: u64, exp: u64) -> DyadicProb {
        DyadicProb::new(BigUint::from(num), exp).unwrap()
    }

    #[test]
    fn enumerate_small_tables() {
        let t = enumerate_counts(2).unwrap();
        let expect: Vec<(i64, u64)> = vec![(-2, 1), (0, 2), (2, 1)];
        assert_eq!(
            t.counts().iter().map(|(m, c)| (*m, c.clone())).collect::<Vec<_>>(),
            expect
                .into_iter()
                .map(|(m, c)| (m, BigUint::from(c)))
                .collect::<Vec<_>>()
        );
        let t = enumerate_counts(3).unwrap();
        assert_eq!(t.count(-1), BigUint::from(3u32));
        assert_eq!(t.count(3), BigUint::one());
        assert_eq!(t.count(0), BigUint::zero());
        let t = enumerate_counts(6).unwrap();
        assert_eq!(t.count(-2), BigUint::from(15u32));
        assert_eq!(t.total(), BigUint::from(64u32));
    }

    #[test]
    fn enumerate_guards() {
        assert!(matches!(
            enumerate_counts(0),
            Err(Error::ArgBelowMinimum { .. })
        ));
        assert!(matches!(
            enumerate_counts(27),
            Err(Error::ArgAboveMaximum { .. })
        ));
    }

    #[test]
    fn convolve_small_tables() {
        let t = convolve_counts(1);
        assert_eq!(t.count(-1), BigUint::one());
        assert_eq!(t.count(1), BigUint::one());
        let t = convolve_counts(4);
        assert_eq!(t.count(0), BigUint::from(6u32));
        assert_eq!(t.total(), BigUint::from(16u32));
    }

    #[test]
    fn convolve_reproduces_central_value_at_14() {
        let p = oracle_central_prob(14, &SigmaThreshold::one(), OracleEngine::Convolve).unwrap();
        assert_eq!(p, dy(4719, 13));
    }

    #[test]
    fn engines_agree_up_to_12() {
        for n in 1..=12 {
            assert_eq!(
                enumerate_counts(n).unwrap(),
                convolve_counts(n),
                "tables differ at n={n}"
            );
        }
    }

    #[test]
    fn enumerate_central_examples() {
        let one = SigmaThreshold::one();
        assert_eq!(
            oracle_central_prob(7, &one, OracleEngine::Enumerate).unwrap(),
            dy(35, 6)
        );
        assert_eq!(
            oracle_central_prob(1, &one, OracleEngine::Enumerate).unwrap(),
            DyadicProb::one()
        );
        assert_eq!(
            oracle_central_prob(9, &one, OracleEngine::Convolve).unwrap(),
            dy(105, 7)
        );
    }

    #[test]
    fn symmetry_and_parity() {
        let t = convolve_counts(9);
        for m in 0..=9 {
            assert_eq!(t.count(m), t.count(-m));
            if m % 2 == 0 {
                assert!(t.count(m).is_zero());
            }
        }
    }
}
