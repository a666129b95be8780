//! Recursive evaluation of `P_n` by telescoping over blocks.
//!
//! Starting from `P_2 = 1/2`, every completed block `k` contributes its
//! opening gain `P{S_{k²-2} = k}` followed by `2k` alternating terms
//! (odd offsets gain `P{S_{k²+j-2} = k+1}`, even offsets lose
//! `P{S_{k²+j-2} = k}`), and the block containing `n` contributes the same
//! prefix up to `n`'s offset. This is a genuinely different derivation of
//! the same sequence the direct summation produces, which makes the
//! equality between the two a meaningful check.

use crate::blocks::block_of;
use crate::distribution::pmf;
use crate::error::{Error, Result};
use crate::exactnum::{DyadicProb, RollingBinomial};

/// The recursion's term at offset `j >= 1` of block `k`: signed point mass
/// at `k+1` (odd `j`, gain) or `k` (even `j`, loss).
fn term_value(k: u64, j: u64) -> (bool, i64) {
    if j % 2 == 1 {
        (true, k as i64 + 1)
    } else {
        (false, k as i64)
    }
}

/// `P_n` by literal evaluation of the telescoping formula. Requires
/// `n >= 2`; the sums are empty at `n = 2`.
pub fn recursive_pn(n: u64) -> Result<DyadicProb> {
    if n < 2 {
        return Err(Error::ArgBelowMinimum {
            what: "n",
            min: 2,
            got: n,
        });
    }
    let k_n = block_of(n);
    let mut acc = DyadicProb::half();
    let add = |acc: &DyadicProb, gain: bool, at: u64, value: i64| -> Result<DyadicProb> {
        let mass = pmf(at, value);
        if gain {
            acc.add(&mass)
        } else {
            acc.sub(&mass).into_prob()
        }
    };
    for k in 2..=k_n {
        // opening term of block k, then the alternating pairs
        acc = add(&acc, true, k * k - 2, k as i64)?;
        let offsets = if k == k_n { n - (k * k - 1) } else { 2 * k };
        for j in 1..=offsets {
            let (gain, value) = term_value(k, j);
            acc = add(&acc, gain, k * k + j - 2, value)?;
        }
    }
    Ok(acc)
}

/// Iterator over `(n, P_n)` for `n = 2, 3, ...` produced by accumulating
/// the recursion's terms one at a time, with a rolling coefficient.
///
/// Item `n` equals `recursive_pn(n)`; the sweep exists because evaluating
/// the formula from scratch for every `n` of a long range would be
/// quadratic in the range length.
#[derive(Debug)]
pub struct RecursionSweep {
    next_n: u64,
    num: num_bigint::BigUint,
    roll: Option<RollingBinomial>,
}

impl RecursionSweep {
    pub fn new() -> Self {
        RecursionSweep {
            next_n: 2,
            num: num_bigint::BigUint::from(2u32),
            roll: None,
        }
    }
}

impl Default for RecursionSweep {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for RecursionSweep {
    type Item = (u64, DyadicProb);

    fn next(&mut self) -> Option<Self::Item> {
        let n = self.next_n;
        self.next_n += 1;
        if n == 2 {
            // P_2 = 2/4; stored numerator is over 2^n
            return Some((2, DyadicProb::half()));
        }
        let k = block_of(n);
        let j = n - (k * k - 1);
        let (gain, value) = if j == 0 {
            (true, k as i64) // opening term of block k
        } else {
            term_value(k, j)
        };
        // the term's mass is binom(n-1, ((n-1) + value) / 2) / 2^{n-1}
        let idx = ((n as i64 - 1 + value) / 2) as u64;
        if let Some(roll) = self.roll.as_mut() {
            roll.inc_n();
            debug_assert!(idx == roll.j() || idx == roll.j() + 1);
            if idx > roll.j() {
                roll.inc_j();
            }
        } else {
            self.roll = Some(RollingBinomial::new(n - 1, idx));
        }
        let coeff = self.roll.as_ref().unwrap().value();
        let num = if gain {
            (&self.num + coeff) << 1u32
        } else {
            (&self.num - coeff) << 1u32
        };
        self.num = num.clone();
        Some((
            n,
            DyadicProb::new(num, n).expect("recursion value cannot leave [0, 1]"),
        ))
    }
}
