//! Paired gain/loss increments inside a block.
//!
//! For `k >= 2` and `i = 0..k-1`, the increment pair at steps `k²+2i` and
//! `k²+1+2i` combines into
//! `delta_i = P{S_{k²+2i-1} = k+1} - P{S_{k²+2i} = k}`,
//! which also has the closed form
//! `-(binom(k²-1+2i, k(k-1)/2+i-1) / 2^{k²+2i}) · 2k/(k(k-1)+2i)`.
//! Both routes are evaluated and must agree exactly; the non-dyadic factor
//! of the closed form must divide out, and failure to do so is reported as
//! an error rather than silently rounded.
//!
//! The whole sequence is negative and non-decreasing, and the anchor
//! identity `P{S_{k²-2} = k} + k·delta_0 = 0` holds exactly; both facts are
//! enforced by [`delta_sequence`] / checked by [`anchor_identity`].

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::distribution::pmf;
use crate::error::{Error, Result};
use crate::exactnum::binomial::binomial_auto;
use crate::exactnum::{DyadicProb, RollingBinomial, SignedDyadic};

fn check_delta_args(k: u64, i: u64) -> Result<()> {
    if k < 2 {
        return Err(Error::ArgBelowMinimum {
            what: "k",
            min: 2,
            got: k,
        });
    }
    if i > k - 1 {
        return Err(Error::ArgAboveMaximum {
            what: "i",
            max: k - 1,
            got: i,
        });
    }
    Ok(())
}

/// Closed-form magnitude of `delta_i`: the coefficient times `2k`, divided
/// exactly by `k(k-1)+2i`, over `2^{k²+2i}`. Errors if the division is not
/// exact.
fn closed_form(k: u64, i: u64, coeff: &BigUint) -> Result<SignedDyadic> {
    let divisor = k * (k - 1) + 2 * i;
    let (q, r) = (coeff * (2 * k)).div_rem(&BigUint::from(divisor));
    if !r.is_zero() {
        return Err(Error::NonDyadicDelta { k, i });
    }
    let exp = k * k + 2 * i;
    Ok(SignedDyadic::negative(DyadicProb::new(q, exp)?))
}

/// `delta_i` for block `k`, evaluated both as the difference of the two
/// point masses and through the closed form; the two routes must agree.
pub fn delta(k: u64, i: u64) -> Result<SignedDyadic> {
    check_delta_args(k, i)?;
    let n = k * k + 2 * i;
    let by_pmf = pmf(n - 1, k as i64 + 1).sub(&pmf(n, k as i64));
    let coeff = binomial_auto(n - 1, (k * (k - 1) / 2 + i) as i64 - 1);
    let by_closed_form = closed_form(k, i, &coeff)?;
    assert_eq!(
        by_pmf, by_closed_form,
        "delta({k},{i}): pmf difference and closed form disagree"
    );
    Ok(by_pmf)
}

/// The delta sequence of a block, with its invariant enforced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaSequence {
    k: u64,
    deltas: Vec<SignedDyadic>,
}

impl DeltaSequence {
    /// Wraps a computed sequence, verifying strict negativity and the
    /// non-decreasing order `delta_0 <= ... <= delta_{k-1} < 0`.
    pub fn new(k: u64, deltas: Vec<SignedDyadic>) -> Result<Self> {
        assert_eq!(deltas.len() as u64, k, "expected k = {k} deltas");
        for (i, d) in deltas.iter().enumerate() {
            if !d.is_negative() {
                return Err(Error::DeltaInvariant {
                    k,
                    i: i as u64,
                    detail: format!("delta must be strictly negative, got {d}"),
                });
            }
            if i > 0 && deltas[i - 1] > *d {
                return Err(Error::DeltaInvariant {
                    k,
                    i: i as u64,
                    detail: format!(
                        "sequence must be non-decreasing, got {} > {}",
                        deltas[i - 1],
                        d
                    ),
                });
            }
        }
        Ok(DeltaSequence { k, deltas })
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn deltas(&self) -> &[SignedDyadic] {
        &self.deltas
    }

    pub fn get(&self, i: u64) -> &SignedDyadic {
        &self.deltas[i as usize]
    }
}

/// Streaming evaluation of all deltas of a block.
///
/// One rolling coefficient serves the whole block: consecutive deltas sit
/// three unit binomial steps apart, so the scan costs O(k) scalar big-int
/// operations after the seed instead of O(k) fresh coefficients.
pub(crate) struct DeltaScan {
    k: u64,
    i: u64,
    roll: RollingBinomial,
}

impl DeltaScan {
    pub(crate) fn new(k: u64) -> Result<Self> {
        check_delta_args(k, 0)?;
        // seed at the coefficient of delta_0's first mass: binom(k²-1, k(k-1)/2-1)
        let roll = RollingBinomial::new(k * k - 1, k * (k - 1) / 2 - 1);
        Ok(DeltaScan { k, i: 0, roll })
    }
}

impl Iterator for DeltaScan {
    type Item = Result<SignedDyadic>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.i >= self.k {
            return None;
        }
        let (k, i) = (self.k, self.i);
        let exp = k * k + 2 * i;
        // roll sits at binom(k²-1+2i, k(k-1)/2+i-1), the shared coefficient
        // of the closed form and of the first pmf term
        let first = self.roll.value().clone();
        let cf = match closed_form(k, i, &first) {
            Ok(v) => v,
            Err(e) => {
                self.i = self.k; // poison further iteration
                return Some(Err(e));
            }
        };
        // second pmf term: binom(k²+2i, k(k-1)/2+i), one step in n and one in j
        self.roll.inc_n();
        self.roll.inc_j();
        let second = self.roll.value().clone();
        // delta_i = first/2^{exp-1} - second/2^{exp} = (2·first - second)/2^{exp}
        let d = match (DyadicProb::new(first << 1u32, exp), DyadicProb::new(second, exp)) {
            (Ok(a), Ok(b)) => a.sub(&b),
            (Err(e), _) | (_, Err(e)) => {
                self.i = self.k;
                return Some(Err(e));
            }
        };
        assert_eq!(d, cf, "delta({k},{i}): routes disagree");
        self.i += 1;
        if self.i < self.k {
            self.roll.inc_n(); // advance to the next delta's first coefficient
        }
        Some(Ok(d))
    }
}

/// All deltas of block `k`, computed by the streaming scan and wrapped with
/// the monotone-negative invariant enforced.
pub fn delta_sequence(k: u64) -> Result<DeltaSequence> {
    let deltas: Result<Vec<_>> = DeltaScan::new(k)?.collect();
    DeltaSequence::new(k, deltas?)
}

/// `P{S_{k²-2} = k} + k·delta_0`; exactly zero for every `k >= 2`.
///
/// A nonzero result is returned, not raised — the caller decides what a
/// broken identity means.
pub fn anchor_identity(k: u64) -> Result<SignedDyadic> {
    check_delta_args(k, 0)?;
    let mass = SignedDyadic::positive(pmf(k * k - 2, k as i64));
    mass.add(&delta(k, 0)?.scaled(k)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dy(num: u64, exp: u64) -> DyadicProb {
        DyadicProb::new(BigUint::from(num), exp).unwrap()
    }

    #[test]
    fn delta_examples() {
        assert_eq!(delta(2, 0).unwrap(), SignedDyadic::negative(dy(1, 3)));
        assert_eq!(delta(2, 1).unwrap(), SignedDyadic::negative(dy(5, 6)));
        // direct pmf difference at k=3, i=0
        assert_eq!(delta(3, 0).unwrap(), pmf(8, 4).sub(&pmf(9, 3)));
    }

    #[test]
    fn delta_argument_guards() {
        assert!(matches!(delta(1, 0), Err(Error::ArgBelowMinimum { .. })));
        assert!(matches!(delta(2, 2), Err(Error::ArgAboveMaximum { .. })));
    }

    #[test]
    fn sequence_for_small_blocks() {
        let s = delta_sequence(2).unwrap();
        assert_eq!(
            s.deltas(),
            &[
                SignedDyadic::negative(dy(1, 3)),
                SignedDyadic::negative(dy(5, 6))
            ]
        );
        let s = delta_sequence(3).unwrap();
        assert_eq!(s.deltas().len(), 3);
        for (i, d) in s.deltas().iter().enumerate() {
            assert!(d.is_negative());
            assert_eq!(d, &delta(3, i as u64).unwrap());
        }
    }

    #[test]
    fn sequence_matches_one_shot_deltas() {
        for k in 2u64..=25 {
            let s = delta_sequence(k).unwrap();
            for i in 0..k {
                assert_eq!(s.get(i), &delta(k, i).unwrap(), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn sequence_constructor_rejects_violations() {
        let good = SignedDyadic::negative(dy(1, 3));
        let zero = SignedDyadic::zero();
        assert!(matches!(
            DeltaSequence::new(2, vec![good.clone(), zero]),
            Err(Error::DeltaInvariant { i: 1, .. })
        ));
        // decreasing pair: -1/16 then -1/8
        assert!(matches!(
            DeltaSequence::new(
                2,
                vec![SignedDyadic::negative(dy(1, 4)), SignedDyadic::negative(dy(1, 3))]
            ),
            Err(Error::DeltaInvariant { i: 1, .. })
        ));
    }

    #[test]
    fn anchor_identity_small_k() {
        for k in [2u64, 3, 5] {
            assert!(anchor_identity(k).unwrap().is_zero(), "k={k}");
        }
    }
}
