//! Block-level verification of the envelope theorem, with exact witnesses.
//!
//! For every block the verifier confirms: the minimum of `P_n` sits on the
//! last member and the maximum on the first square, the two interleaved
//! within-block chains are monotone, every member stays at or above 1/2,
//! the envelopes are strictly ordered, and across blocks the lower envelope
//! increases while the upper decreases. Violations are collected as data —
//! a verification run enumerates every failure instead of stopping at the
//! first.

use num_bigint::BigUint;

use crate::blocks::{build_block, StepSweep};
use crate::distribution::{central_prob, SigmaThreshold};
use crate::error::{Error, Result};
use crate::exactnum::DyadicProb;

/// `P{|Z| <= 1}` for standard normal `Z`, to ten digits: the common limit
/// of both envelope sequences, as the exact fraction
/// [`NORMAL_CENTRAL_MASS_NUM`] / [`NORMAL_CENTRAL_MASS_DEN`].
pub const NORMAL_CENTRAL_MASS_NUM: u64 = 6_826_894_921;
pub const NORMAL_CENTRAL_MASS_DEN: u64 = 10_000_000_000;

/// Exact comparison of a dyadic probability with the ten-digit normal
/// central mass constant.
pub fn cmp_to_normal_limit(p: &DyadicProb) -> std::cmp::Ordering {
    let lhs = p.numerator() * NORMAL_CENTRAL_MASS_DEN;
    let rhs = BigUint::from(NORMAL_CENTRAL_MASS_NUM) << p.exponent();
    lhs.cmp(&rhs)
}

/// True iff `|p - limit| < tol_num / tol_den`, decided exactly.
pub fn within_of_normal_limit(p: &DyadicProb, tol_num: u64, tol_den: u64) -> bool {
    let value = p.numerator() * NORMAL_CENTRAL_MASS_DEN * tol_den;
    let limit = (BigUint::from(NORMAL_CENTRAL_MASS_NUM) << p.exponent()) * tol_den;
    let tol = (BigUint::from(tol_num) * NORMAL_CENTRAL_MASS_DEN) << p.exponent();
    let gap = if value >= limit {
        value - limit
    } else {
        limit - value
    };
    gap < tol
}

/// The block envelopes `(Q_k^-, Q_k^+) = (P at last member, P at k²)`,
/// computed by direct summation. Requires `k >= 2`.
pub fn envelope(k: u64) -> Result<(DyadicProb, DyadicProb)> {
    if k < 2 {
        return Err(Error::ArgBelowMinimum {
            what: "k",
            min: 2,
            got: k,
        });
    }
    let one = SigmaThreshold::one();
    let q_minus = central_prob((k + 1) * (k + 1) - 2, &one);
    let q_plus = central_prob(k * k, &one);
    Ok((q_minus, q_plus))
}

/// Everything the verifier established about one block.
///
/// The boolean flags summarize; `violations` carries one human-readable
/// line per failed claim, with the exact witnessing values.
#[derive(Debug, Clone)]
pub struct BlockReport {
    pub k: u64,
    pub q_minus: DyadicProb,
    pub q_plus: DyadicProb,
    /// `(n, P_n)` for every member of the block.
    pub probs: Vec<(u64, DyadicProb)>,
    pub min_at_last_member: bool,
    pub max_at_first_square: bool,
    pub chains_hold: bool,
    pub all_at_least_half: bool,
    pub envelopes_strictly_ordered: bool,
    /// `Q_k^- > Q_{k-1}^-`; `None` for the first block verified.
    pub q_minus_increased: Option<bool>,
    /// `Q_k^+ < Q_{k-1}^+`; `None` for the first block verified.
    pub q_plus_decreased: Option<bool>,
    pub violations: Vec<String>,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies blocks `2..=max_k` and returns one report per block.
///
/// Block values come from the step sweep; the envelope entries are
/// re-derived by direct summation and cross-checked against the sweep, so
/// a disagreement between the two routes is itself reported.
pub fn verify_theorem(max_k: u64) -> Result<Vec<BlockReport>> {
    if max_k < 2 {
        return Err(Error::ArgBelowMinimum {
            what: "max_k",
            min: 2,
            got: max_k,
        });
    }
    let last_n = (max_k + 1) * (max_k + 1) - 2;
    // probs[n] = P_n for n = 0..=last_n
    let mut probs = Vec::with_capacity(last_n as usize + 1);
    probs.push(DyadicProb::one()); // P_0 = 1 by definition
    for p in StepSweep::new().take(last_n as usize) {
        probs.push(p.prob);
    }
    let half = DyadicProb::half();
    let mut reports: Vec<BlockReport> = Vec::new();
    for k in 2..=max_k {
        let block = build_block(k);
        let members: Vec<(u64, DyadicProb)> = block
            .members()
            .iter()
            .map(|&n| (n, probs[n as usize].clone()))
            .collect();
        let mut violations = Vec::new();

        let (q_minus, q_plus) = envelope(k)?;
        let sweep_last = &probs[block.last() as usize];
        let sweep_first_sq = &probs[(k * k) as usize];
        if &q_minus != sweep_last {
            violations.push(format!(
                "route disagreement at n={}: direct {} vs sweep {}",
                block.last(),
                q_minus.fraction_string(),
                sweep_last.fraction_string()
            ));
        }
        if &q_plus != sweep_first_sq {
            violations.push(format!(
                "route disagreement at n={}: direct {} vs sweep {}",
                k * k,
                q_plus.fraction_string(),
                sweep_first_sq.fraction_string()
            ));
        }

        let min = members.iter().min_by(|a, b| a.1.cmp(&b.1)).unwrap();
        let max = members.iter().max_by(|a, b| a.1.cmp(&b.1)).unwrap();
        let min_at_last_member = min.1 == q_minus;
        if !min_at_last_member {
            violations.push(format!(
                "block minimum {} at n={} undercuts Q_{k}^- = {}",
                min.1.fraction_string(),
                min.0,
                q_minus.fraction_string()
            ));
        }
        let max_at_first_square = max.1 == q_plus;
        if !max_at_first_square {
            violations.push(format!(
                "block maximum {} at n={} exceeds Q_{k}^+ = {}",
                max.1.fraction_string(),
                max.0,
                q_plus.fraction_string()
            ));
        }

        // interleaved chains: P is non-increasing along each parity class,
        // and the first two members are ordered P_{k²-1} <= P_{k²}
        let mut chains_hold = true;
        let mut check_chain = |ns: &[u64]| {
            for w in ns.windows(2) {
                let (lo_n, hi_n) = (w[0], w[1]);
                if probs[lo_n as usize] < probs[hi_n as usize] {
                    chains_hold = false;
                    violations.push(format!(
                        "chain break: P_{lo_n} = {} < P_{hi_n} = {}",
                        probs[lo_n as usize].fraction_string(),
                        probs[hi_n as usize].fraction_string()
                    ));
                }
            }
        };
        check_chain(block.sub1());
        check_chain(block.sub2());
        if probs[block.first() as usize] > probs[(k * k) as usize] {
            chains_hold = false;
            violations.push(format!(
                "opening pair out of order: P_{} > P_{}",
                block.first(),
                k * k
            ));
        }

        let mut all_at_least_half = true;
        for (n, p) in &members {
            if *p < half {
                all_at_least_half = false;
                violations.push(format!("P_{n} = {} < 1/2", p.fraction_string()));
            }
        }

        let envelopes_strictly_ordered = q_minus < q_plus;
        if !envelopes_strictly_ordered {
            violations.push(format!(
                "envelopes not strictly ordered: Q_{k}^- = {} vs Q_{k}^+ = {}",
                q_minus.fraction_string(),
                q_plus.fraction_string()
            ));
        }

        let (q_minus_increased, q_plus_decreased) = match reports.last() {
            None => (None, None),
            Some(prev) => {
                let inc = q_minus > prev.q_minus;
                let dec = q_plus < prev.q_plus;
                if !inc {
                    violations.push(format!(
                        "lower envelope failed to increase: Q_{}^- = {} vs Q_{k}^- = {}",
                        prev.k,
                        prev.q_minus.fraction_string(),
                        q_minus.fraction_string()
                    ));
                }
                if !dec {
                    violations.push(format!(
                        "upper envelope failed to decrease: Q_{}^+ = {} vs Q_{k}^+ = {}",
                        prev.k,
                        prev.q_plus.fraction_string(),
                        q_plus.fraction_string()
                    ));
                }
                (Some(inc), Some(dec))
            }
        };

        reports.push(BlockReport {
            k,
            q_minus,
            q_plus,
            probs: members,
            min_at_last_member,
            max_at_first_square,
            chains_hold,
            all_at_least_half,
            envelopes_strictly_ordered,
            q_minus_increased,
            q_plus_decreased,
            violations,
        });
    }
    Ok(reports)
}
