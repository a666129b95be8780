//! Linear-time exact evaluation of the whole sequence `P_n`.
//!
//! Each step changes `P` by the single point mass `P{S_{n-1} = |hit|}`, and
//! that coefficient moves by one unit in `n` and at most one unit in `j`
//! between consecutive steps, so a rolling binomial carries the entire
//! sweep in O(1) scalar big-integer operations per step.

use num_bigint::BigUint;
use num_traits::One;

use crate::blocks::{classify_side, Side};
use crate::exactnum::{DyadicProb, RollingBinomial};

/// One value of the sweep: `P_n` and, from `n = 3` on, the step that
/// produced it.
#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub n: u64,
    pub prob: DyadicProb,
    pub step: Option<(Side, i64)>,
}

/// Iterator over `(n, P_n)` for `n = 1, 2, 3, ...`, via the per-step
/// decomposition.
#[derive(Debug)]
pub struct StepSweep {
    next_n: u64,
    // numerator of P_{n-1} over 2^{n-1}
    num: BigUint,
    roll: Option<RollingBinomial>,
}

impl StepSweep {
    pub fn new() -> Self {
        StepSweep {
            next_n: 1,
            num: BigUint::one(),
            roll: None,
        }
    }
}

impl Default for StepSweep {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for StepSweep {
    type Item = SweepPoint;

    fn next(&mut self) -> Option<SweepPoint> {
        let n = self.next_n;
        self.next_n += 1;
        let point = |num: BigUint, step| SweepPoint {
            n,
            prob: DyadicProb::new(num, n).expect("sweep value cannot leave [0, 1]"),
            step,
        };
        match n {
            1 => Some(point(BigUint::from(2u32), None)), // P_1 = 2/2 = 1
            2 => {
                self.num = BigUint::from(2u32); // P_2 = 2/4 = 1/2
                Some(point(self.num.clone(), None))
            }
            _ => {
                let (side, hit) = classify_side(n);
                let j = ((n as i64 - 1 + hit.abs()) / 2) as u64;
                if let Some(roll) = self.roll.as_mut() {
                    roll.inc_n();
                    debug_assert!(j == roll.j() || j == roll.j() + 1);
                    if j > roll.j() {
                        roll.inc_j();
                    }
                } else {
                    self.roll = Some(RollingBinomial::new(n - 1, j));
                }
                let coeff = self.roll.as_ref().unwrap().value();
                // P_n = (num ± coeff) / 2^{n-1} = 2·(num ± coeff) / 2^n
                let num = match side {
                    Side::A => (&self.num + coeff) << 1u32,
                    Side::B => (&self.num - coeff) << 1u32,
                };
                self.num = num.clone();
                Some(point(num, Some((side, hit))))
            }
        }
    }
}
