//! The square-delimited block structure of the central probability sequence.
//!
//! The integers split into blocks `C_k = {k²-1, k², ..., (k+1)²-2}`. Moving
//! from `P_{n-1}` to `P_n` shifts the window `[-√n, √n]` by less than one,
//! so exactly one new support point enters (interval `A_n`) or one leaves
//! (interval `B_n`), and which one is decided by the position of `n` inside
//! its block. Within a block the minimum of `P_n` lands on the last member
//! and the maximum on `k²`, which is what [`verify::verify_theorem`] checks
//! with exact witnesses.

mod delta;
mod recursion;
mod sweep;
mod verify;

pub use delta::{anchor_identity, delta, delta_sequence, DeltaSequence};
pub use recursion::{recursive_pn, RecursionSweep};
pub use sweep::{StepSweep, SweepPoint};
pub use verify::{
    cmp_to_normal_limit, envelope, verify_theorem, within_of_normal_limit, BlockReport,
    NORMAL_CENTRAL_MASS_DEN, NORMAL_CENTRAL_MASS_NUM,
};

use num_integer::Roots;

use crate::distribution::pmf;
use crate::error::{Error, Result};
use crate::exactnum::{in_half_open, SignedDyadic, SurdBound};

/// Index of the block containing `n`: the unique `k >= 1` with
/// `k² <= n+1 < (k+1)²`.
pub fn block_of(n: u64) -> u64 {
    (n + 1).sqrt()
}

/// One block `C_k` with its two parity classes.
///
/// `sub1` holds the `k` integers `{k², k²+2, ..., (k+1)²-3}` (the parity of
/// `k²`); `sub2` holds the `k+1` integers `{k²-1, k²+1, ..., (k+1)²-2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    k: u64,
    members: Vec<u64>,
    sub1: Vec<u64>,
    sub2: Vec<u64>,
}

impl Block {
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn sub1(&self) -> &[u64] {
        &self.sub1
    }

    pub fn sub2(&self) -> &[u64] {
        &self.sub2
    }

    pub fn first(&self) -> u64 {
        self.k * self.k - 1
    }

    pub fn last(&self) -> u64 {
        (self.k + 1) * (self.k + 1) - 2
    }
}

/// Builds `C_k` for `k >= 1`.
pub fn build_block(k: u64) -> Block {
    assert!(k >= 1, "blocks start at k = 1");
    let first = k * k - 1;
    let last = (k + 1) * (k + 1) - 2;
    let members: Vec<u64> = (first..=last).collect();
    let sub1: Vec<u64> = (k * k..last).step_by(2).collect();
    let sub2: Vec<u64> = (first..=last).step_by(2).collect();
    debug_assert_eq!(members.len() as u64, 2 * k + 1);
    debug_assert_eq!(sub1.len() as u64, k);
    debug_assert_eq!(sub2.len() as u64, k + 1);
    Block {
        k,
        members,
        sub1,
        sub2,
    }
}

/// Which of the two step intervals receives the support point at step `n`.
///
/// An `A` step gains probability mass, a `B` step loses it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::A => f.write_str("A"),
            Side::B => f.write_str("B"),
        }
    }
}

/// The exact decomposition of one step `P_{n-1} -> P_n`.
#[derive(Debug, Clone)]
pub struct StepClassification {
    n: u64,
    side: Side,
    hit: i64,
    increment: SignedDyadic,
    a_interval: (SurdBound, SurdBound),
    b_interval: (SurdBound, SurdBound),
}

impl StepClassification {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// The single integer of matching parity inside the hit interval.
    pub fn hit_integer(&self) -> i64 {
        self.hit
    }

    /// `P_n - P_{n-1}`, exactly.
    pub fn increment(&self) -> &SignedDyadic {
        &self.increment
    }

    /// `A_n = [-1-√n, -√(n-1))`.
    pub fn a_interval(&self) -> (SurdBound, SurdBound) {
        self.a_interval
    }

    /// `B_n = [-√(n-1), 1-√n)`.
    pub fn b_interval(&self) -> (SurdBound, SurdBound) {
        self.b_interval
    }
}

/// Arithmetic case split for the step at `n >= 3`, without computing the
/// probability increment. Returns the side and the hit integer.
pub(crate) fn classify_side(n: u64) -> (Side, i64) {
    debug_assert!(n >= 3);
    let k = block_of(n) as i64;
    let n = n as i64;
    if n == k * k - 1 {
        (Side::A, -k)
    } else if (n - k * k) % 2 == 0 {
        (Side::A, -1 - k)
    } else {
        (Side::B, -k)
    }
}

/// Classifies the step at `n >= 3`: which interval holds the unique support
/// point of `S_{n-1}` in `[-1-√n, 1-√n)`, and the resulting exact increment.
///
/// The hit produced by the case split is re-checked against the interval
/// bounds by exact surd comparison, and the opposite interval is confirmed
/// empty of the hit.
pub fn classify_step(n: u64) -> Result<StepClassification> {
    if n < 3 {
        return Err(Error::ArgBelowMinimum {
            what: "n",
            min: 3,
            got: n,
        });
    }
    let (side, hit) = classify_side(n);
    let a_interval = (SurdBound::minus_sqrt(-1, n), SurdBound::minus_sqrt(0, n - 1));
    let b_interval = (SurdBound::minus_sqrt(0, n - 1), SurdBound::minus_sqrt(1, n));
    let (own, other) = match side {
        Side::A => (&a_interval, &b_interval),
        Side::B => (&b_interval, &a_interval),
    };
    assert!(
        in_half_open(hit, &own.0, &own.1),
        "step {n}: hit {hit} must lie in the {side} interval"
    );
    assert!(
        !in_half_open(hit, &other.0, &other.1),
        "step {n}: hit {hit} must miss the opposite interval"
    );
    // by symmetry of S_{n-1} the mass at the hit equals the mass at |hit|
    let mass = pmf(n - 1, hit.abs());
    let increment = match side {
        Side::A => SignedDyadic::positive(mass),
        Side::B => SignedDyadic::negative(mass),
    };
    Ok(StepClassification {
        n,
        side,
        hit,
        increment,
        a_interval,
        b_interval,
    })
}
