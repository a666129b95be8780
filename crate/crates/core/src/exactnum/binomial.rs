//! Exact binomial coefficients at arbitrary size.
//!
//! Three engines with different cost profiles:
//! - [`binomial`]: multiplicative running product, O(j) scalar multiply/divide
//!   steps. The default for single queries.
//! - [`factored_binomial`]: prime factorization via Legendre exponents and a
//!   balanced product. Much faster when both `j` and `n - j` are large.
//! - [`BinomialRow`]: a materialized row `binom(n, 0..=n)` for paths that
//!   consume many coefficients of the same `n`.
//!
//! [`RollingBinomial`] maintains one coefficient under unit steps of `n` and
//! `j`; the block sweeps are built on it.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Arbitrary-precision non-negative count (binomial coefficients, path counts).
pub type BigCount = BigUint;

/// `binom(n, j)` by the multiplicative formula; exact at all sizes.
///
/// Returns 0 when `j < 0` or `j > n`.
pub fn binomial(n: u64, j: i64) -> BigUint {
    if j < 0 || j as u64 > n {
        return BigUint::zero();
    }
    let j = (j as u64).min(n - j as u64);
    let mut acc = BigUint::one();
    for i in 1..=j {
        // acc holds binom(n-j+i-1, i-1); multiply first so the division is exact
        acc = exact_div(acc * (n - j + i), i);
    }
    acc
}

/// `binom(n, j)` via prime factorization: Legendre exponents for every prime
/// up to `n`, combined with a balanced product. Preferred for bulk seeds with
/// `j` near `n/2`, where the multiplicative formula needs O(n) big divisions.
pub fn factored_binomial(n: u64, j: i64) -> BigUint {
    if j < 0 || j as u64 > n {
        return BigUint::zero();
    }
    let j = j as u64;
    if n == 0 || j == 0 || j == n {
        return BigUint::one();
    }
    let mut factors = Vec::new();
    for p in sieve_primes(n) {
        let mut exp = 0u32;
        let mut pt = p;
        loop {
            exp += (n / pt - j / pt - (n - j) / pt) as u32;
            match pt.checked_mul(p) {
                Some(next) if next <= n => pt = next,
                _ => break,
            }
        }
        if exp > 0 {
            factors.push(BigUint::from(p).pow(exp));
        }
    }
    balanced_product(&factors)
}

/// Engine chooser: multiplicative near the row ends, factored in the middle
/// where it is orders of magnitude cheaper.
pub(crate) fn binomial_auto(n: u64, j: i64) -> BigUint {
    if j < 0 || j as u64 > n {
        return BigUint::zero();
    }
    if (j as u64).min(n - j as u64) > 512 {
        factored_binomial(n, j)
    } else {
        binomial(n, j)
    }
}

/// Primes up to and including `limit` (simple Eratosthenes sieve).
fn sieve_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
    }
    primes
}

/// Product of all factors, multiplying balanced halves so the big
/// multiplications happen between operands of similar size.
fn balanced_product(factors: &[BigUint]) -> BigUint {
    match factors.len() {
        0 => BigUint::one(),
        1 => factors[0].clone(),
        len => {
            let (lo, hi) = factors.split_at(len / 2);
            balanced_product(lo) * balanced_product(hi)
        }
    }
}

fn exact_div(value: BigUint, d: u64) -> BigUint {
    let (q, r) = value.div_rem(&BigUint::from(d));
    debug_assert!(r.is_zero(), "inexact division by {d}");
    q
}

/// A fully materialized row `binom(n, 0..=n)`.
///
/// Built once, read many times; immutable after construction, so shared
/// references are safe across threads.
#[derive(Debug, Clone)]
pub struct BinomialRow {
    n: u64,
    coeffs: Vec<BigUint>,
}

impl BinomialRow {
    pub fn new(n: u64) -> Self {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        let mut c = BigUint::one();
        coeffs.push(c.clone());
        for j in 0..n {
            c = exact_div(c * (n - j), j + 1);
            coeffs.push(c.clone());
        }
        BinomialRow { n, coeffs }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `binom(n, j)`, following the same out-of-range convention as [`binomial`].
    pub fn get(&self, j: i64) -> BigUint {
        if j < 0 || j as u64 > self.n {
            BigUint::zero()
        } else {
            self.coeffs[j as usize].clone()
        }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }
}

/// `binom(n, j)` maintained under unit increments of `n` and `j`.
///
/// Each step is one scalar multiplication and one exact scalar division on
/// the current value, so a sweep touching coefficients along a path of
/// length L costs O(L) big-integer scalar operations instead of O(L·n).
#[derive(Debug, Clone)]
pub struct RollingBinomial {
    n: u64,
    j: u64,
    value: BigUint,
}

impl RollingBinomial {
    /// Seeds at `binom(n, j)`. Requires `j <= n`.
    pub fn new(n: u64, j: u64) -> Self {
        assert!(j <= n, "rolling binomial requires j <= n");
        let value = binomial_auto(n, j as i64);
        RollingBinomial { n, j, value }
    }

    /// `binom(n, j) -> binom(n+1, j)`.
    pub fn inc_n(&mut self) {
        self.n += 1;
        let value = std::mem::take(&mut self.value);
        self.value = exact_div(value * self.n, self.n - self.j);
    }

    /// `binom(n, j) -> binom(n, j+1)`. Requires `j < n`.
    pub fn inc_j(&mut self) {
        assert!(self.j < self.n);
        let value = std::mem::take(&mut self.value);
        self.value = exact_div(value * (self.n - self.j), self.j + 1);
        self.j += 1;
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }
}
