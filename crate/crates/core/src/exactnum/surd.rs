//! Interval endpoints of the form `c + s·√m` and exact comparison with
//! integers.
//!
//! The half-open intervals that drive the step decomposition have endpoints
//! of exactly this shape, and whether an integer sits inside is decided by
//! sign analysis plus comparison of squares — never floating point, so
//! boundary cases (perfect squares) are exact.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::Sign;
use num_integer::Roots;

/// An endpoint `c + s·√m` with integer shift `c`, radical sign `s`, and
/// non-negative radicand `m`.
///
/// Constructors canonicalize `m == 0` to a plain integer, so `s == NoSign`
/// iff the radical term vanishes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SurdBound {
    shift: i64,
    sign: Sign,
    radicand: u64,
}

impl SurdBound {
    pub fn new(shift: i64, sign: Sign, radicand: u64) -> Self {
        if radicand == 0 || sign == Sign::NoSign {
            SurdBound {
                shift,
                sign: Sign::NoSign,
                radicand: 0,
            }
        } else {
            SurdBound {
                shift,
                sign,
                radicand,
            }
        }
    }

    /// The integer `c`.
    pub fn integer(shift: i64) -> Self {
        SurdBound::new(shift, Sign::NoSign, 0)
    }

    /// `c + √m`.
    pub fn plus_sqrt(shift: i64, radicand: u64) -> Self {
        SurdBound::new(shift, Sign::Plus, radicand)
    }

    /// `c - √m`.
    pub fn minus_sqrt(shift: i64, radicand: u64) -> Self {
        SurdBound::new(shift, Sign::Minus, radicand)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// True when the represented value is an integer (no radical, or a
    /// perfect-square radicand).
    pub fn is_integer(&self) -> bool {
        self.sign == Sign::NoSign || is_square(self.radicand)
    }

    /// Largest integer `<=` the value, computed exactly.
    pub fn floor(&self) -> i64 {
        let r = self.radicand.sqrt();
        match self.sign {
            Sign::NoSign => self.shift,
            Sign::Plus => self.shift + r as i64,
            Sign::Minus => {
                let adj = if r * r == self.radicand { 0 } else { 1 };
                self.shift - r as i64 - adj
            }
        }
    }

    /// Smallest integer `>=` the value, computed exactly.
    pub fn ceil(&self) -> i64 {
        if self.is_integer() {
            self.floor()
        } else {
            self.floor() + 1
        }
    }
}

impl fmt::Display for SurdBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::NoSign => write!(f, "{}", self.shift),
            Sign::Plus if self.shift == 0 => write!(f, "sqrt({})", self.radicand),
            Sign::Plus => write!(f, "{}+sqrt({})", self.shift, self.radicand),
            Sign::Minus if self.shift == 0 => write!(f, "-sqrt({})", self.radicand),
            Sign::Minus => write!(f, "{}-sqrt({})", self.shift, self.radicand),
        }
    }
}

fn is_square(m: u64) -> bool {
    let r = m.sqrt();
    r * r == m
}

/// Exact three-way comparison of the integer `z` against `c + s·√m`.
///
/// `Less` means `z` lies below the bound. `Equal` is reachable and exact:
/// it holds iff `(z - c)^2 = m` with the matching sign (or `z = c` with no
/// radical term).
pub fn cmp_int_surd(z: i64, bound: &SurdBound) -> Ordering {
    let d = z as i128 - bound.shift as i128;
    let m = bound.radicand as i128;
    match bound.sign {
        Sign::NoSign => d.cmp(&0),
        // compare d with +√m: negative d is always below, else square both sides
        Sign::Plus => {
            if d < 0 {
                Ordering::Less
            } else {
                (d * d).cmp(&m)
            }
        }
        // compare d with -√m (m > 0 after canonicalization): non-negative d is
        // always above, else the comparison flips under negation
        Sign::Minus => {
            if d >= 0 {
                Ordering::Greater
            } else {
                m.cmp(&(d * d))
            }
        }
    }
}

/// True iff `lo <= z < hi`, both ends decided by [`cmp_int_surd`].
///
/// Callers guarantee `lo <= hi` as real numbers.
pub fn in_half_open(z: i64, lo: &SurdBound, hi: &SurdBound) -> bool {
    cmp_int_surd(z, lo) != Ordering::Less && cmp_int_surd(z, hi) == Ordering::Less
}
