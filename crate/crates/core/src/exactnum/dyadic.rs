//! Exact dyadic probabilities `a / 2^e` and their signed differences.
//!
//! Every probability that arises from sums of signs has a power-of-two
//! denominator, so arithmetic stays in this closed family: addition and
//! subtraction align exponents, and reduction to lowest terms happens only
//! at output boundaries.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact probability of the form `num / 2^exp`, guaranteed in `[0, 1]`.
///
/// The representation is not kept in lowest terms; equality and ordering
/// compare values, not representations.
#[derive(Debug, Clone)]
pub struct DyadicProb {
    num: BigUint,
    exp: u64,
}

impl DyadicProb {
    /// `num / 2^exp`; fails unless the value lies in `[0, 1]`.
    pub fn new(num: BigUint, exp: u64) -> Result<Self> {
        if num.bits() > exp + 1 || (num.bits() == exp + 1 && !is_pow2(&num)) {
            return Err(Error::MassAboveOne {
                num: num.to_string(),
                exp,
            });
        }
        Ok(DyadicProb { num, exp })
    }

    pub fn zero() -> Self {
        DyadicProb {
            num: BigUint::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        DyadicProb {
            num: BigUint::one(),
            exp: 0,
        }
    }

    pub fn half() -> Self {
        DyadicProb {
            num: BigUint::one(),
            exp: 1,
        }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.cmp_value(&DyadicProb::one()) == Ordering::Equal
    }

    /// Canonical form: numerator odd, or zero with exponent zero.
    pub fn normalized(&self) -> DyadicProb {
        if self.num.is_zero() {
            return DyadicProb::zero();
        }
        let tz = self.num.trailing_zeros().unwrap_or(0).min(self.exp);
        DyadicProb {
            num: &self.num >> tz,
            exp: self.exp - tz,
        }
    }

    fn cmp_value(&self, other: &DyadicProb) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        a.cmp(&b)
    }

    /// Exact sum; errors if it exceeds one.
    pub fn add(&self, other: &DyadicProb) -> Result<DyadicProb> {
        let e = self.exp.max(other.exp);
        let num = (&self.num << (e - self.exp)) + (&other.num << (e - other.exp));
        DyadicProb::new(num, e)
            .map_err(|_| Error::SumAboveOne(self.fraction_string(), other.fraction_string()))
    }

    /// Exact signed difference `self - other`.
    pub fn sub(&self, other: &DyadicProb) -> SignedDyadic {
        let e = self.exp.max(other.exp);
        let a = &self.num << (e - self.exp);
        let b = &other.num << (e - other.exp);
        match a.cmp(&b) {
            Ordering::Equal => SignedDyadic::zero(),
            Ordering::Greater => SignedDyadic {
                sign: Sign::Plus,
                magnitude: DyadicProb { num: a - b, exp: e },
            },
            Ordering::Less => SignedDyadic {
                sign: Sign::Minus,
                magnitude: DyadicProb { num: b - a, exp: e },
            },
        }
    }

    /// Exact product by a non-negative integer; errors if it exceeds one.
    pub fn scaled(&self, factor: u64) -> Result<DyadicProb> {
        DyadicProb::new(&self.num * factor, self.exp)
    }

    /// Reduced fraction text, e.g. `35/64`; whole values print without `/`.
    pub fn fraction_string(&self) -> String {
        let n = self.normalized();
        if n.exp == 0 {
            n.num.to_string()
        } else {
            format!("{}/{}", n.num, BigUint::one() << n.exp)
        }
    }

    /// Power-of-two denominator text, e.g. `35/2^6`, in canonical form.
    pub fn pow2_string(&self) -> String {
        let n = self.normalized();
        format!("{}/2^{}", n.num, n.exp)
    }

    /// Correctly rounded (half-even) decimal expansion with `digits`
    /// fractional digits. `digits` must lie in `1..=50`.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        decimal_ratio_string(&self.num, &(BigUint::one() << self.exp), digits)
    }
}

impl PartialEq for DyadicProb {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(other) == Ordering::Equal
    }
}

impl Eq for DyadicProb {}

impl PartialOrd for DyadicProb {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DyadicProb {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_value(other)
    }
}

impl fmt::Display for DyadicProb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fraction_string())
    }
}

fn is_pow2(n: &BigUint) -> bool {
    !n.is_zero() && n.trailing_zeros().unwrap_or(0) + 1 == n.bits()
}

/// Correctly rounded (round-half-even) decimal expansion of `num / den`
/// with exactly `digits` fractional digits.
pub fn decimal_ratio_string(num: &BigUint, den: &BigUint, digits: usize) -> String {
    assert!(
        (1..=50).contains(&digits),
        "decimal rendering supports 1..=50 digits"
    );
    assert!(!den.is_zero());
    let scale = BigUint::from(10u32).pow(digits as u32);
    let (mut q, r) = (num * &scale).div_rem(den);
    match (&r << 1u32).cmp(den) {
        Ordering::Greater => q += 1u32,
        Ordering::Equal => {
            if (&q % 2u32).is_one() {
                q += 1u32;
            }
        }
        Ordering::Less => {}
    }
    let (int_part, frac) = q.div_rem(&scale);
    format!("{int_part}.{frac:0>digits$}")
}

/// A signed dyadic value in `[-1, 1]`: sign plus magnitude.
///
/// The sign is `NoSign` exactly when the magnitude is zero.
#[derive(Debug, Clone)]
pub struct SignedDyadic {
    sign: Sign,
    magnitude: DyadicProb,
}

impl SignedDyadic {
    pub fn zero() -> Self {
        SignedDyadic {
            sign: Sign::NoSign,
            magnitude: DyadicProb::zero(),
        }
    }

    pub fn positive(magnitude: DyadicProb) -> Self {
        if magnitude.is_zero() {
            return SignedDyadic::zero();
        }
        SignedDyadic {
            sign: Sign::Plus,
            magnitude,
        }
    }

    pub fn negative(magnitude: DyadicProb) -> Self {
        if magnitude.is_zero() {
            return SignedDyadic::zero();
        }
        SignedDyadic {
            sign: Sign::Minus,
            magnitude,
        }
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn magnitude(&self) -> &DyadicProb {
        &self.magnitude
    }

    pub fn is_zero(&self) -> bool {
        self.sign == Sign::NoSign
    }

    pub fn is_negative(&self) -> bool {
        self.sign == Sign::Minus
    }

    pub fn neg(&self) -> SignedDyadic {
        SignedDyadic {
            sign: match self.sign {
                Sign::Plus => Sign::Minus,
                Sign::Minus => Sign::Plus,
                Sign::NoSign => Sign::NoSign,
            },
            magnitude: self.magnitude.clone(),
        }
    }

    /// Exact signed sum; errors if the result leaves `[-1, 1]`.
    pub fn add(&self, other: &SignedDyadic) -> Result<SignedDyadic> {
        match (self.sign, other.sign) {
            (Sign::NoSign, _) => Ok(other.clone()),
            (_, Sign::NoSign) => Ok(self.clone()),
            (Sign::Plus, Sign::Plus) => Ok(SignedDyadic::positive(
                self.magnitude.add(&other.magnitude)?,
            )),
            (Sign::Minus, Sign::Minus) => Ok(SignedDyadic::negative(
                self.magnitude.add(&other.magnitude)?,
            )),
            (Sign::Plus, Sign::Minus) => Ok(self.magnitude.sub(&other.magnitude)),
            (Sign::Minus, Sign::Plus) => Ok(other.magnitude.sub(&self.magnitude)),
        }
    }

    /// Exact product by a non-negative integer.
    pub fn scaled(&self, factor: u64) -> Result<SignedDyadic> {
        if factor == 0 {
            return Ok(SignedDyadic::zero());
        }
        Ok(SignedDyadic {
            sign: self.sign,
            magnitude: self.magnitude.scaled(factor)?,
        })
    }

    /// Converts back to a plain probability; errors when negative.
    pub fn into_prob(self) -> Result<DyadicProb> {
        match self.sign {
            Sign::Minus => Err(Error::NegativeProbability(self.fraction_string())),
            _ => Ok(self.magnitude),
        }
    }

    /// Signed reduced fraction text: `+3/4`, `-1/8`, or `0`.
    pub fn fraction_string(&self) -> String {
        match self.sign {
            Sign::NoSign => "0".to_string(),
            Sign::Plus => format!("+{}", self.magnitude.fraction_string()),
            Sign::Minus => format!("-{}", self.magnitude.fraction_string()),
        }
    }

    pub fn to_decimal_string(&self, digits: usize) -> String {
        let body = self.magnitude.to_decimal_string(digits);
        match self.sign {
            Sign::Minus => format!("-{body}"),
            _ => body,
        }
    }
}

impl PartialEq for SignedDyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for SignedDyadic {}

impl PartialOrd for SignedDyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedDyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.sign, other.sign) {
            (Sign::Minus, Sign::Minus) => other.magnitude.cmp(&self.magnitude),
            (Sign::Minus, _) => Ordering::Less,
            (_, Sign::Minus) => Ordering::Greater,
            (Sign::NoSign, Sign::NoSign) => Ordering::Equal,
            (Sign::NoSign, Sign::Plus) => Ordering::Less,
            (Sign::Plus, Sign::NoSign) => Ordering::Greater,
            (Sign::Plus, Sign::Plus) => self.magnitude.cmp(&other.magnitude),
        }
    }
}

impl From<DyadicProb> for SignedDyadic {
    fn from(p: DyadicProb) -> Self {
        SignedDyadic::positive(p)
    }
}

impl fmt::Display for SignedDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fraction_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dy(num: u64, exp: u64) -> DyadicProb {
        DyadicProb::new(BigUint::from(num), exp).unwrap()
    }

    #[test]
    fn construction_rejects_above_one() {
        assert!(DyadicProb::new(BigUint::from(5u32), 2).is_err());
        assert!(DyadicProb::new(BigUint::from(4u32), 2).is_ok()); // exactly one
        assert!(DyadicProb::new(BigUint::from(0u32), 7).is_ok());
    }

    #[test]
    fn add_examples() {
        assert_eq!(dy(1, 2).add(&dy(1, 2)).unwrap(), dy(1, 1));
        assert_eq!(dy(3, 2).add(&dy(1, 3)).unwrap(), dy(7, 3));
        assert_eq!(dy(25, 5).add(&dy(5, 6)).unwrap(), dy(55, 6));
        assert!(matches!(
            dy(25, 5).add(&dy(35, 6)),
            Err(Error::SumAboveOne(..))
        ));
    }

    #[test]
    fn sub_examples() {
        let d = dy(1, 3).sub(&dy(1, 2));
        assert_eq!(d, SignedDyadic::negative(dy(1, 3)));
        assert_eq!(dy(1, 1).sub(&dy(1, 1)), SignedDyadic::zero());
        assert_eq!(dy(7, 3).sub(&dy(1, 3)), SignedDyadic::positive(dy(3, 2)));
        assert_eq!(dy(7, 3).sub(&dy(1, 3)).fraction_string(), "+3/4");
    }

    #[test]
    fn value_equality_ignores_representation() {
        assert_eq!(dy(2, 2), dy(1, 1));
        assert_eq!(dy(16, 4), DyadicProb::one());
        assert!(dy(1, 2) < dy(1, 1));
        assert_eq!(dy(6, 4).normalized().pow2_string(), "3/2^3");
    }

    #[test]
    fn fraction_strings() {
        assert_eq!(dy(35, 6).fraction_string(), "35/64");
        assert_eq!(dy(2, 1).fraction_string(), "1");
        assert_eq!(DyadicProb::zero().fraction_string(), "0");
        assert_eq!(dy(4719, 13).fraction_string(), "4719/8192");
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(dy(35, 6).to_decimal_string(2), "0.55");
        assert_eq!(dy(1, 1).to_decimal_string(4), "0.5000");
        assert_eq!(dy(4719, 13).to_decimal_string(4), "0.5760");
        assert_eq!(DyadicProb::one().to_decimal_string(3), "1.000");
        // half-even ties: 0.25 -> 0.2, 0.75 -> 0.8
        assert_eq!(dy(1, 2).to_decimal_string(1), "0.2");
        assert_eq!(dy(3, 2).to_decimal_string(1), "0.8");
    }

    #[test]
    fn signed_ordering() {
        let neg_eighth = SignedDyadic::negative(dy(1, 3));
        let neg_sixteenth = SignedDyadic::negative(dy(1, 4));
        assert!(neg_eighth < neg_sixteenth);
        assert!(neg_sixteenth < SignedDyadic::zero());
        assert!(SignedDyadic::zero() < SignedDyadic::positive(dy(1, 4)));
    }

    #[test]
    fn signed_add_and_scale() {
        let a = SignedDyadic::positive(dy(1, 2));
        let b = SignedDyadic::negative(dy(1, 3));
        assert_eq!(a.add(&b).unwrap(), SignedDyadic::positive(dy(1, 3)));
        assert_eq!(b.scaled(2).unwrap(), SignedDyadic::negative(dy(1, 2)));
        assert!(SignedDyadic::positive(dy(3, 2)).scaled(2).is_err());
        assert!(b.clone().into_prob().is_err());
        assert_eq!(a.into_prob().unwrap(), dy(1, 2));
    }

    proptest! {
        // (x add y) sub y == x, whenever the sum stays in range
        #[test]
        fn add_sub_round_trip(xn in 0u64..1024, yn in 0u64..1024) {
            let x = dy(xn, 11);
            let y = dy(yn, 12);
            if let Ok(sum) = x.add(&y) {
                let back = sum.sub(&y);
                prop_assert!(!back.is_negative());
                prop_assert_eq!(back.magnitude(), &x);
            } else {
                // only rejected when the true sum exceeds one
                prop_assert!(2 * xn + yn > 4096);
            }
        }

        #[test]
        fn normalization_preserves_value(n in 0u64..4096, e in 12u64..20) {
            let p = dy(n, e);
            prop_assert_eq!(p.normalized(), p);
        }
    }
}
