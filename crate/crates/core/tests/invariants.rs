//! Cross-module invariants: the formula-based modules against the
//! independent oracles, and the structural facts about the step intervals
//! that the per-module unit tests cannot see on their own.

use num_bigint::BigUint;
use num_traits::One;
use radsum_core::{
    anchor_identity, central_prob, classify_step, cmp_int_surd, convolve_counts, delta_sequence,
    enumerate_counts, envelope, in_half_open, interval_prob, pmf, support, BinomialRow,
    DyadicProb, Side, SigmaThreshold, SurdBound,
};

fn sigma(s: &str) -> SigmaThreshold {
    s.parse().unwrap()
}

const A_GRID: [&str; 5] = ["0", "1/2", "1", "3/2", "2"];

#[test]
fn convolve_matches_binomial_row_and_direct_sum_up_to_500() {
    for n in 1u64..=500 {
        let table = convolve_counts(n);
        let row = BinomialRow::new(n);
        assert_eq!(table.total(), BigUint::one() << n as usize, "total at n={n}");
        for m in support(n) {
            assert_eq!(
                table.count(m),
                row.get((n as i64 + m) / 2),
                "count at n={n}, m={m}"
            );
        }
        for a in A_GRID {
            let a = sigma(a);
            assert_eq!(
                table.central_prob(&a),
                central_prob(n, &a),
                "central at n={n}, a={a}"
            );
        }
    }
}

#[test]
fn enumeration_matches_convolution_up_to_22() {
    for n in 1u64..=22 {
        let e = enumerate_counts(n).unwrap();
        assert_eq!(e, convolve_counts(n), "tables at n={n}");
        for a in A_GRID {
            let a = sigma(a);
            assert_eq!(e.central_prob(&a), central_prob(n, &a), "n={n} a={a}");
        }
    }
}

#[test]
fn pmf_is_symmetric_and_normalized_up_to_500() {
    for n in 1u64..=500 {
        let row = BinomialRow::new(n);
        let total: BigUint = row.coeffs().iter().sum();
        assert_eq!(total, BigUint::one() << n as usize);
        for m in support(n) {
            assert_eq!(pmf(n, m), pmf(n, -m), "n={n} m={m}");
        }
    }
}

// central mass + twice the upper tail covers the whole distribution
#[test]
fn central_complements_tails_up_to_500() {
    let one = SigmaThreshold::one();
    for n in 1u64..=500 {
        let row = BinomialRow::new(n);
        let m_top = largest_in_parity_point(n);
        let tail: BigUint = row.coeffs()[((n as i64 + m_top) / 2 + 1) as usize..]
            .iter()
            .sum();
        let central = central_prob(n, &one);
        let covered = central.numerator() << (n - central.exponent());
        assert_eq!(
            covered + (tail << 1u32),
            BigUint::one() << n as usize,
            "n={n}"
        );
    }
}

/// Largest `m >= 0` with `m² <= n` and the parity of `n`; `-1` parity means
/// no valid point (odd `n` with √n < 1 cannot happen for n >= 1).
fn largest_in_parity_point(n: u64) -> i64 {
    let mut m = num_integer::Roots::sqrt(&n) as i64;
    if m % 2 != (n % 2) as i64 {
        m -= 1;
    }
    m
}

#[test]
fn binomial_reformulation_up_to_500() {
    use num_rational::Ratio;
    use radsum_core::{binomial_central_prob, binomial_range_prob};
    let one = SigmaThreshold::one();
    for n in 1u64..=500 {
        assert_eq!(
            binomial_central_prob(n, &one),
            central_prob(n, &one),
            "count-variable route at n={n}"
        );
    }
    // at perfect squares the count-range endpoints are exact rationals
    for r in 1i64..=22 {
        let n = (r * r) as u64;
        assert_eq!(
            binomial_range_prob(n, Ratio::new(r * r - r, 2), Ratio::new(r * r + r, 2)),
            central_prob(n, &one),
            "rational endpoints at n={n}"
        );
    }
}

#[test]
fn step_interval_exclusivity_up_to_2000() {
    for n in 3u64..=2000 {
        let step = classify_step(n).unwrap();
        let (a_lo, a_hi) = step.a_interval();
        let (b_lo, b_hi) = step.b_interval();
        let in_a = interval_prob(n - 1, &a_lo, &a_hi);
        let in_b = interval_prob(n - 1, &b_lo, &b_hi);
        let hit_mass = pmf(n - 1, step.hit_integer());
        assert!(!hit_mass.is_zero(), "hit must be a support point at n={n}");
        match step.side() {
            Side::A => {
                assert_eq!(in_a, hit_mass, "A mass at n={n}");
                assert!(in_b.is_zero(), "B not empty at n={n}");
            }
            Side::B => {
                assert_eq!(in_b, hit_mass, "B mass at n={n}");
                assert!(in_a.is_zero(), "A not empty at n={n}");
            }
        }
    }
}

// the union [-1-√n, 1-√n) always holds exactly one even and one odd integer
#[test]
fn step_interval_geometry_up_to_5000() {
    for n in 3u64..=5000 {
        let lo = SurdBound::minus_sqrt(-1, n);
        let hi = SurdBound::minus_sqrt(1, n);
        let members: Vec<i64> = (lo.floor()..=hi.ceil())
            .filter(|&z| in_half_open(z, &lo, &hi))
            .collect();
        assert_eq!(members.len(), 2, "n={n}: {members:?}");
        assert_eq!(
            members.iter().filter(|z| z.rem_euclid(2) == 0).count(),
            1,
            "n={n}"
        );
        // the interval has length exactly 2, so the two integers are adjacent
        assert_eq!(members[1] - members[0], 1, "n={n}");
        // and each sits in exactly one of the two halves
        let mid = SurdBound::minus_sqrt(0, n - 1);
        for z in members {
            assert_ne!(
                in_half_open(z, &lo, &mid),
                in_half_open(z, &mid, &hi),
                "n={n} z={z}"
            );
        }
    }
}

// the anchor identity forces the block-to-block inequality between the
// minima; check the conclusion directly on exact values
#[test]
fn block_minima_never_decrease_up_to_300() {
    let one = SigmaThreshold::one();
    for k in 2u64..=300 {
        let at_open = central_prob(k * k - 2, &one);
        let at_close = central_prob((k + 1) * (k + 1) - 2, &one);
        assert!(at_open <= at_close, "P_(k²-2) > P_((k+1)²-2) at k={k}");
        assert!(anchor_identity(k).unwrap().is_zero(), "anchor at k={k}");
        // the delta machinery behind the inequality stays well-formed
        let seq = delta_sequence(k).unwrap();
        assert!(seq.deltas().iter().all(|d| d.is_negative()));
    }
}

#[test]
fn envelope_gaps_shrink() {
    use radsum_core::cmp_to_normal_limit;
    use std::cmp::Ordering;
    let mut prev: Option<(DyadicProb, DyadicProb)> = None;
    for k in 2u64..=40 {
        let (q_minus, q_plus) = envelope(k).unwrap();
        assert_eq!(cmp_to_normal_limit(&q_minus), Ordering::Less);
        assert_eq!(cmp_to_normal_limit(&q_plus), Ordering::Greater);
        if let Some((pm, pp)) = prev {
            // both envelopes bracket the limit, so monotonicity is exactly
            // the statement that the gaps shrink
            assert!(q_minus > pm, "lower gap widened at k={k}");
            assert!(q_plus < pp, "upper gap widened at k={k}");
        }
        prev = Some((q_minus, q_plus));
    }
}

#[test]
fn exact_comparison_agrees_with_support_membership() {
    // every support point of S_{n-1} inside the union interval is the hit
    for n in 3u64..=1200 {
        let step = classify_step(n).unwrap();
        let lo = SurdBound::minus_sqrt(-1, n);
        let hi = SurdBound::minus_sqrt(1, n);
        let hits: Vec<i64> = support(n - 1)
            .into_iter()
            .filter(|&m| in_half_open(m, &lo, &hi))
            .collect();
        assert_eq!(hits, vec![step.hit_integer()], "n={n}");
        assert_eq!(
            cmp_int_surd(step.hit_integer(), &hi),
            std::cmp::Ordering::Less
        );
    }
}

#[test]
fn core_types_are_send_and_sync() {
    fn check<T: Send + Sync>() {}
    check::<DyadicProb>();
    check::<radsum_core::SignedDyadic>();
    check::<SurdBound>();
    check::<radsum_core::Block>();
    check::<radsum_core::StepClassification>();
    check::<radsum_core::CountTable>();
    check::<radsum_core::BlockReport>();
    check::<BinomialRow>();
}
