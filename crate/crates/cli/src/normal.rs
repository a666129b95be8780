//! Floating-point normal central mass `P{|Z| <= a}` for the comparison
//! command. Display-only; every exact value in the tool stays in the
//! big-integer path.

/// `P{|Z| <= a}` for standard normal `Z`, accurate well past ten digits.
pub fn normal_central_mass(a: f64) -> f64 {
    erf(a / std::f64::consts::SQRT_2)
}

/// Error function for non-negative arguments, by the scaled power series
/// `erf(x) = (2x/√π)·e^(-x²)·Σ (2x²)^k / (1·3·5···(2k+1))`.
///
/// All series terms are positive, so there is no cancellation; beyond
/// `x = 6` the complement is below f64 resolution.
fn erf(x: f64) -> f64 {
    debug_assert!(x >= 0.0);
    if x > 6.0 {
        return 1.0;
    }
    let t = 2.0 * x * x;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut odd = 1.0f64;
    while term > f64::EPSILON * sum {
        odd += 2.0;
        term *= t / odd;
        sum += term;
    }
    2.0 / std::f64::consts::PI.sqrt() * x * (-x * x).exp() * sum
}
