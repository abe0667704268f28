//! Test-only oracles, independent of the library's evaluation paths.

use num_complex::Complex64;

/// Riemann zeta via the Dirichlet eta function with Cohen-Rodriguez
/// Villegas-Zagier acceleration of the alternating series:
/// `zeta(s) = eta(s) / (1 - 2^(1-s))`,
/// `eta(s) = sum_k (-1)^k (k+1)^-s`.
///
/// Entirely independent of the continuation-series route under test.
pub fn zeta_eta_oracle(s: Complex64) -> Complex64 {
    let n = 64i32;
    let mut d = (3.0 + 8f64.sqrt()).powi(n);
    d = (d + 1.0 / d) / 2.0;
    let mut b = -1.0f64;
    let mut c = -d;
    let mut sum = Complex64::new(0.0, 0.0);
    for k in 0..n {
        c = b - c;
        let a_k = (-s * ((k + 1) as f64).ln()).exp();
        sum += c * a_k;
        b *= ((k + n) * (k - n)) as f64 / ((k as f64 + 0.5) * (k as f64 + 1.0));
    }
    let eta = sum / d;
    let denom = Complex64::new(1.0, 0.0)
        - (-(s - 1.0) * std::f64::consts::LN_2).exp();
    eta / denom
}

/// Golden values from the literature for the oracle's own calibration.
pub const ZETA_2: f64 = 1.6449340668482264;
pub const ZETA_HALF: f64 = -1.4603545088095868;
pub const FIRST_ZERO: f64 = 14.134725141734694;
pub const SECOND_ZERO: f64 = 21.022039638771555;

#[allow(dead_code)]
pub fn assert_oracle_calibrated() {
    let z2 = zeta_eta_oracle(Complex64::new(2.0, 0.0));
    assert!((z2.re - ZETA_2).abs() < 1e-12, "zeta(2) oracle: {z2}");
    let zh = zeta_eta_oracle(Complex64::new(0.5, 0.0));
    assert!((zh.re - ZETA_HALF).abs() < 1e-12, "zeta(1/2) oracle: {zh}");
    let zero = zeta_eta_oracle(Complex64::new(0.5, FIRST_ZERO));
    assert!(zero.norm() < 1e-8, "oracle at first zero: {}", zero.norm());
}
