//! Digit-shell partial sums of the generalized special functions, and the
//! analytic continuations of the rho-Riemann zeta function for radices 2
//! and phi.
//!
//! Truncation is organized by digit count (the shell structure the
//! convergence proofs use), never by modulus cutoff, so that identity checks
//! can align shells exactly.

use crate::error::{Error, Result};
use crate::radices::{Radix, RadixName, Uniqueness};
use crate::rho_integers::{
    enumerate_isqrtphi, enumerate_negphi_even, enumerate_phi, fibonacci, nabla_negphi_even,
    nabla_phi, SetDepth,
};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// Absolute radius around an index point inside which evaluation is refused.
pub const POLE_PROXIMITY: f64 = 1e-9;

/// Sign convention of the summand: `(z + omega)^-s` keeps the classical
/// Hurwitz notation (poles at -Omega); `(z - omega)^-s` puts the poles on
/// the rho-integers themselves, as the tessellation sections prefer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignConvention {
    #[default]
    PlusOmega,
    MinusOmega,
}

impl SignConvention {
    /// `z + omega` or `z - omega` per the convention.
    pub fn apply(self, z: Complex64, omega: Complex64) -> Complex64 {
        match self {
            SignConvention::PlusOmega => z + omega,
            SignConvention::MinusOmega => z - omega,
        }
    }
}

/// Parameters of one partial-sum evaluation.
#[derive(Debug, Clone)]
pub struct SeriesSpec {
    pub radix: Radix,
    pub s: Complex64,
    pub depth: SetDepth,
    pub sign_convention: SignConvention,
    /// Whether the `-1/omega` (s = 1) or `-1/omega^2` (s = 2) term is
    /// subtracted from each summand.
    pub regularized: bool,
}

impl SeriesSpec {
    pub fn new(
        radix: Radix,
        s: Complex64,
        depth: SetDepth,
        sign_convention: SignConvention,
        regularized: bool,
    ) -> Result<Self> {
        let ok_depth = match depth {
            SetDepth::Single(n) => n >= 1,
            SetDepth::Pair(a, b) => a >= 1 && b >= 1,
        };
        if !ok_depth {
            return Err(Error::InvalidArgument {
                op: "SeriesSpec",
                message: "depth must be at least 1".into(),
            });
        }
        if regularized && !(s == Complex64::new(1.0, 0.0) || s == Complex64::new(2.0, 0.0)) {
            return Err(Error::InvalidArgument {
                op: "SeriesSpec",
                message: format!("regularized sums are defined for s in {{1, 2}}, got {s}"),
            });
        }
        Ok(SeriesSpec {
            radix,
            s,
            depth,
            sign_convention,
            regularized,
        })
    }

    pub fn plain(radix: Radix, s: Complex64, depth: SetDepth) -> Result<Self> {
        Self::new(radix, s, depth, SignConvention::PlusOmega, false)
    }
}

/// Principal-branch complex power `base^(-s)`.
pub fn pow_neg(base: Complex64, s: Complex64) -> Complex64 {
    (-s * base.ln()).exp()
}

fn check_pole(z: Complex64, base: Complex64, omega: Complex64) -> Result<()> {
    let dist = base.norm();
    if dist <= POLE_PROXIMITY {
        return Err(Error::PoleProximity {
            z,
            omega,
            dist,
            limit: POLE_PROXIMITY,
        });
    }
    Ok(())
}

/// The representative values a partial sum runs over, zero included.
pub fn index_values(radix: &Radix, depth: SetDepth) -> Result<Vec<Complex64>> {
    match (radix.uniqueness, depth) {
        (Uniqueness::Unique, SetDepth::Single(n)) => {
            // Horner over the bits of every code; no digit strings needed.
            if n > 24 {
                return Err(Error::DepthLimit {
                    op: "index_values",
                    depth: n,
                    min: 1,
                    max: 24,
                });
            }
            let rho = radix.value;
            let mut out = Vec::with_capacity(1usize << n);
            for code in 0..(1u64 << n) {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in (0..n).rev() {
                    acc = acc * rho + Complex64::new(((code >> i) & 1) as f64, 0.0);
                }
                out.push(acc);
            }
            Ok(out)
        }
        (Uniqueness::PhiFamily, SetDepth::Single(n)) => {
            Ok(enumerate_phi(n)?.values().collect())
        }
        (Uniqueness::NegPhiEvenFamily, SetDepth::Single(n)) => {
            Ok(enumerate_negphi_even(n)?.values().collect())
        }
        (Uniqueness::ISqrtPhiFamily, SetDepth::Single(n)) => {
            Ok(enumerate_isqrtphi(n, n)?.values().collect())
        }
        (Uniqueness::ISqrtPhiFamily, SetDepth::Pair(a, b)) => {
            Ok(enumerate_isqrtphi(a, b)?.values().collect())
        }
        (_, SetDepth::Pair(..)) => Err(Error::InvalidArgument {
            op: "index_values",
            message: format!("radix {} takes a single depth", radix.name),
        }),
    }
}

/// Finite rho-Hurwitz sum `sum (z +- omega)^-s` over the family's depth-n
/// representative set, or its regularized s = 1 / s = 2 variants.
pub fn hurwitz_partial(spec: &SeriesSpec, z: Complex64) -> Result<Complex64> {
    let values = index_values(&spec.radix, spec.depth)?;
    if spec.regularized {
        if spec.s.re == 1.0 {
            return regularized_s1(spec, z, &values);
        }
        return regularized_s2(spec, z, &values);
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for &omega in &values {
        let base = spec.sign_convention.apply(z, omega);
        check_pole(z, base, omega)?;
        sum += pow_neg(base, spec.s);
    }
    Ok(sum)
}

/// Finite rho-Riemann sum `sum omega^-s` over the nonzero representatives.
pub fn riemann_partial(spec: &SeriesSpec) -> Result<Complex64> {
    let values = index_values(&spec.radix, spec.depth)?;
    let mut sum = Complex64::new(0.0, 0.0);
    for &omega in &values {
        if omega.norm() <= POLE_PROXIMITY {
            continue; // the zero representative
        }
        sum += pow_neg(omega, spec.s);
    }
    Ok(sum)
}

fn regularized_s1(spec: &SeriesSpec, z: Complex64, values: &[Complex64]) -> Result<Complex64> {
    let mut sum = z.inv();
    check_pole(z, z, Complex64::new(0.0, 0.0))?;
    for &omega in values {
        if omega.norm() <= POLE_PROXIMITY {
            continue;
        }
        let base = spec.sign_convention.apply(z, omega);
        check_pole(z, base, omega)?;
        let reg = match spec.sign_convention {
            // 1/(z+w) - 1/w  or  1/(z-w) + 1/w, so poles stay on the set.
            SignConvention::PlusOmega => -omega.inv(),
            SignConvention::MinusOmega => omega.inv(),
        };
        sum += base.inv() + reg;
    }
    Ok(sum)
}

fn regularized_s2(spec: &SeriesSpec, z: Complex64, values: &[Complex64]) -> Result<Complex64> {
    check_pole(z, z, Complex64::new(0.0, 0.0))?;
    let mut sum = (z * z).inv();
    for &omega in values {
        if omega.norm() <= POLE_PROXIMITY {
            continue;
        }
        let base = spec.sign_convention.apply(z, omega);
        check_pole(z, base, omega)?;
        sum += (base * base).inv() - (omega * omega).inv();
    }
    Ok(sum)
}

/// Generalized cotangent partial sum.
///
/// Radices -2 and phi use the classical convention
/// `1/z + sum (1/(z+w) - 1/w)`; the even (-phi) variant `cot0` uses
/// `1/z + sum (1/(z-w) + 1/w)` so its poles sit on the rho-integers of the
/// 1-D tessellation.
pub fn cot_partial(radix: &Radix, z: Complex64, depth: u32) -> Result<Complex64> {
    let convention = match radix.name {
        RadixName::NegTwo | RadixName::Phi => SignConvention::PlusOmega,
        RadixName::NegPhi => SignConvention::MinusOmega,
        _ => {
            return Err(Error::UnsupportedFamily {
                radix: radix.name.as_str(),
                family: radix.uniqueness.as_str(),
                op: "cot_partial",
            })
        }
    };
    let spec = SeriesSpec::new(
        radix.clone(),
        Complex64::new(1.0, 0.0),
        SetDepth::Single(depth),
        convention,
        true,
    )?;
    hurwitz_partial(&spec, z)
}

/// Weierstrass partial sum `1/z^2 + sum (1/(z -+ w)^2 - 1/w^2)`.
pub fn wp_partial(
    radix: &Radix,
    z: Complex64,
    depth: SetDepth,
    convention: SignConvention,
) -> Result<Complex64> {
    let spec = SeriesSpec::new(
        radix.clone(),
        Complex64::new(2.0, 0.0),
        depth,
        convention,
        true,
    )?;
    hurwitz_partial(&spec, z)
}

/// `sum_Omega (z - omega)^-s`, the s-th Weierstrass derivative family
/// (minus-omega convention; includes the zero representative).
pub fn wp_deriv_partial(
    radix: &Radix,
    s: Complex64,
    z: Complex64,
    depth: SetDepth,
) -> Result<Complex64> {
    let spec = SeriesSpec::new(radix.clone(), s, depth, SignConvention::MinusOmega, false)?;
    hurwitz_partial(&spec, z)
}

/// rho-polygamma function.
///
/// Order n >= 1 is `(-1)^(n+1) n! zeta_rho(n+1, z)`; order 0 is
/// `-gamma_rho - zeta_rho(1, z)` with the regularized sum, which recovers the
/// classical digamma for radix 2.
pub fn polygamma_rho(radix: &Radix, order: u32, z: Complex64, depth: u32) -> Result<Complex64> {
    if order == 0 {
        let gamma = gamma_rho_constant(radix, depth)?;
        let spec = SeriesSpec::new(
            radix.clone(),
            Complex64::new(1.0, 0.0),
            SetDepth::Single(depth),
            SignConvention::PlusOmega,
            true,
        )?;
        let zeta1 = hurwitz_partial(&spec, z)?;
        return Ok(-zeta1 - gamma);
    }
    let spec = SeriesSpec::plain(
        radix.clone(),
        Complex64::new((order + 1) as f64, 0.0),
        SetDepth::Single(depth),
    )?;
    let factorial: f64 = (1..=order).map(|k| k as f64).product();
    let sign = if order % 2 == 0 { -1.0 } else { 1.0 };
    Ok(sign * factorial * hurwitz_partial(&spec, z)?)
}

/// Families whose nonzero representatives are positive reals, for which the
/// Gamma product and its Euler-constant calibration are well posed.
fn gamma_supported(radix: &Radix) -> bool {
    matches!(
        radix.name,
        RadixName::Two | RadixName::ThreeHalves | RadixName::Sqrt2 | RadixName::Phi
    )
}

/// The generalized Euler constant, calibrated so that `Gamma_rho(1) -> 1`:
/// `gamma_rho = sum_{Omega*} (1/w - log(1 + 1/w))`. Cached per (radix, depth).
pub fn gamma_rho_constant(radix: &Radix, depth: u32) -> Result<f64> {
    if !gamma_supported(radix) {
        return Err(Error::UnsupportedFamily {
            radix: radix.name.as_str(),
            family: radix.uniqueness.as_str(),
            op: "gamma_rho",
        });
    }
    static CACHE: OnceLock<Mutex<HashMap<(RadixName, u32), f64>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&(radix.name, depth)) {
        return Ok(v);
    }
    let values = index_values(radix, SetDepth::Single(depth))?;
    let mut gamma = 0.0f64;
    for &omega in &values {
        let w = omega.re;
        if w <= POLE_PROXIMITY {
            continue;
        }
        gamma += 1.0 / w - (1.0 + 1.0 / w).ln();
    }
    cache.lock().unwrap().insert((radix.name, depth), gamma);
    Ok(gamma)
}

/// rho-Gamma function by the truncated Weierstrass product:
/// `1 / (e^(gamma_rho z) z prod (1 + z/w) e^(-z/w))`.
pub fn gamma_rho_partial(radix: &Radix, z: Complex64, depth: u32) -> Result<Complex64> {
    let gamma = gamma_rho_constant(radix, depth)?;
    check_pole(z, z, Complex64::new(0.0, 0.0))?;
    let values = index_values(radix, SetDepth::Single(depth))?;
    // Accumulate in log space; the product has ~2^depth factors.
    let mut log_inv = Complex64::new(gamma, 0.0) * z + z.ln();
    for &omega in &values {
        if omega.norm() <= POLE_PROXIMITY {
            continue;
        }
        let factor = 1.0 + z / omega;
        check_pole(z, factor, -omega)?;
        log_inv += factor.ln() - z / omega;
    }
    Ok((-log_inv).exp())
}

/// Laurent coefficients of `zeta_rho(s, z)` around z = 0:
/// `c_k = (-1)^k Gamma(s+k) / (Gamma(s) Gamma(k+1)) zeta_rho(s+k)`.
#[derive(Debug, Clone)]
pub struct LaurentCoeffs {
    pub s: Complex64,
    pub coeffs: Vec<Complex64>,
}

impl LaurentCoeffs {
    /// `1/z^s + sum_k c_k z^k`, valid for |z| below half the smallest
    /// nonzero index modulus.
    pub fn reconstruct(&self, z: Complex64) -> Complex64 {
        let mut sum = pow_neg(z, self.s);
        let mut zp = Complex64::new(1.0, 0.0);
        for &c in &self.coeffs {
            sum += c * zp;
            zp *= z;
        }
        sum
    }
}

/// The ratio `Gamma(s+k) / (Gamma(s) Gamma(k+1))` by the stable recurrence
/// `r_0 = 1, r_k = r_{k-1} (s+k-1)/k`; no gamma-function evaluation needed.
fn gamma_ratio_sequence(s: Complex64, k_max: u32) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut r = Complex64::new(1.0, 0.0);
    out.push(r);
    for k in 1..=k_max {
        r *= (s + (k - 1) as f64) / k as f64;
        out.push(r);
    }
    out
}

pub fn laurent_coefficients(
    radix: &Radix,
    s: Complex64,
    k_max: u32,
    depth: u32,
) -> Result<LaurentCoeffs> {
    let values = index_values(radix, SetDepth::Single(depth))?;
    let ratios = gamma_ratio_sequence(s, k_max);
    let mut coeffs = Vec::with_capacity(k_max as usize + 1);
    for (k, ratio) in ratios.iter().enumerate() {
        let sk = s + k as f64;
        let mut zeta = Complex64::new(0.0, 0.0);
        for &omega in &values {
            if omega.norm() <= POLE_PROXIMITY {
                continue;
            }
            zeta += pow_neg(omega, sk);
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        coeffs.push(sign * ratio * zeta);
    }
    Ok(LaurentCoeffs { s, coeffs })
}

/// Analytic continuation of `zeta_rho(s)` for radix 2 and radix phi.
///
/// Radix 2: `zeta(s) = 2^s/(2^s - 2) (1 + sum_k (-1)^k r_k zeta(s+k)/2^(s+k))`.
/// Radix phi: prefactor `phi^(2s)/(phi^(2s) - phi^s - 1)` and `phi^(2(s+k))`
/// in the denominators.
///
/// Inner values `zeta_rho(s+k)` are summed directly when `Re(s+k)` clears the
/// family's convergence abscissa with margin, at the shallowest shell depth
/// whose tail bound meets the term's accuracy budget (never deeper than
/// `depth`); otherwise the continuation is applied recursively, at most twice.
pub fn zeta_continuation(
    radix: &Radix,
    s: Complex64,
    k_max: u32,
    depth: u32,
) -> Result<Complex64> {
    continuation_inner(radix, s, k_max, depth, 0)
}

/// Recursion is preferred below `abscissa + DIRECT_MARGIN`; at the recursion
/// cap a direct sum is still accepted down to `abscissa + HARD_MARGIN`.
const DIRECT_MARGIN: f64 = 1.05;
const HARD_MARGIN: f64 = 0.5;
const RECURSION_CAP: u32 = 2;

fn continuation_inner(
    radix: &Radix,
    s: Complex64,
    k_max: u32,
    depth: u32,
    level: u32,
) -> Result<Complex64> {
    let (prefactor, c) = continuation_prefactor(radix, s)?;
    let ratios = gamma_ratio_sequence(s, k_max);
    let rho = radix.value;
    let abscissa = radix.convergence_abscissa();

    let mut series = Complex64::new(1.0, 0.0);
    for k in 1..=k_max {
        let sk = s + k as f64;
        let weight = pow_neg(rho, Complex64::new(c as f64, 0.0) * sk);
        let coef = ratios[k as usize] * weight;
        let coef_norm = coef.norm();
        if coef_norm < 1e-22 {
            break; // remaining terms are below roundoff
        }
        let budget = 1e-6 / coef_norm.max(1.0);
        let zeta_sk = if sk.re >= abscissa + DIRECT_MARGIN {
            direct_zeta(radix, sk, depth, budget)?
        } else if level < RECURSION_CAP {
            continuation_inner(radix, sk, k_max, depth, level + 1)?
        } else if sk.re >= abscissa + HARD_MARGIN {
            direct_zeta(radix, sk, depth, budget)?
        } else {
            return Err(Error::ContinuationRecursion {
                s,
                max: RECURSION_CAP,
            });
        };
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        series += sign * ratios[k as usize] * zeta_sk * weight;
    }
    Ok(prefactor * series)
}

fn continuation_prefactor(radix: &Radix, s: Complex64) -> Result<(Complex64, u32)> {
    match radix.name {
        RadixName::Two => {
            let two_s = pow_neg(Complex64::new(2.0, 0.0), -s);
            let denom = two_s - 2.0;
            if denom.norm() < 1e-6 {
                return Err(Error::PrefactorPole {
                    what: "2^s - 2",
                    s,
                    denom: denom.norm(),
                });
            }
            Ok((two_s / denom, 1))
        }
        RadixName::Phi => {
            let phi_s = pow_neg(radix.value, -s);
            let phi_2s = phi_s * phi_s;
            let denom = phi_2s - phi_s - 1.0;
            if denom.norm() < 1e-6 {
                return Err(Error::PrefactorPole {
                    what: "phi^2s - phi^s - 1",
                    s,
                    denom: denom.norm(),
                });
            }
            Ok((phi_2s / denom, 2))
        }
        _ => Err(Error::UnsupportedFamily {
            radix: radix.name.as_str(),
            family: radix.uniqueness.as_str(),
            op: "zeta_continuation",
        }),
    }
}

/// Direct shell-sum of `zeta_rho(s)` to roughly `budget` absolute accuracy,
/// capped at `depth` shells.
fn direct_zeta(radix: &Radix, s: Complex64, depth: u32, budget: f64) -> Result<Complex64> {
    let sigma = s.re;
    match radix.name {
        RadixName::Two => {
            // Integer Dirichlet sum: tail below M is ~ M^(1-sigma)/(sigma-1).
            let needed = (1.0 / (budget * (sigma - 1.0))).powf(1.0 / (sigma - 1.0));
            let m_bits = needed.log2().ceil().clamp(4.0, depth as f64) as u32;
            let limit = (1u64 << m_bits) - 1;
            let mut sum = Complex64::new(0.0, 0.0);
            for j in 1..=limit {
                sum += pow_neg(Complex64::new(j as f64, 0.0), s);
            }
            Ok(sum)
        }
        RadixName::Phi => {
            let shells = phi_shell_values();
            let ratio = crate::radices::phi().powf(1.0 - sigma);
            let mut sum = Complex64::new(0.0, 0.0);
            for (n, shell) in shells.iter().enumerate() {
                let mut shell_sum = Complex64::new(0.0, 0.0);
                let mut shell_mass = 0.0f64;
                for &w in shell {
                    let term = pow_neg(Complex64::new(w, 0.0), s);
                    shell_sum += term;
                    shell_mass += term.norm();
                }
                sum += shell_sum;
                if n as u32 + 1 >= depth {
                    break;
                }
                if ratio < 1.0 && shell_mass * ratio / (1.0 - ratio) < budget {
                    break;
                }
            }
            Ok(sum)
        }
        _ => {
            let spec = SeriesSpec::plain(radix.clone(), s, SetDepth::Single(depth))?;
            riemann_partial(&spec)
        }
    }
}

/// Nonzero phi-integer values grouped by digit shell, shells 1..=22, cached
/// for the continuation's inner sums.
fn phi_shell_values() -> &'static Vec<Vec<f64>> {
    static SHELLS: OnceLock<Vec<Vec<f64>>> = OnceLock::new();
    SHELLS.get_or_init(|| {
        (1..=22u32)
            .map(|n| {
                nabla_phi(n)
                    .expect("shell depth in range")
                    .values()
                    .map(|v| v.re)
                    .collect()
            })
            .collect()
    })
}

/// Nonzero values in the n-th digit shell of the family, for the convergence
/// diagnostics. Unique families: exactly-n-digit strings with leading 1;
/// phi / even-(-phi): the corresponding nabla sets; i sqrt(phi): the
/// (n,n)-product shell.
pub fn shell_values(radix: &Radix, n: u32) -> Result<Vec<Complex64>> {
    match radix.uniqueness {
        Uniqueness::Unique => {
            if n == 1 {
                return Ok(vec![Complex64::new(1.0, 0.0)]);
            }
            if n > 24 {
                return Err(Error::DepthLimit {
                    op: "shell_values",
                    depth: n,
                    min: 1,
                    max: 24,
                });
            }
            let rho = radix.value;
            let mut out = Vec::with_capacity(1usize << (n - 1));
            for code in (1u64 << (n - 1))..(1u64 << n) {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in (0..n).rev() {
                    acc = acc * rho + Complex64::new(((code >> i) & 1) as f64, 0.0);
                }
                out.push(acc);
            }
            Ok(out)
        }
        Uniqueness::PhiFamily => Ok(nabla_phi(n)?.values().collect()),
        Uniqueness::NegPhiEvenFamily => Ok(nabla_negphi_even(n)?
            .nonzero_values()
            .collect()),
        Uniqueness::ISqrtPhiFamily => {
            let outer: Vec<Complex64> = enumerate_isqrtphi(n, n)?.values().collect();
            if n == 1 {
                return Ok(outer.into_iter().filter(|v| v.norm() > 0.5).collect());
            }
            let inner: Vec<Complex64> = enumerate_isqrtphi(n - 1, n - 1)?.values().collect();
            let mut sorted: Vec<(f64, f64)> = inner.iter().map(|v| (v.re, v.im)).collect();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let in_inner = |v: Complex64| {
                let idx = sorted.partition_point(|&(re, _)| re < v.re - 1e-9);
                sorted[idx..]
                    .iter()
                    .take_while(|&&(re, _)| re <= v.re + 1e-9)
                    .any(|&(re, im)| {
                        (re - v.re).abs() <= 1e-9 && (im - v.im).abs() <= 1e-9
                    })
            };
            Ok(outer.into_iter().filter(|&v| !in_inner(v)).collect())
        }
    }
}

/// Consecutive-shell mass ratios `T_{n+1}/T_n` with
/// `T_n = sum_{shell n} |omega|^-sigma`, the decay-ratio statistic of the
/// convergence diagnostics.
pub fn shell_decay_ratios(radix: &Radix, sigma: f64, n_lo: u32, n_hi: u32) -> Result<Vec<f64>> {
    let mut masses = Vec::new();
    for n in n_lo..=n_hi {
        let mass: f64 = shell_values(radix, n)?
            .iter()
            .map(|w| w.norm().powf(-sigma))
            .sum();
        masses.push(mass);
    }
    Ok(masses.windows(2).map(|w| w[1] / w[0]).collect())
}

/// Count of terms in the depth-n index set (metadata for the CLI).
pub fn index_count(radix: &Radix, depth: SetDepth) -> u64 {
    match (radix.uniqueness, depth) {
        (Uniqueness::Unique, SetDepth::Single(n)) => 1u64 << n,
        (Uniqueness::PhiFamily, SetDepth::Single(n)) => fibonacci(n + 2),
        (Uniqueness::NegPhiEvenFamily, SetDepth::Single(n)) => fibonacci(n + 1),
        (Uniqueness::ISqrtPhiFamily, SetDepth::Single(n)) => {
            fibonacci(n + 2) * fibonacci(n + 2)
        }
        (Uniqueness::ISqrtPhiFamily, SetDepth::Pair(a, b)) => {
            fibonacci(a + 2) * fibonacci(b + 2)
        }
        _ => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radices::phi;

    const PI: f64 = std::f64::consts::PI;

    fn radix(name: &str) -> Radix {
        Radix::make(name).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn hurwitz_two_term_and_binary_sum() {
        // depth 1 index set {0,1}: 1 + 1/4
        for name in ["two", "phi"] {
            let spec =
                SeriesSpec::plain(radix(name), c(2.0, 0.0), SetDepth::Single(1)).unwrap();
            let v = hurwitz_partial(&spec, c(1.0, 0.0)).unwrap();
            assert!((v - c(1.25, 0.0)).norm() < 1e-15, "{name}");
        }

        // radix two, s=2, depth 10, z=1: sum_{j=1}^{1024} j^-2
        let spec = SeriesSpec::plain(radix("two"), c(2.0, 0.0), SetDepth::Single(10)).unwrap();
        let v = hurwitz_partial(&spec, c(1.0, 0.0)).unwrap();
        let oracle: f64 = (1..=1024u32).map(|j| 1.0 / (j as f64 * j as f64)).sum();
        assert!((v.re - oracle).abs() < 1e-12);
        assert!((v.re - 1.6440).abs() < 2e-4);
    }

    #[test]
    fn hurwitz_phi_five_term_hand_sum() {
        let p = phi();
        let z = 0.5;
        let set = [0.0, 1.0, p, p * p, 1.0 + p * p];
        let oracle: f64 = set.iter().map(|w| (z + w).powi(-3)).sum();
        let spec = SeriesSpec::plain(radix("phi"), c(3.0, 0.0), SetDepth::Single(3)).unwrap();
        let v = hurwitz_partial(&spec, c(z, 0.0)).unwrap();
        assert!((v.re - oracle).abs() < 1e-14);
    }

    #[test]
    fn riemann_examples() {
        // radix two, depth 20 -> pi^2/6 within 1e-5
        let spec = SeriesSpec::plain(radix("two"), c(2.0, 0.0), SetDepth::Single(20)).unwrap();
        let v = riemann_partial(&spec).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-5);

        // radix phi, s=4, depth 1: only omega = 1
        let spec = SeriesSpec::plain(radix("phi"), c(4.0, 0.0), SetDepth::Single(1)).unwrap();
        assert!((riemann_partial(&spec).unwrap() - c(1.0, 0.0)).norm() < 1e-15);

        // i-sqrt-phi, s=4: the partial sums plateau to four decimals around
        // depth 8 (|v7-v8| = 1.19e-4, |v8-v9| = 4.5e-5 by direct summation).
        let at = |n| {
            riemann_partial(
                &SeriesSpec::plain(radix("i-sqrt-phi"), c(4.0, 0.0), SetDepth::Pair(n, n))
                    .unwrap(),
            )
            .unwrap()
        };
        let (v7, v8, v9) = (at(7), at(8), at(9));
        assert!((v7 - v8).norm() < 2e-4, "diff {}", (v7 - v8).norm());
        assert!((v8 - v9).norm() < 1e-4, "diff {}", (v8 - v9).norm());
    }

    #[test]
    fn pole_proximity_rejected() {
        let spec = SeriesSpec::plain(radix("two"), c(2.0, 0.0), SetDepth::Single(4)).unwrap();
        let err = hurwitz_partial(&spec, c(-1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::PoleProximity { .. }));

        // wp_deriv s=2, z=1: the omega=1 representative collides.
        let err = wp_deriv_partial(&radix("two"), c(2.0, 0.0), c(1.0, 0.0), SetDepth::Single(1))
            .unwrap_err();
        assert!(matches!(err, Error::PoleProximity { .. }));
    }

    #[test]
    fn cot_classical_values() {
        // cot_-2(z) = pi cot(pi z): at z = 1/4 the value is pi.
        let v = cot_partial(&radix("neg-two"), c(0.25, 0.0), 12).unwrap();
        assert!((v.re - PI).abs() < 1e-2, "{v}");
        // z = 1/2: cot vanishes.
        let v = cot_partial(&radix("neg-two"), c(0.5, 0.0), 12).unwrap();
        assert!(v.re.abs() < 1e-2);

        // Deeper truncation tightens toward the closed form at generic z.
        let z = c(0.2, 0.0);
        let oracle = PI / (PI * 0.2).tan();
        let shallow = (cot_partial(&radix("neg-two"), z, 8).unwrap().re - oracle).abs();
        let deep = (cot_partial(&radix("neg-two"), z, 14).unwrap().re - oracle).abs();
        assert!(deep < shallow);
        assert!(deep < 1e-2);
    }

    #[test]
    fn cot_negphi_residue_probe() {
        // (z - w) cot0(z) -> 1 as z -> w for poles w of the even family.
        let r = radix("neg-phi");
        let set = enumerate_negphi_even(10).unwrap();
        for omega in set.values().take(5) {
            if omega.norm() < 0.5 {
                continue;
            }
            let h = 1e-6;
            let z = omega + h;
            let v = cot_partial(&r, z, 10).unwrap();
            assert!(((v * h) - c(1.0, 0.0)).norm() < 1e-3, "omega {omega}");
        }
    }

    #[test]
    fn wp_lemniscatic_value() {
        // Full Gaussian lattice via radix -1+i: the digit window approaches
        // wp(1/2; Z[i]) = e1 = 6.8751858 (symmetric-lattice oracle, radius
        // 1600 with Richardson). The window's fractal boundary is only
        // asymptotically symmetric, so the error halves per two digits:
        // 0.100 at depth 10, 0.050 at 12, 0.025 at 14.
        let e1 = 6.8751858;
        let at = |n| {
            wp_partial(
                &radix("neg-one-plus-i"),
                c(0.5, 0.0),
                SetDepth::Single(n),
                SignConvention::MinusOmega,
            )
            .unwrap()
        };
        let errs: Vec<f64> = [10, 12, 14]
            .iter()
            .map(|&n| (at(n) - c(e1, 0.0)).norm())
            .collect();
        assert!(errs[1] < 6e-2, "{}", errs[1]);
        assert!(errs[2] < errs[1] && errs[1] < errs[0], "{errs:?}");
        assert!(errs[2] < 3e-2);
    }

    #[test]
    fn wp_conjugation_symmetry_isqrt2() {
        // The depth-12 index window is conjugation-symmetric only up to its
        // far shells; agreement is at the tail scale, not roundoff.
        let r = radix("i-sqrt2");
        let z = c(0.3, 0.2);
        let a = wp_partial(&r, z.conj(), SetDepth::Single(12), SignConvention::PlusOmega).unwrap();
        let b = wp_partial(&r, z, SetDepth::Single(12), SignConvention::PlusOmega)
            .unwrap()
            .conj();
        assert!((a - b).norm() < 5e-2, "{}", (a - b).norm());
    }

    #[test]
    fn wp_deriv_matches_finite_difference() {
        let r = radix("neg-one-plus-i");
        let z = c(0.4, 0.0);
        let h = 1e-5;
        let f = |z| {
            wp_partial(&r, z, SetDepth::Single(12), SignConvention::MinusOmega).unwrap()
        };
        let deriv = (f(z + h) - f(z - h)) / (2.0 * h);
        let v = wp_deriv_partial(&r, c(3.0, 0.0), z, SetDepth::Single(12)).unwrap();
        assert!((v * -2.0 - deriv).norm() < 1e-3, "{}", (v * -2.0 - deriv).norm());
    }

    #[test]
    fn hurwitz_derivative_consistency() {
        // d/dz hurwitz(s, z) = -s hurwitz(s+1, z), checked against central
        // differences at several z.
        for name in ["two", "phi", "neg-one-plus-i"] {
            let r = radix(name);
            let depth = SetDepth::Single(8);
            for s in [2.0, 3.0] {
                for i in 0..10 {
                    let z = c(0.15 + 0.07 * i as f64, 0.1);
                    let spec = SeriesSpec::plain(r.clone(), c(s, 0.0), depth).unwrap();
                    let spec1 = SeriesSpec::plain(r.clone(), c(s + 1.0, 0.0), depth).unwrap();
                    let h = 1e-6;
                    let num = (hurwitz_partial(&spec, z + h).unwrap()
                        - hurwitz_partial(&spec, z - h).unwrap())
                        / (2.0 * h);
                    let exact = -c(s, 0.0) * hurwitz_partial(&spec1, z).unwrap();
                    assert!(
                        (num - exact).norm() < 1e-6 * exact.norm().max(1.0),
                        "{name} s={s} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn branch_conjugation_for_real_index_sets() {
        for name in ["two", "neg-two", "phi", "neg-phi"] {
            let r = radix(name);
            let s = c(2.5, 0.7);
            let z = c(0.3, 0.4);
            let spec = SeriesSpec::plain(r.clone(), s, SetDepth::Single(8)).unwrap();
            let lhs = hurwitz_partial(&spec, z.conj()).unwrap();
            let spec_conj = SeriesSpec::plain(r, s.conj(), SetDepth::Single(8)).unwrap();
            let rhs = hurwitz_partial(&spec_conj, z).unwrap().conj();
            assert!((lhs - rhs).norm() < 1e-12, "{name}");
        }
    }

    #[test]
    fn polygamma_values() {
        let two = radix("two");
        // zeta_2(1, 1/2) = 2 log 2 (the regularized sum itself)
        let spec = SeriesSpec::new(
            two.clone(),
            c(1.0, 0.0),
            SetDepth::Single(14),
            SignConvention::PlusOmega,
            true,
        )
        .unwrap();
        let v = hurwitz_partial(&spec, c(0.5, 0.0)).unwrap();
        assert!((v.re - 2.0 * 2f64.ln()).abs() < 1e-3, "{v}");

        // psi^(1)(1) = zeta(2) = pi^2/6
        let v = polygamma_rho(&two, 1, c(1.0, 0.0), 14).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-4);

        // psi(1) = -gamma
        let v = polygamma_rho(&two, 0, c(1.0, 0.0), 14).unwrap();
        assert!((v.re + 0.5772156649).abs() < 1e-3, "{v}");
    }

    #[test]
    fn gamma_values() {
        let two = radix("two");
        // gamma_2 -> Euler's constant
        let g = gamma_rho_constant(&two, 16).unwrap();
        assert!((g - 0.57721566490153).abs() < 1e-4, "{g}");

        let v = gamma_rho_partial(&two, c(4.0, 0.0), 16).unwrap();
        assert!((v.re - 6.0).abs() < 1e-2, "{v}");
        let v = gamma_rho_partial(&two, c(1.0, 0.0), 16).unwrap();
        assert!((v - c(1.0, 0.0)).norm() < 1e-3);

        // Gamma_phi(1/phi): finite, nonzero.
        let p = radix("phi");
        let v = gamma_rho_partial(&p, c(1.0 / phi(), 0.0), 14).unwrap();
        assert!(v.norm() > 1e-6 && v.norm().is_finite());

        assert!(gamma_rho_partial(&radix("neg-two"), c(0.3, 0.0), 10).is_err());
    }

    #[test]
    fn laurent_reconstruction() {
        let two = radix("two");
        let coeffs = laurent_coefficients(&two, c(2.0, 0.0), 30, 16).unwrap();
        // c_0 = zeta_rho(s)
        let spec = SeriesSpec::plain(two.clone(), c(2.0, 0.0), SetDepth::Single(16)).unwrap();
        let zeta = riemann_partial(&spec).unwrap();
        assert!((coeffs.coeffs[0] - zeta).norm() < 1e-12);

        let z = c(0.25, 0.0);
        let direct = hurwitz_partial(&spec, z).unwrap();
        assert!((coeffs.reconstruct(z) - direct).norm() < 1e-6);
    }

    #[test]
    fn laurent_phi_sign_pattern() {
        let p = radix("phi");
        let coeffs = laurent_coefficients(&p, c(3.0, 0.0), 10, 16).unwrap();
        // The continuation-series terms c_k phi^-2k decay with limiting
        // ratio (s+k)/(k+1) phi^-2 -> phi^-2; the signs alternate.
        let terms: Vec<f64> = coeffs
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, ck)| ck.norm() * phi().powi(-2 * k as i32))
            .collect();
        for (k, ck) in coeffs.coeffs.iter().enumerate().skip(1) {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert!(ck.re * sign > 0.0, "k={k}");
            if k >= 2 {
                let ratio_bound = (3.0 + k as f64) / k as f64 * phi().powi(-2) * 1.2;
                assert!(terms[k] <= terms[k - 1] * ratio_bound, "k={k}");
                assert!(terms[k] < terms[k - 1], "k={k}");
            }
        }
    }

    #[test]
    fn continuation_radix_two() {
        let two = radix("two");
        let v = zeta_continuation(&two, c(2.0, 0.0), 60, 20).unwrap();
        assert!((v.re - PI * PI / 6.0).abs() < 1e-4, "{v}");

        // First zeta zero: the modulus nearly vanishes on the critical line.
        let v = zeta_continuation(&two, c(0.5, 14.1347), 80, 20).unwrap();
        assert!(v.norm() < 0.05, "{}", v.norm());

        // |zeta(1/2)| = 1.4603545...
        let v = zeta_continuation(&two, c(0.5, 0.0), 80, 20).unwrap();
        assert!((v.norm() - 1.4603545).abs() < 1e-3, "{}", v.norm());

        // Prefactor pole at s = 1.
        assert!(matches!(
            zeta_continuation(&two, c(1.0, 0.0), 40, 16),
            Err(Error::PrefactorPole { .. })
        ));
    }

    #[test]
    fn continuation_radix_phi() {
        let p = radix("phi");
        for s in [2.5, 3.0, 4.0] {
            let cont = zeta_continuation(&p, c(s, 0.0), 40, 20).unwrap();
            let spec = SeriesSpec::plain(p.clone(), c(s, 0.0), SetDepth::Single(20)).unwrap();
            let direct = riemann_partial(&spec).unwrap();
            assert!((cont - direct).norm() < 1e-4, "s={s}: {cont} vs {direct}");
        }
        assert!(matches!(
            zeta_continuation(&p, c(1.0, 0.0), 40, 16),
            Err(Error::PrefactorPole { .. })
        ));
    }

    #[test]
    fn monotone_truncation_ratio() {
        // |riemann(n) - riemann(n+1)| decays geometrically with the family
        // rate for Re(s) one above the abscissa.
        for name in ["two", "phi", "neg-phi"] {
            let r = radix(name);
            let sigma = r.convergence_abscissa() + 1.0;
            let bound = r.value.norm().powf(-(sigma * r.dim as f64 - 1.0));
            let ratios = shell_decay_ratios(&r, sigma, 6, 15).unwrap();
            let mut med = ratios.clone();
            med.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let median = med[med.len() / 2];
            assert!(median < 1.0, "{name}: {median}");
            assert!(median <= bound * 1.3, "{name}: {median} vs bound {bound}");
        }
    }

    #[test]
    fn index_counts() {
        assert_eq!(
            index_count(&radix("two"), SetDepth::Single(10)),
            1024
        );
        assert_eq!(index_count(&radix("phi"), SetDepth::Single(3)), 5);
        assert_eq!(
            index_count(&radix("i-sqrt-phi"), SetDepth::Pair(2, 1)),
            6
        );
    }
}
