//! Catalog of supported radices.
//!
//! A radix is a real or complex number `rho` with `1 < |rho| <= 2` used as the
//! base of a positional representation with digit set `{0, 1}`. The catalog is
//! closed: the enumeration recursions and identity checks elsewhere in this
//! crate are radix-specific, and an arbitrary base would silently produce
//! divergent sums for the non-unique families.

use crate::dd::{phi_dd, Dd};
use crate::error::{Error, Result};
use num_complex::Complex64;
use std::fmt;
use std::str::FromStr;

/// The golden number `(1 + sqrt 5) / 2`.
pub fn phi() -> f64 {
    (1.0 + 5.0_f64.sqrt()) / 2.0
}

/// How representations of rho-integers behave for a radix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Uniqueness {
    /// Every finite digit string denotes a distinct value.
    Unique,
    /// Radix phi: duplicates resolved by maximal normal form.
    PhiFamily,
    /// Radix -phi: only the even integers form a convergent index set.
    NegPhiEvenFamily,
    /// Radix i*sqrt(phi): integers decompose into pairs of (-phi)-integers.
    ISqrtPhiFamily,
}

impl Uniqueness {
    pub fn as_str(self) -> &'static str {
        match self {
            Uniqueness::Unique => "unique",
            Uniqueness::PhiFamily => "phi-family",
            Uniqueness::NegPhiEvenFamily => "neg-phi-even-family",
            Uniqueness::ISqrtPhiFamily => "i-sqrt-phi-family",
        }
    }
}

/// Identifier for a catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RadixName {
    Two,
    NegTwo,
    ThreeHalves,
    Sqrt2,
    Phi,
    NegPhi,
    ISqrt2,
    HalfOnePlusISqrt7,
    OnePlusI,
    NegOnePlusI,
    ISqrtPhi,
}

impl RadixName {
    pub const ALL: [RadixName; 11] = [
        RadixName::Two,
        RadixName::NegTwo,
        RadixName::ThreeHalves,
        RadixName::Sqrt2,
        RadixName::Phi,
        RadixName::NegPhi,
        RadixName::ISqrt2,
        RadixName::HalfOnePlusISqrt7,
        RadixName::OnePlusI,
        RadixName::NegOnePlusI,
        RadixName::ISqrtPhi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RadixName::Two => "two",
            RadixName::NegTwo => "neg-two",
            RadixName::ThreeHalves => "three-halves",
            RadixName::Sqrt2 => "sqrt2",
            RadixName::Phi => "phi",
            RadixName::NegPhi => "neg-phi",
            RadixName::ISqrt2 => "i-sqrt2",
            RadixName::HalfOnePlusISqrt7 => "half-1-i-sqrt7",
            RadixName::OnePlusI => "one-plus-i",
            RadixName::NegOnePlusI => "neg-one-plus-i",
            RadixName::ISqrtPhi => "i-sqrt-phi",
        }
    }
}

impl fmt::Display for RadixName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RadixName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        for name in RadixName::ALL {
            if name.as_str() == s {
                return Ok(name);
            }
        }
        Err(Error::UnknownRadix {
            name: s.to_string(),
            valid: RadixName::ALL
                .iter()
                .map(|n| n.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })
    }
}

/// Working precision for catalog constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Precision {
    #[default]
    Binary64,
    /// Double-double (~106-bit significand) evaluation of the catalog
    /// constants, rounded back to binary64 on output.
    Extended,
}

impl FromStr for Precision {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "binary64" => Ok(Precision::Binary64),
            "extended" => Ok(Precision::Extended),
            other => Err(Error::InvalidArgument {
                op: "precision",
                message: format!("`{other}` is not one of: binary64, extended"),
            }),
        }
    }
}

/// A catalog radix.
#[derive(Debug, Clone, PartialEq)]
pub struct Radix {
    pub name: RadixName,
    /// The complex value of rho.
    pub value: Complex64,
    /// 1 for representations of reals, 2 for representations of complexes.
    pub dim: u8,
    /// ceil(|rho|^dim); equals 2 for every catalog entry.
    pub digit_capacity: u8,
    pub uniqueness: Uniqueness,
    /// Integer coefficients of the minimal polynomial, constant term first.
    pub min_poly: Option<Vec<i64>>,
    /// Klein modular invariant as a rational `(num, den)`, where known.
    pub j_invariant: Option<(i64, i64)>,
}

impl Radix {
    /// Look up a radix by its catalog identifier.
    pub fn make(name: &str) -> Result<Radix> {
        let name: RadixName = name.parse()?;
        Ok(Self::from_name(name))
    }

    pub fn from_name(name: RadixName) -> Radix {
        Self::from_name_with(name, Precision::Binary64)
    }

    pub fn from_name_with(name: RadixName, precision: Precision) -> Radix {
        let phi_v = match precision {
            Precision::Binary64 => phi(),
            Precision::Extended => phi_dd().to_f64(),
        };
        let sqrt = |x: f64| match precision {
            Precision::Binary64 => x.sqrt(),
            Precision::Extended => Dd::from(x).sqrt().to_f64(),
        };
        let re = |x: f64| Complex64::new(x, 0.0);
        let im = |y: f64| Complex64::new(0.0, y);

        let (value, dim, uniqueness, min_poly, j_invariant): (
            Complex64,
            u8,
            Uniqueness,
            Vec<i64>,
            Option<(i64, i64)>,
        ) = match name {
            RadixName::Two => (re(2.0), 1, Uniqueness::Unique, vec![-2, 1], None),
            RadixName::NegTwo => (re(-2.0), 1, Uniqueness::Unique, vec![2, 1], None),
            RadixName::ThreeHalves => (re(1.5), 1, Uniqueness::Unique, vec![-3, 2], None),
            RadixName::Sqrt2 => (re(sqrt(2.0)), 1, Uniqueness::Unique, vec![-2, 0, 1], None),
            RadixName::Phi => (re(phi_v), 1, Uniqueness::PhiFamily, vec![-1, -1, 1], None),
            RadixName::NegPhi => (
                re(-phi_v),
                1,
                Uniqueness::NegPhiEvenFamily,
                vec![-1, 1, 1],
                None,
            ),
            RadixName::ISqrt2 => (
                im(sqrt(2.0)),
                2,
                Uniqueness::Unique,
                vec![2, 0, 1],
                Some((125, 27)),
            ),
            RadixName::HalfOnePlusISqrt7 => (
                Complex64::new(0.5, sqrt(7.0) / 2.0),
                2,
                Uniqueness::Unique,
                vec![2, -1, 1],
                Some((-125, 64)),
            ),
            RadixName::OnePlusI => (
                Complex64::new(1.0, 1.0),
                2,
                Uniqueness::Unique,
                vec![2, -2, 1],
                None,
            ),
            RadixName::NegOnePlusI => (
                Complex64::new(-1.0, 1.0),
                2,
                Uniqueness::Unique,
                vec![2, 2, 1],
                Some((1, 1)),
            ),
            RadixName::ISqrtPhi => (
                im(sqrt(phi_v)),
                2,
                Uniqueness::ISqrtPhiFamily,
                vec![-1, 0, 1, 0, 1],
                None,
            ),
        };

        // Nudge below the true power before ceiling: |i sqrt 2|^2 lands a few
        // ulps above 2 in binary64.
        let capacity = (value.norm().powi(dim as i32) - 1e-9).ceil() as u8;
        debug_assert_eq!(capacity, 2, "catalog entries all have two digits");
        Radix {
            name,
            value,
            dim,
            digit_capacity: capacity,
            uniqueness,
            min_poly: Some(min_poly),
            j_invariant,
        }
    }

    /// The full catalog in declaration order.
    pub fn catalog() -> Vec<Radix> {
        RadixName::ALL.iter().map(|&n| Self::from_name(n)).collect()
    }

    /// Minimal polynomial evaluated at the catalog value.
    pub fn min_poly_residual(&self) -> f64 {
        let Some(coeffs) = &self.min_poly else {
            return 0.0;
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in coeffs.iter().rev() {
            acc = acc * self.value + Complex64::new(c as f64, 0.0);
        }
        acc.norm()
    }

    /// Abscissa of the simple pole of the rho-Riemann zeta function.
    ///
    /// `log 2 / log |rho|` for the unique families; `1` for radix phi, where
    /// the prefactor denominator `phi^{2s} - phi^s - 1` vanishes at `s = 1`.
    /// The remaining families have no pole formula and are rejected.
    pub fn pole_abscissa(&self) -> Result<f64> {
        match self.uniqueness {
            Uniqueness::Unique => Ok(2f64.ln() / self.value.norm().ln()),
            Uniqueness::PhiFamily => Ok(1.0),
            Uniqueness::NegPhiEvenFamily | Uniqueness::ISqrtPhiFamily => {
                Err(Error::UnsupportedFamily {
                    radix: self.name.as_str(),
                    family: self.uniqueness.as_str(),
                    op: "pole_abscissa",
                })
            }
        }
    }

    /// Abscissa above which the family's digit-shell sums decay geometrically.
    ///
    /// Tight for the unique, phi, and i*sqrt(phi) families. For the even
    /// (-phi)-integers this is the sufficient bound `1 + 1/log phi ~ 3.08`
    /// carried by the catalog; see `convergence` tests for the empirical
    /// behaviour.
    pub fn convergence_abscissa(&self) -> f64 {
        match self.uniqueness {
            Uniqueness::Unique => 2f64.ln() / self.value.norm().ln(),
            Uniqueness::PhiFamily => 1.0,
            Uniqueness::NegPhiEvenFamily => 1.0 + 1.0 / phi().ln(),
            Uniqueness::ISqrtPhiFamily => 2.0,
        }
    }

    /// Extreme points of the remainder set `R = { sum_k delta_k rho^-k }`.
    pub fn remainder_vertices(&self) -> RemainderRegion {
        self.remainder_vertices_with(Precision::Binary64)
    }

    pub fn remainder_vertices_with(&self, precision: Precision) -> RemainderRegion {
        let phi_v = match precision {
            Precision::Binary64 => phi(),
            Precision::Extended => phi_dd().to_f64(),
        };
        let sqrt = |x: f64| match precision {
            Precision::Binary64 => x.sqrt(),
            Precision::Extended => Dd::from(x).sqrt().to_f64(),
        };
        let interval = |a: f64, b: f64| RemainderRegion {
            points: vec![Complex64::new(a, 0.0), Complex64::new(b, 0.0)],
            fractal: false,
        };
        let rect = |x0: f64, x1: f64, y0: f64, y1: f64, fractal: bool| RemainderRegion {
            points: vec![
                Complex64::new(x0, y0),
                Complex64::new(x1, y0),
                Complex64::new(x1, y1),
                Complex64::new(x0, y1),
            ],
            fractal,
        };

        match self.name {
            // Positive real radices fill [0, 1/(rho-1)].
            RadixName::Two => interval(0.0, 1.0),
            RadixName::ThreeHalves => interval(0.0, 2.0),
            RadixName::Sqrt2 => interval(0.0, 1.0 / (sqrt(2.0) - 1.0)),
            RadixName::Phi => interval(0.0, phi_v),
            // Negative real radices: odd positions pull left, even pull right.
            RadixName::NegTwo => interval(-2.0 / 3.0, 1.0 / 3.0),
            RadixName::NegPhi => interval(-1.0, 1.0 / phi_v),
            RadixName::ISqrt2 => {
                let s = sqrt(2.0);
                rect(-2.0 / 3.0, 1.0 / 3.0, -2.0 * s / 3.0, s / 3.0, false)
            }
            // Fractal remainder sets (twindragon and relatives): axis-aligned
            // bounding box from the component-wise geometric bounds
            // sum_k max(+-Re rho^-k, 0), flagged as such.
            RadixName::OnePlusI | RadixName::NegOnePlusI | RadixName::HalfOnePlusISqrt7 => {
                let rho = self.value;
                let (mut xlo, mut xhi, mut ylo, mut yhi) = (0.0f64, 0.0, 0.0, 0.0);
                let mut p = Complex64::new(1.0, 0.0);
                for _ in 1..200 {
                    p /= rho;
                    if p.re < 0.0 {
                        xlo += p.re;
                    } else {
                        xhi += p.re;
                    }
                    if p.im < 0.0 {
                        ylo += p.im;
                    } else {
                        yhi += p.im;
                    }
                }
                rect(xlo, xhi, ylo, yhi, true)
            }
            // The four alternating-position geometric sums
            // sum_{k>=1} rho^-(4k+j), j = 0..3 (the vertex list the special
            // tessellation's prototiles are derived from).
            RadixName::ISqrtPhi => {
                let root_phi = sqrt(phi_v);
                let a = phi_v - 1.0;
                let b = root_phi * (2.0 - phi_v);
                RemainderRegion {
                    points: vec![
                        Complex64::new(a, 0.0),
                        Complex64::new(0.0, -b),
                        Complex64::new(2.0 - phi_v, 0.0),
                        Complex64::new(0.0, b),
                    ],
                    fractal: false,
                }
            }
        }
    }

    /// `sum_{k>=1} |rho|^-k`, the geometric bound on the remainder set.
    pub fn remainder_diameter_bound(&self) -> f64 {
        let r = self.value.norm();
        1.0 / (r - 1.0)
    }
}

/// Extreme points of a remainder set, with a flag for fractal boundaries
/// (twindragon and relatives), where the points are only a bounding box.
#[derive(Debug, Clone, PartialEq)]
pub struct RemainderRegion {
    pub points: Vec<Complex64>,
    pub fractal: bool,
}
