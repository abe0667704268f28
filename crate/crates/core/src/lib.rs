//! Function theory on positional representations with real and complex
//! radices `rho`, `1 < |rho| <= 2`, digit set `{0, 1}`.
//!
//! The crate provides:
//!
//! * a closed catalog of radices ([`radices`]);
//! * enumeration of unique rho-integer representative sets, with digit
//!   strings ([`rho_integers`]);
//! * digit-shell partial sums of the generalized Hurwitz/Riemann zeta,
//!   cotangent, polygamma, Gamma, and Weierstrass functions, plus the
//!   analytic continuations for radices 2 and phi ([`special_functions`]);
//! * shell-aligned numerical verification of the duplication and complex
//!   multiplication identities ([`identities`]);
//! * the aperiodic 1-D (-phi) tiling and the four-rectangle special
//!   tessellation driven by radix `i sqrt(phi)` ([`tessellation`]).

mod dd;
pub mod error;
pub mod identities;
pub mod radices;
pub mod rho_integers;
pub mod special_functions;
pub mod tessellation;

pub use error::{Error, Result};
pub use radices::{Precision, Radix, RadixName, RemainderRegion, Uniqueness};
pub use rho_integers::{DigitString, RhoIntegerSet, SetDepth, SetKind, SetMember};

/// Convenient complex alias used throughout.
pub type C64 = num_complex::Complex64;
