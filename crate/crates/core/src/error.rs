use num_complex::Complex64;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("unknown radix `{name}`; valid names: {valid}")]
    UnknownRadix { name: String, valid: String },

    #[error("radix `{radix}` belongs to family {family}, which `{op}` does not support")]
    UnsupportedFamily {
        radix: &'static str,
        family: &'static str,
        op: &'static str,
    },

    #[error("argument {z} is within {dist:.3e} of the pole at {omega} (limit {limit:.1e})")]
    PoleProximity {
        z: Complex64,
        omega: Complex64,
        dist: f64,
        limit: f64,
    },

    #[error("prefactor pole: {what} vanishes at s = {s} (|denominator| = {denom:.3e})")]
    PrefactorPole {
        what: &'static str,
        s: Complex64,
        denom: f64,
    },

    #[error("division by a vanishing value: |{what}| = {magnitude:.3e} at z = {z}")]
    ZeroDivision {
        what: &'static str,
        z: Complex64,
        magnitude: f64,
    },

    #[error("depth {depth} outside supported range {min}..={max} for {op}")]
    DepthLimit {
        op: &'static str,
        depth: u32,
        min: u32,
        max: u32,
    },

    #[error("analytic continuation recursion exceeded depth {max} at s = {s}")]
    ContinuationRecursion { s: Complex64, max: u32 },

    #[error("invalid argument for {op}: {message}")]
    InvalidArgument { op: &'static str, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
