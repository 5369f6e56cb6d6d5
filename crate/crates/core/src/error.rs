//! Crate-wide error type.
//!
//! Every fallible operation in the crate returns [`Error`]. The variants are
//! deliberately specific — callers (and the CLI) branch on them to decide
//! whether a failure is a bad input, a genuine singularity hit by the
//! sampler, or an internal consistency check firing.

use num_complex::Complex64;
use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An evaluation point left the closed unit disk (|z| > 1 + 1e-12).
    #[error("evaluation point has |z| = {modulus:.17}, outside the closed unit disk")]
    Domain { modulus: f64 },

    /// A polynomial failed the structural requirements of the normalized
    /// classes (zero constant term, unit linear term).
    #[error("not a normalized class member: {0}")]
    ClassViolation(String),

    /// A denominator vanished (to within tolerance) at a sample point.
    #[error("denominator vanishes at z = {at} (|den| = {denom_modulus:.3e})")]
    Pole { at: Complex64, denom_modulus: f64 },

    /// The function is f(z) = z, for which the ratio expressions degenerate
    /// to 0/0 with identically zero numerator and denominator.
    #[error("expression is undefined for the identity function f(z) = z")]
    IdentityFunction,

    /// The boundary average came out within 1e-12 of 1, so 1 - alpha is
    /// numerically zero and every bound built from it collapses.
    #[error("boundary average alpha = {alpha} is degenerate (|alpha - 1| <= 1e-12)")]
    DegenerateAlpha { alpha: Complex64 },

    /// A point that must lie on the unit circle does not.
    #[error("point {point} is off the unit circle by {distance:.3e}")]
    BoundaryViolation { point: Complex64, distance: f64 },

    /// Per-circle suprema decreased along the radius schedule by more than
    /// the tolerance. For functions analytic on the disk this cannot happen
    /// (maximum principle), so it signals a pole inside the sampled region
    /// or a sampling failure.
    #[error(
        "circle supremum dropped from {prev_value:.17} at r = {prev_radius} \
         to {value:.17} at r = {radius}"
    )]
    MonotonicityViolation {
        prev_radius: f64,
        prev_value: f64,
        radius: f64,
        value: f64,
    },

    /// rho must be a finite real strictly greater than 1.
    #[error("rho = {rho} is out of range (must be finite and > 1)")]
    RhoOutOfRange { rho: f64 },

    /// A coefficient modulus violates the admissible range of the worked
    /// construction it was passed to.
    #[error("coefficient modulus {a_mod} violates {constraint} (bound {bound})")]
    CoefficientTooLarge {
        a_mod: f64,
        bound: f64,
        constraint: String,
    },

    /// The probed function is identically zero.
    #[error("probed function is identically zero")]
    ZeroFunction,

    /// Invalid configuration or argument value.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// Malformed textual input (coefficient files, complex literals).
    #[error("parse error: {0}")]
    Parse(String),

    /// An end-to-end reproduction failed its internal inequality chain.
    /// This indicates an implementation bug, never a bad input.
    #[error("reproduction chain violated: {0}")]
    ChainViolation(String),
}

impl Error {
    /// Stable machine-readable code, used in emitted error reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::ClassViolation(_) => "class_violation",
            Error::Pole { .. } => "pole",
            Error::IdentityFunction => "identity_function",
            Error::DegenerateAlpha { .. } => "degenerate_alpha",
            Error::BoundaryViolation { .. } => "boundary_violation",
            Error::MonotonicityViolation { .. } => "monotonicity_violation",
            Error::RhoOutOfRange { .. } => "rho_out_of_range",
            Error::CoefficientTooLarge { .. } => "coefficient_too_large",
            Error::ZeroFunction => "zero_function",
            Error::Config(_) => "config",
            Error::Parse(_) => "parse",
            Error::ChainViolation(_) => "chain_violation",
        }
    }

    /// True for errors caused by malformed input or configuration rather
    /// than by anything discovered during computation.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_)
                | Error::Parse(_)
                | Error::RhoOutOfRange { .. }
                | Error::CoefficientTooLarge { .. }
        )
    }
}
