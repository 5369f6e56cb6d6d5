//! Numerical verification of derivative bounds for normalized analytic
//! functions on the unit disk.
//!
//! The subjects are polynomial truncations `f(z) = z + a_{n+1} z^{n+1} + ...`
//! normalized to `f(0) = 0`, `f'(0) = 1`, with every coefficient strictly
//! between orders 1 and n+1 exactly zero ([`series`]). For such functions
//! the crate evaluates a fixed family of self-referential expressions such
//! as `z f''/f'` ([`expr`]), estimates their suprema over circles and
//! disks with a deterministic parallel sampler ([`boundary`]), and checks
//! five sufficient conditions of the shape
//!
//! > "hypothesis expression stays under a closed-form bound built from a
//! > boundary average `alpha` and a factor `rho > 1`"  implies
//! > "`|f' - 1|` (or `|f/z - 1|`) stays under `rho |1 - alpha|`"
//!
//! producing machine-readable reports ([`theorems`]). Three worked
//! single-coefficient constructions with tight closed-form minimal `rho`
//! values are reproduced end to end, and a seeded random probe
//! ([`jack`]) exercises the boundary-maximum derivative inequality that
//! underpins the whole family.
//!
//! Everything is deterministic: suprema, argmax locations, averages, and
//! random suites are bitwise reproducible across runs and thread counts.

pub mod boundary;
mod error;
pub mod expr;
pub mod jack;
mod ser;
pub mod series;
pub mod theorems;

pub use boundary::{
    alpha_mean, m_alpha, monomial_boundary_points, sup_on_circle, sup_on_disk, AlphaMode,
    AlphaSpec, Reduce, SamplingConfig, SupEstimate,
};
pub use error::{Error, Result};
pub use expr::{eval_expr, limit_at_zero, ExprKind};
pub use jack::{probe, random_probe_suite, ProbeFailure, ProbeResult, ProbeSummary};
pub use num_complex::Complex64;
pub use series::{class_order, ClassMember, ClassOrder, PowerPoly};
pub use theorems::{
    check_thm1, check_thm2, check_thm3, check_thm4, check_thm5, example_end_to_end, ray_distance,
    rho_min, ExampleId, TheoremId, TheoremReport, DEFAULT_RAY_TOL,
};
