//! Supremum estimation on circles and disks, and boundary-point averages.
//!
//! For functions analytic on the disk the maximum principle reduces disk
//! suprema to circle suprema, so the estimator samples a schedule of
//! circles of increasing radius, takes a uniform angular grid on each, and
//! sharpens the best grid angle with golden-section refinement. Per-sample
//! evaluations run in parallel; the reduction (max, ties to the smallest
//! angle) is associative and order-independent, so results are identical
//! regardless of thread count.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::expr::{CompiledExpr, ExprKind};
use crate::series::ClassMember;

/// Tolerance for "these per-circle suprema are nondecreasing".
pub const MONOTONICITY_TOL: f64 = 1e-9;
/// How far a supposed boundary point may sit from the unit circle.
pub const CIRCLE_TOL: f64 = 1e-12;
/// Averages within this distance of 1 are degenerate (1 - alpha ~ 0).
pub const DEGENERATE_TOL: f64 = 1e-12;

/// 1/phi, the golden-section step ratio.
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Knobs for the circle/disk samplers.
///
/// `radius_schedule` must be strictly increasing inside (0, 1) and end at
/// `1 - epsilon`; expressions with a removable origin singularity are
/// sampled only on radii at or above `inner_cutoff`, where their
/// denominators are well scaled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplingConfig {
    pub angular_samples: usize,
    pub refine_iters: usize,
    pub radius_schedule: Vec<f64>,
    pub epsilon: f64,
    pub inner_cutoff: f64,
}

impl Default for SamplingConfig {
    fn default() -> Self {
        SamplingConfig::for_epsilon(1e-4).expect("default epsilon is valid")
    }
}

impl SamplingConfig {
    /// The default schedule with the outermost radius moved to `1 - epsilon`.
    pub fn for_epsilon(epsilon: f64) -> Result<Self> {
        if !epsilon.is_finite() || epsilon <= 0.0 || epsilon >= 1.0 {
            return Err(Error::Config(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        let r_max = 1.0 - epsilon;
        let mut radius_schedule: Vec<f64> = [0.25, 0.5, 0.75, 0.9, 0.99]
            .into_iter()
            .filter(|&r| r < r_max)
            .collect();
        radius_schedule.push(r_max);
        Ok(SamplingConfig {
            angular_samples: 4096,
            refine_iters: 64,
            radius_schedule,
            epsilon,
            inner_cutoff: 1e-3,
        })
    }

    pub fn validate(&self) -> Result<()> {
        if self.angular_samples < 64 {
            return Err(Error::Config(format!(
                "angular_samples must be at least 64, got {}",
                self.angular_samples
            )));
        }
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 || self.epsilon >= 1.0 {
            return Err(Error::Config(format!(
                "epsilon must lie in (0, 1), got {}",
                self.epsilon
            )));
        }
        if !self.inner_cutoff.is_finite() || self.inner_cutoff <= 0.0 || self.inner_cutoff >= 1.0 {
            return Err(Error::Config(format!(
                "inner_cutoff must lie in (0, 1), got {}",
                self.inner_cutoff
            )));
        }
        if self.radius_schedule.is_empty() {
            return Err(Error::Config("radius_schedule must not be empty".into()));
        }
        for &r in &self.radius_schedule {
            if !r.is_finite() || r <= 0.0 || r >= 1.0 {
                return Err(Error::Config(format!(
                    "radius_schedule must lie inside (0, 1), got {:?}",
                    self.radius_schedule
                )));
            }
        }
        for pair in self.radius_schedule.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::Config(format!(
                    "radius_schedule must be strictly increasing, got {:?}",
                    self.radius_schedule
                )));
            }
        }
        let last = *self.radius_schedule.last().expect("non-empty");
        if (last - (1.0 - self.epsilon)).abs() > 1e-12 {
            return Err(Error::Config(format!(
                "radius_schedule must end at 1 - epsilon = {}, got {last}",
                1.0 - self.epsilon
            )));
        }
        Ok(())
    }
}

/// Where and how large the estimated supremum is.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SupEstimate {
    pub value: f64,
    #[serde(with = "crate::ser::complex_pair")]
    pub argmax: Complex64,
    pub radius: f64,
    pub samples_used: usize,
}

/// Scalar reduction applied to the complex expression value before maximizing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reduce {
    Modulus,
    RealPart,
}

impl Reduce {
    fn apply(self, v: Complex64) -> f64 {
        match self {
            Reduce::Modulus => v.norm(),
            Reduce::RealPart => v.re,
        }
    }
}

/// Which boundary quantity is averaged into alpha.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AlphaMode {
    /// alpha = mean of f'(z_j).
    DerivativeMean,
    /// alpha = mean of f(z_j)/z_j.
    FOverZMean,
}

/// A boundary average together with the amplification factor rho.
///
/// Produced by [`alpha_mean`] with `rho` unset; [`AlphaSpec::with_rho`]
/// fills it in after validating `rho > 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaSpec {
    pub points: Vec<Complex64>,
    pub alpha: Complex64,
    pub rho: Option<f64>,
    pub mode: AlphaMode,
}

impl AlphaSpec {
    /// Attach rho, which must be finite and strictly greater than 1.
    pub fn with_rho(mut self, rho: f64) -> Result<Self> {
        if !rho.is_finite() || rho <= 1.0 {
            return Err(Error::RhoOutOfRange { rho });
        }
        self.rho = Some(rho);
        Ok(self)
    }

    /// Re-validate the whole spec for a checker expecting `expected` mode,
    /// returning rho. Specs are plain data, so checkers do not trust that
    /// the invariants still hold.
    pub(crate) fn require(&self, expected: AlphaMode) -> Result<f64> {
        if self.mode != expected {
            return Err(Error::Config(format!(
                "alpha spec was built in {:?} mode but the checker needs {:?}",
                self.mode, expected
            )));
        }
        if self.points.len() < 2 {
            return Err(Error::Config(format!(
                "alpha spec needs at least 2 boundary points, got {}",
                self.points.len()
            )));
        }
        for &p in &self.points {
            let distance = (p.norm() - 1.0).abs();
            if distance > CIRCLE_TOL {
                return Err(Error::BoundaryViolation { point: p, distance });
            }
        }
        let one = Complex64::new(1.0, 0.0);
        if (self.alpha - one).norm() <= DEGENERATE_TOL {
            return Err(Error::DegenerateAlpha { alpha: self.alpha });
        }
        let rho = self.rho.unwrap_or(f64::NAN);
        if !rho.is_finite() || rho <= 1.0 {
            return Err(Error::RhoOutOfRange { rho });
        }
        Ok(rho)
    }
}

/// The point `r e^{i theta}`.
pub(crate) fn circle_point(r: f64, theta: f64) -> Complex64 {
    Complex64::new(r * theta.cos(), r * theta.sin())
}

/// Best angle found on one circle.
pub(crate) struct ScanBest {
    pub theta: f64,
    pub value: f64,
    pub evals: usize,
}

/// Maximize `g(r e^{i theta})` over the circle: uniform grid, then
/// golden-section refinement around the best grid angle. The running
/// maximum over every probed angle is returned, so the estimate is
/// monotone in both grid density (doubling keeps the old grid as a
/// subset) and refinement iterations. Ties go to the smallest angle in
/// `[0, 2pi)`, which makes the argmax order- and thread-independent.
pub(crate) fn scan_circle<G>(g: &G, r: f64, cfg: &SamplingConfig) -> Result<ScanBest>
where
    G: Fn(Complex64) -> Result<f64> + Sync,
{
    let n = cfg.angular_samples;
    let step = TAU / n as f64;
    let samples: Vec<Result<f64>> = (0..n)
        .into_par_iter()
        .with_min_len(512)
        .map(|j| g(circle_point(r, j as f64 * step)))
        .collect();

    let mut best_value = f64::NEG_INFINITY;
    let mut best_theta = 0.0;
    for (j, sample) in samples.into_iter().enumerate() {
        // On failure, the error at the smallest angle wins, deterministically.
        let value = sample?;
        if value > best_value {
            best_value = value;
            best_theta = j as f64 * step;
        }
    }
    let mut evals = n;

    if cfg.refine_iters > 0 {
        let mut lo = best_theta - step;
        let mut hi = best_theta + step;
        let mut note = |theta: f64, value: f64| {
            let wrapped = theta.rem_euclid(TAU);
            if value > best_value || (value == best_value && wrapped < best_theta) {
                best_value = value;
                best_theta = wrapped;
            }
        };
        let mut x1 = hi - INV_PHI * (hi - lo);
        let mut x2 = lo + INV_PHI * (hi - lo);
        let mut f1 = g(circle_point(r, x1))?;
        let mut f2 = g(circle_point(r, x2))?;
        evals += 2;
        note(x1, f1);
        note(x2, f2);
        for _ in 0..cfg.refine_iters {
            if f1 < f2 {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + INV_PHI * (hi - lo);
                f2 = g(circle_point(r, x2))?;
                note(x2, f2);
            } else {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - INV_PHI * (hi - lo);
                f1 = g(circle_point(r, x1))?;
                note(x1, f1);
            }
            evals += 1;
        }
    }

    Ok(ScanBest {
        theta: best_theta,
        value: best_value,
        evals,
    })
}

/// Maximize over a list of circles. When `enforce_monotone` is set, a drop
/// of more than [`MONOTONICITY_TOL`] between consecutive circles is
/// reported as an error — for expressions analytic on the disk it means
/// the sampler hit something that is not analytic (a pole inside) or
/// failed outright.
pub(crate) fn disk_scan<G>(
    g: &G,
    radii: &[f64],
    cfg: &SamplingConfig,
    enforce_monotone: bool,
) -> Result<SupEstimate>
where
    G: Fn(Complex64) -> Result<f64> + Sync,
{
    let mut best: Option<SupEstimate> = None;
    let mut samples_used = 0;
    let mut prev: Option<(f64, f64)> = None; // (radius, value)
    for &r in radii {
        let scan = scan_circle(g, r, cfg)?;
        samples_used += scan.evals;
        if enforce_monotone {
            if let Some((prev_radius, prev_value)) = prev {
                if scan.value < prev_value - MONOTONICITY_TOL {
                    return Err(Error::MonotonicityViolation {
                        prev_radius,
                        prev_value,
                        radius: r,
                        value: scan.value,
                    });
                }
            }
        }
        prev = Some((r, scan.value));
        let better = match &best {
            None => true,
            Some(b) => scan.value > b.value,
        };
        if better {
            best = Some(SupEstimate {
                value: scan.value,
                argmax: circle_point(r, scan.theta),
                radius: r,
                samples_used: 0,
            });
        }
    }
    let mut estimate = best.ok_or_else(|| Error::Config("no radii to scan".into()))?;
    estimate.samples_used = samples_used;
    Ok(estimate)
}

/// The radii actually sampled for `kind`: the full schedule, or only the
/// annulus part for expressions with an origin dispatch.
pub(crate) fn schedule_radii(kind: ExprKind, cfg: &SamplingConfig) -> Result<Vec<f64>> {
    let radii: Vec<f64> = if kind.has_origin_dispatch() {
        cfg.radius_schedule
            .iter()
            .copied()
            .filter(|&r| r >= cfg.inner_cutoff)
            .collect()
    } else {
        cfg.radius_schedule.clone()
    };
    if radii.is_empty() {
        return Err(Error::Config(format!(
            "radius schedule {:?} is empty above inner_cutoff {}",
            cfg.radius_schedule, cfg.inner_cutoff
        )));
    }
    Ok(radii)
}

/// Estimate the supremum of the reduced expression on one circle.
pub fn sup_on_circle(
    kind: ExprKind,
    f: &ClassMember,
    r: f64,
    cfg: &SamplingConfig,
    reduce: Reduce,
) -> Result<SupEstimate> {
    cfg.validate()?;
    if !r.is_finite() || r <= 0.0 || r >= 1.0 {
        return Err(Error::Config(format!(
            "circle radius must lie in (0, 1), got {r}"
        )));
    }
    let compiled = CompiledExpr::new(kind, f);
    let g = move |z: Complex64| compiled.eval(z).map(|v| reduce.apply(v));
    let scan = scan_circle(&g, r, cfg)?;
    Ok(SupEstimate {
        value: scan.value,
        argmax: circle_point(r, scan.theta),
        radius: r,
        samples_used: scan.evals,
    })
}

/// Estimate the supremum of the reduced expression over the disk by
/// sweeping the radius schedule. Relies on the maximum principle: for
/// analytic expressions the per-circle suprema are nondecreasing in the
/// radius, which is also asserted (within [`MONOTONICITY_TOL`]).
pub fn sup_on_disk(
    kind: ExprKind,
    f: &ClassMember,
    cfg: &SamplingConfig,
    reduce: Reduce,
) -> Result<SupEstimate> {
    cfg.validate()?;
    if f.is_identity() {
        return Err(Error::IdentityFunction);
    }
    let radii = schedule_radii(kind, cfg)?;
    let compiled = CompiledExpr::new(kind, f);
    let g = move |z: Complex64| compiled.eval(z).map(|v| reduce.apply(v));
    disk_scan(&g, &radii, cfg, true)
}

/// Average a boundary quantity of `f` over points of the unit circle.
///
/// The summands are sorted before adding, so the result is bitwise
/// invariant under permutations of `points`. The returned spec has `rho`
/// unset.
pub fn alpha_mean(f: &ClassMember, points: &[Complex64], mode: AlphaMode) -> Result<AlphaSpec> {
    if points.len() < 2 {
        return Err(Error::Config(format!(
            "alpha averaging needs at least 2 boundary points, got {}",
            points.len()
        )));
    }
    for &p in points {
        let distance = (p.norm() - 1.0).abs();
        if distance > CIRCLE_TOL {
            return Err(Error::BoundaryViolation { point: p, distance });
        }
    }
    let sampled = match mode {
        AlphaMode::DerivativeMean => f.poly().differentiate(),
        AlphaMode::FOverZMean => f.poly().shifted_down(),
    };
    let mut values: Vec<Complex64> = points
        .iter()
        .map(|&p| sampled.eval(p))
        .collect::<Result<_>>()?;
    values.sort_by(|a, b| {
        (a.re, a.im)
            .partial_cmp(&(b.re, b.im))
            .expect("values are finite")
    });
    let sum = values
        .into_iter()
        .fold(Complex64::new(0.0, 0.0), |acc, v| acc + v);
    let alpha = sum / points.len() as f64;
    let one = Complex64::new(1.0, 0.0);
    if (alpha - one).norm() <= DEGENERATE_TOL {
        return Err(Error::DegenerateAlpha { alpha });
    }
    Ok(AlphaSpec {
        points: points.to_vec(),
        alpha,
        rho: None,
        mode,
    })
}

/// The canonical boundary points for `f(z) = z + a z^{n+1}`:
/// `z1 = e^{-i arg(a)/n}` makes `f'(z1) = 1 + (n+1)|a|` real, and
/// `z2 = e^{i (pi - 2 arg(a)) / (2n)}` makes `f'(z2) = 1 + (n+1)|a| i`.
pub fn monomial_boundary_points(a: Complex64, n: u32) -> (Complex64, Complex64) {
    debug_assert!(n >= 1);
    let arg = a.arg();
    let n = n as f64;
    let z1 = circle_point(1.0, -arg / n);
    let z2 = circle_point(1.0, (std::f64::consts::PI - 2.0 * arg) / (2.0 * n));
    (z1, z2)
}

/// The deviation supremum `M = sup |f'(z) - alpha|` (derivative mode) or
/// `sup |f(z)/z - alpha|` (f/z mode) over the sampled disk. Since the
/// quantity at the origin is `1 - alpha` and the average of an analytic
/// function over a circle is its center value, `M >= |1 - alpha|` up to
/// sampling error.
pub fn m_alpha(
    f: &ClassMember,
    alpha: Complex64,
    mode: AlphaMode,
    cfg: &SamplingConfig,
) -> Result<f64> {
    let kind = match mode {
        AlphaMode::DerivativeMean => ExprKind::FprimeMinusAlpha(alpha),
        AlphaMode::FOverZMean => ExprKind::FOverZMinusBeta(alpha),
    };
    let estimate = sup_on_disk(kind, f, cfg, Reduce::Modulus)?;
    debug_assert!(estimate.value >= (Complex64::new(1.0, 0.0) - alpha).norm() - MONOTONICITY_TOL);
    Ok(estimate.value)
}
