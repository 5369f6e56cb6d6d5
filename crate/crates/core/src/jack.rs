//! Empirical probe of the boundary-maximum derivative inequality.
//!
//! For an analytic `w` with a zero of order `n` at the origin, let `z0`
//! maximize `|w|` on the circle `|z| = r`. Then `k = z0 w'(z0) / w(z0)`
//! is expected to be real with `k >= n`, and additionally
//! `Re(z0 w''(z0)/w'(z0)) + 1 >= k`. The probe locates `z0` numerically
//! (grid scan plus golden-section refinement, then a Newton polish on the
//! angular stationarity condition `Im k = 0`) and checks all three
//! claims to a caller-supplied tolerance.
//!
//! The random suite runs many trials with seeded, stream-split RNG so a
//! summary is exactly reproducible from `(seed, trials, ranges, radii)`.

use std::f64::consts::TAU;
use std::ops::RangeInclusive;

use num_complex::Complex64;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boundary::{circle_point, scan_circle, SamplingConfig};
use crate::error::{Error, Result};
use crate::series::PowerPoly;

/// Coefficients are drawn with components uniform in this symmetric box.
const COEFF_BOX: f64 = 1.4;
/// The lowest-order coefficient is redrawn until its modulus reaches this,
/// so the vanishing order of a random sample never degrades numerically.
const MIN_LEAD_MODULUS: f64 = 0.1;
/// Relative slack when deciding whether the polished angle still attains
/// the scanned maximum.
const POLISH_SLACK: f64 = 1e-12;

/// Outcome of one boundary-maximum check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    /// Located maximizer of `|w|` on the circle.
    #[serde(with = "crate::ser::complex_pair")]
    pub z0: Complex64,
    /// `z0 w'(z0) / w(z0)`.
    #[serde(with = "crate::ser::complex_pair")]
    pub k: Complex64,
    /// `|Im k| <= tol (1 + |k|)`.
    pub k_real_ok: bool,
    /// `Re k >= n - tol`.
    pub k_lower_ok: bool,
    /// `Re(z0 w''(z0)/w'(z0)) + 1 >= Re k - tol`.
    pub second_ok: bool,
    /// Circle radius probed.
    pub r: f64,
    /// Vanishing order of `w` at the origin.
    pub n: u32,
}

impl ProbeResult {
    pub fn all_ok(&self) -> bool {
        self.k_real_ok && self.k_lower_ok && self.second_ok
    }
}

/// Vanishing order of `w` at 0, requiring an exact zero constant term.
fn vanishing_order(w: &PowerPoly) -> Result<u32> {
    if w.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let first = w
        .coeffs()
        .iter()
        .position(|c| c.re != 0.0 || c.im != 0.0)
        .expect("nonzero polynomial has a nonzero coefficient");
    if first == 0 {
        return Err(Error::Config(format!(
            "the probe needs w(0) = 0, but the constant term is {}",
            w.coeff(0)
        )));
    }
    Ok(first as u32)
}

/// Check the boundary-maximum inequalities for `w` on `|z| = r`.
///
/// `tol` is the acceptance tolerance for all three flags; the location of
/// the maximizer itself is polished far below `tol` (typically to machine
/// precision), so the flags measure the mathematics, not the search.
pub fn probe(w: &PowerPoly, r: f64, cfg: &SamplingConfig, tol: f64) -> Result<ProbeResult> {
    cfg.validate()?;
    if !r.is_finite() || r <= 0.0 || r >= 1.0 {
        return Err(Error::Config(format!(
            "probe radius must lie in (0, 1), got {r}"
        )));
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Config(format!(
            "probe tolerance must be positive, got {tol}"
        )));
    }
    let n = vanishing_order(w)?;
    let w1 = w.differentiate();
    let w2 = w1.differentiate();

    let g = |z: Complex64| Ok(w.eval_unchecked(z).norm());
    let scan = scan_circle(&g, r, cfg)?;

    // Newton polish of the angle: at the maximizer, d/dtheta log|w| =
    // -Im k(theta) vanishes, and d(Im k)/dtheta = Re(z k'(z)) with
    // k' = w'/w + z w''/w - z (w'/w)^2. Near a maximum that derivative is
    // nonnegative, so bail out if it is not, or if the step leaves the
    // grid cell the scan selected.
    let mut theta = scan.theta;
    let max_step = TAU / cfg.angular_samples as f64;
    for _ in 0..12 {
        let z = circle_point(r, theta);
        let w0 = w.eval_unchecked(z);
        if w0.norm() == 0.0 {
            break;
        }
        let lw = w1.eval_unchecked(z) / w0;
        let k = z * lw;
        let kprime = lw + z * w2.eval_unchecked(z) / w0 - z * lw * lw;
        let slope = (z * kprime).re;
        if !slope.is_finite() || slope <= 0.0 {
            break;
        }
        let step = k.im / slope;
        if !step.is_finite() || step.abs() > max_step {
            break;
        }
        theta -= step;
        if step.abs() < 1e-17 {
            break;
        }
    }
    // Keep the polished angle only if it still attains the scanned level.
    let polished_value = w.eval_unchecked(circle_point(r, theta)).norm();
    if polished_value < scan.value - POLISH_SLACK * (1.0 + scan.value) {
        theta = scan.theta;
    }

    let z0 = circle_point(r, theta);
    let w0 = w.eval_unchecked(z0);
    if w0.norm() == 0.0 {
        // Impossible for a nonzero polynomial (the circle maximum is
        // positive), so reaching this means the search itself broke.
        return Err(Error::Pole {
            at: z0,
            denom_modulus: 0.0,
        });
    }
    let k = z0 * w1.eval_unchecked(z0) / w0;
    let d1 = w1.eval_unchecked(z0);
    let second = if d1.norm() == 0.0 {
        f64::NEG_INFINITY
    } else {
        (z0 * w2.eval_unchecked(z0) / d1).re + 1.0
    };
    Ok(ProbeResult {
        z0,
        k,
        k_real_ok: k.im.abs() <= tol * (1.0 + k.norm()),
        k_lower_ok: k.re >= n as f64 - tol,
        second_ok: second >= k.re - tol,
        r,
        n,
    })
}

/// One recorded failure from the random suite, with everything needed to
/// replay it: the trial index, the polynomial, and the failing result.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeFailure {
    pub trial: u32,
    pub n: u32,
    pub r: f64,
    #[serde(with = "crate::ser::complex_vec")]
    pub coeffs: Vec<Complex64>,
    pub result: ProbeResult,
}

/// Aggregate outcome of [`random_probe_suite`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeSummary {
    pub seed: u64,
    pub trials: u32,
    /// Total probes run: one per trial per radius.
    pub probes: usize,
    pub pass_count: usize,
    pub fail_details: Vec<ProbeFailure>,
}

impl ProbeSummary {
    pub fn all_passed(&self) -> bool {
        self.pass_count == self.probes && self.fail_details.is_empty()
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("summary serializes");
        s.push('\n');
        s
    }
}

/// `[0, 1)` from the top 53 bits of a `u64`.
fn uniform01(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / 9007199254740992.0
}

fn uniform_in(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + uniform01(rng) * (hi - lo)
}

fn pick(rng: &mut ChaCha8Rng, range: &RangeInclusive<u32>) -> u32 {
    let lo = *range.start() as u64;
    let hi = *range.end() as u64;
    // Spans here are tiny (orders, degrees), so modulo bias is irrelevant.
    (lo + rng.next_u64() % (hi - lo + 1)) as u32
}

/// Draw `trials` random polynomials `w(z) = z^n (c_0 + c_1 z + ...)` and
/// probe each on every radius in `r_list`.
///
/// Trial `t` uses RNG stream `t` of the seeded generator, so each trial's
/// polynomial is independent of the others and of the radius list. A probe
/// whose flags fail is retried with 2x and then 4x angular samples before
/// being recorded as a failure — a sharp maximizer needs a finer grid, and
/// a genuine counterexample survives refinement.
pub fn random_probe_suite(
    seed: u64,
    trials: u32,
    n_range: RangeInclusive<u32>,
    degree_range: RangeInclusive<u32>,
    r_list: &[f64],
    tol: f64,
    cfg: &SamplingConfig,
) -> Result<ProbeSummary> {
    cfg.validate()?;
    if trials == 0 {
        return Err(Error::Config("the suite needs at least one trial".into()));
    }
    if n_range.is_empty() || *n_range.start() == 0 {
        return Err(Error::Config(format!(
            "order range must be non-empty with start >= 1, got {n_range:?}"
        )));
    }
    if degree_range.is_empty() {
        return Err(Error::Config(format!(
            "degree range is empty: {degree_range:?}"
        )));
    }
    if r_list.is_empty() {
        return Err(Error::Config("the suite needs at least one radius".into()));
    }
    for &r in r_list {
        if !r.is_finite() || r <= 0.0 || r >= 1.0 {
            return Err(Error::Config(format!(
                "suite radius must lie in (0, 1), got {r}"
            )));
        }
    }
    if !tol.is_finite() || tol <= 0.0 {
        return Err(Error::Config(format!(
            "suite tolerance must be positive, got {tol}"
        )));
    }

    let mut pass_count = 0;
    let mut fail_details = Vec::new();
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);

        let n = pick(&mut rng, &n_range);
        let degree = pick(&mut rng, &degree_range).max(n);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); degree as usize + 1];
        for j in n..=degree {
            coeffs[j as usize] = Complex64::new(
                uniform_in(&mut rng, -COEFF_BOX, COEFF_BOX),
                uniform_in(&mut rng, -COEFF_BOX, COEFF_BOX),
            );
        }
        while coeffs[n as usize].norm() < MIN_LEAD_MODULUS {
            coeffs[n as usize] = Complex64::new(
                uniform_in(&mut rng, -COEFF_BOX, COEFF_BOX),
                uniform_in(&mut rng, -COEFF_BOX, COEFF_BOX),
            );
        }
        let w = PowerPoly::new(coeffs.clone())?;

        for &r in r_list {
            let mut result = probe(&w, r, cfg, tol)?;
            for factor in [2usize, 4] {
                if result.all_ok() {
                    break;
                }
                let mut denser = cfg.clone();
                denser.angular_samples = cfg.angular_samples * factor;
                result = probe(&w, r, &denser, tol)?;
            }
            if result.all_ok() {
                pass_count += 1;
            } else {
                fail_details.push(ProbeFailure {
                    trial,
                    n,
                    r,
                    coeffs: coeffs.clone(),
                    result,
                });
            }
        }
    }
    Ok(ProbeSummary {
        seed,
        trials,
        probes: trials as usize * r_list.len(),
        pass_count,
        fail_details,
    })
}
