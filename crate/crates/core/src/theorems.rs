//! The five sufficient-condition checkers and their reports.
//!
//! Each checker bounds a hypothesis expression over the sampled disk and
//! compares it against a closed-form bound built from the boundary average
//! `alpha` and the amplification factor `rho`; the conclusion quantity
//! (`|f' - 1|`, or `|f/z - 1|` for the fifth theorem) is bounded by
//! `rho |1 - alpha|`. Comparisons are strict with no tolerance slack: a
//! sampled supremum is a lower bound for the true supremum, so a strict
//! pass of the sampled value is the honest reading.
//!
//! The fourth checker is a ray-avoidance test rather than a supremum
//! comparison. To keep one report shape, it stores the *negated* distance
//! of `T4` to the ray `[n, +inf)` as `hypothesis_sup.value` and the negated
//! tolerance as `hypothesis_bound`, so `hypothesis_margin > 0` means "the
//! ray is avoided by more than the tolerance" for every theorem alike.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::boundary::{
    alpha_mean, disk_scan, m_alpha, monomial_boundary_points, schedule_radii, sup_on_disk,
    AlphaMode, AlphaSpec, Reduce, SamplingConfig, SupEstimate,
};
use crate::error::{Error, Result};
use crate::expr::{CompiledExpr, ExprKind};
use crate::series::ClassMember;

/// Default clearance required between `T4` and the ray `[n, +inf)`.
pub const DEFAULT_RAY_TOL: f64 = 1e-6;

/// Identifies which sufficient condition a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
}

impl std::fmt::Display for TheoremId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TheoremId::T1 => "T1",
            TheoremId::T2 => "T2",
            TheoremId::T3 => "T3",
            TheoremId::T4 => "T4",
            TheoremId::T5 => "T5",
        })
    }
}

/// Flat verification record. Serializes to a single JSON object (complex
/// values as `[re, im]` pairs) and flattens to a CSV row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub n: u32,
    #[serde(with = "crate::ser::complex_pair")]
    pub alpha: Complex64,
    pub rho: f64,
    pub hypothesis_bound: f64,
    pub hypothesis_sup: SupEstimate,
    pub hypothesis_ok: bool,
    pub hypothesis_margin: f64,
    pub conclusion_bound: f64,
    pub conclusion_sup: SupEstimate,
    pub conclusion_ok: bool,
    pub m_alpha: Option<f64>,
    pub corollary1_bound: Option<f64>,
    pub univalent_implied: bool,
    pub limits_at_zero: Option<f64>,
    pub config_echo: SamplingConfig,
}

impl TheoremReport {
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("bad report JSON: {e}")))
    }

    /// Column names for [`TheoremReport::to_csv_row`], in order.
    pub fn csv_header() -> String {
        [
            "theorem_id",
            "n",
            "alpha_re",
            "alpha_im",
            "rho",
            "hypothesis_bound",
            "hypothesis_sup_value",
            "hypothesis_sup_argmax_re",
            "hypothesis_sup_argmax_im",
            "hypothesis_sup_radius",
            "hypothesis_sup_samples_used",
            "hypothesis_ok",
            "hypothesis_margin",
            "conclusion_bound",
            "conclusion_sup_value",
            "conclusion_sup_argmax_re",
            "conclusion_sup_argmax_im",
            "conclusion_sup_radius",
            "conclusion_sup_samples_used",
            "conclusion_ok",
            "m_alpha",
            "corollary1_bound",
            "univalent_implied",
            "limits_at_zero",
            "angular_samples",
            "refine_iters",
            "radius_schedule",
            "epsilon",
            "inner_cutoff",
        ]
        .join(",")
    }

    /// Flatten to one CSV row matching [`TheoremReport::csv_header`].
    /// Optional fields flatten to empty cells; the radius schedule is
    /// joined with `;` so the row stays a single record.
    pub fn to_csv_row(&self) -> String {
        fn opt(v: Option<f64>) -> String {
            v.map(|x| x.to_string()).unwrap_or_default()
        }
        let schedule = self
            .config_echo
            .radius_schedule
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(";");
        [
            self.theorem_id.to_string(),
            self.n.to_string(),
            self.alpha.re.to_string(),
            self.alpha.im.to_string(),
            self.rho.to_string(),
            self.hypothesis_bound.to_string(),
            self.hypothesis_sup.value.to_string(),
            self.hypothesis_sup.argmax.re.to_string(),
            self.hypothesis_sup.argmax.im.to_string(),
            self.hypothesis_sup.radius.to_string(),
            self.hypothesis_sup.samples_used.to_string(),
            self.hypothesis_ok.to_string(),
            self.hypothesis_margin.to_string(),
            self.conclusion_bound.to_string(),
            self.conclusion_sup.value.to_string(),
            self.conclusion_sup.argmax.re.to_string(),
            self.conclusion_sup.argmax.im.to_string(),
            self.conclusion_sup.radius.to_string(),
            self.conclusion_sup.samples_used.to_string(),
            self.conclusion_ok.to_string(),
            opt(self.m_alpha),
            opt(self.corollary1_bound),
            self.univalent_implied.to_string(),
            opt(self.limits_at_zero),
            self.config_echo.angular_samples.to_string(),
            self.config_echo.refine_iters.to_string(),
            schedule,
            self.config_echo.epsilon.to_string(),
            self.config_echo.inner_cutoff.to_string(),
        ]
        .join(",")
    }
}

/// Euclidean distance from `v` to the ray `{x + 0i : x >= n}`.
pub fn ray_distance(v: Complex64, n: u32) -> f64 {
    let nf = n as f64;
    if v.re >= nf {
        v.im.abs()
    } else {
        (v - Complex64::new(nf, 0.0)).norm()
    }
}

fn reject_identity(f: &ClassMember) -> Result<()> {
    // For f(z) = z every derivative average is exactly 1, so whatever a
    // hand-built spec claims, the construction is degenerate.
    if f.is_identity() {
        return Err(Error::DegenerateAlpha {
            alpha: Complex64::new(1.0, 0.0),
        });
    }
    Ok(())
}

/// Hypothesis-side numbers a checker hands to [`assemble`]: the bound the
/// sampled supremum is compared against, the supremum itself, and the
/// closed-form origin limit of the hypothesis expression when it has one.
struct Hypothesis {
    bound: f64,
    sup: SupEstimate,
    limit_at_zero: Option<f64>,
}

/// Shared tail of every checker: conclusion supremum, deviation supremum,
/// flags, and report assembly.
fn assemble(
    id: TheoremId,
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
    rho: f64,
    hyp: Hypothesis,
) -> Result<TheoremReport> {
    let one = Complex64::new(1.0, 0.0);
    let d = (one - spec.alpha).norm();
    let conclusion_bound = rho * d;
    let conclusion_kind = match id {
        TheoremId::T5 => ExprKind::FOverZMinus1,
        _ => ExprKind::FprimeMinus1,
    };
    let conclusion_sup = sup_on_disk(conclusion_kind, f, cfg, Reduce::Modulus)?;
    let deviation_sup = m_alpha(f, spec.alpha, spec.mode, cfg)?;
    Ok(TheoremReport {
        theorem_id: id,
        n: f.n(),
        alpha: spec.alpha,
        rho,
        hypothesis_bound: hyp.bound,
        hypothesis_ok: hyp.sup.value < hyp.bound,
        hypothesis_margin: hyp.bound - hyp.sup.value,
        hypothesis_sup: hyp.sup,
        conclusion_bound,
        conclusion_ok: conclusion_sup.value < conclusion_bound,
        conclusion_sup,
        m_alpha: Some(deviation_sup),
        corollary1_bound: Some(rho * deviation_sup),
        univalent_implied: conclusion_bound < 1.0,
        limits_at_zero: hyp.limit_at_zero,
        config_echo: cfg.clone(),
    })
}

/// First condition: `sup |z f''/f'| < |1-alpha| n rho / (1 + |1-alpha| rho)`
/// implies `|f' - 1| < rho |1-alpha|`.
pub fn check_thm1(
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
) -> Result<TheoremReport> {
    cfg.validate()?;
    let rho = spec.require(AlphaMode::DerivativeMean)?;
    reject_identity(f)?;
    let d = (Complex64::new(1.0, 0.0) - spec.alpha).norm();
    let n = f.n() as f64;
    let bound = d * n * rho / (1.0 + d * rho);
    let sup = sup_on_disk(ExprKind::T1, f, cfg, Reduce::Modulus)?;
    let hyp = Hypothesis {
        bound,
        sup,
        limit_at_zero: None,
    };
    assemble(TheoremId::T1, f, spec, cfg, rho, hyp)
}

/// Second condition: `sup |z f'' - z f''/f'| <
/// |1-alpha|^2 n rho^2 / (1 + |1-alpha| rho)`, same conclusion.
pub fn check_thm2(
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
) -> Result<TheoremReport> {
    cfg.validate()?;
    let rho = spec.require(AlphaMode::DerivativeMean)?;
    reject_identity(f)?;
    let d = (Complex64::new(1.0, 0.0) - spec.alpha).norm();
    let n = f.n() as f64;
    let bound = d * d * n * rho * rho / (1.0 + d * rho);
    let sup = sup_on_disk(ExprKind::T2, f, cfg, Reduce::Modulus)?;
    let hyp = Hypothesis {
        bound,
        sup,
        limit_at_zero: None,
    };
    assemble(TheoremId::T2, f, spec, cfg, rho, hyp)
}

/// Third condition: `sup Re(z (z f'')' / (f' - 1)) < n^2` on the sampled
/// annulus, same conclusion. The origin limit of the expression is exactly
/// `n^2`, which is echoed in `limits_at_zero`.
pub fn check_thm3(
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
) -> Result<TheoremReport> {
    cfg.validate()?;
    let rho = spec.require(AlphaMode::DerivativeMean)?;
    reject_identity(f)?;
    let n = f.n() as f64;
    let bound = n * n;
    let sup = sup_on_disk(ExprKind::T3, f, cfg, Reduce::RealPart)?;
    let hyp = Hypothesis {
        bound,
        sup,
        limit_at_zero: Some(n * n),
    };
    assemble(TheoremId::T3, f, spec, cfg, rho, hyp)
}

/// Fourth condition: `z f''/(f' - 1)` must stay at least `ray_tol` away
/// from the ray `[n, +inf)` at every sampled annulus point. Reported in
/// negated form (see the module docs): `hypothesis_sup.value` is the
/// negated minimum distance and `hypothesis_bound = -ray_tol`. The origin
/// limit of the expression is exactly `n`, echoed in `limits_at_zero`.
pub fn check_thm4(
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
    ray_tol: f64,
) -> Result<TheoremReport> {
    cfg.validate()?;
    if !ray_tol.is_finite() || ray_tol <= 0.0 {
        return Err(Error::Config(format!(
            "ray_tol must be positive and finite, got {ray_tol}"
        )));
    }
    let rho = spec.require(AlphaMode::DerivativeMean)?;
    reject_identity(f)?;
    let n = f.n();
    let radii = schedule_radii(ExprKind::T4, cfg)?;
    let compiled = CompiledExpr::new(ExprKind::T4, f);
    let g = move |z: Complex64| compiled.eval(z).map(|v| -ray_distance(v, n));
    // Negated distance is not subharmonic, so no monotonicity assertion.
    let sup = disk_scan(&g, &radii, cfg, false)?;
    let hyp = Hypothesis {
        bound: -ray_tol,
        sup,
        limit_at_zero: Some(n as f64),
    };
    assemble(TheoremId::T4, f, spec, cfg, rho, hyp)
}

/// Fifth condition: with `beta` averaging `f/z` over boundary points,
/// `sup |z f'/f - 1| < |1-beta| n rho / (1 + |1-beta| rho)` implies
/// `|f/z - 1| < rho |1-beta|`.
pub fn check_thm5(
    f: &ClassMember,
    spec: &AlphaSpec,
    cfg: &SamplingConfig,
) -> Result<TheoremReport> {
    cfg.validate()?;
    let rho = spec.require(AlphaMode::FOverZMean)?;
    reject_identity(f)?;
    let d = (Complex64::new(1.0, 0.0) - spec.alpha).norm();
    let n = f.n() as f64;
    let bound = d * n * rho / (1.0 + d * rho);
    let sup = sup_on_disk(ExprKind::T5, f, cfg, Reduce::Modulus)?;
    let hyp = Hypothesis {
        bound,
        sup,
        limit_at_zero: None,
    };
    assemble(TheoremId::T5, f, spec, cfg, rho, hyp)
}

/// The three worked single-perturbation constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExampleId {
    Ex1,
    Ex2,
    Ex5,
}

impl ExampleId {
    /// Which checker the construction feeds.
    pub fn theorem(self) -> TheoremId {
        match self {
            ExampleId::Ex1 => TheoremId::T1,
            ExampleId::Ex2 => TheoremId::T2,
            ExampleId::Ex5 => TheoremId::T5,
        }
    }

    /// Coefficient factor in the denominator `1 - c |a|` of the minimal
    /// rho, which is also the reciprocal of the admissible `|a|` range.
    fn denom_factor(self, n: u32) -> f64 {
        match self {
            ExampleId::Ex1 => 2.0 * (n as f64 + 1.0),
            ExampleId::Ex2 => n as f64 + 1.0,
            ExampleId::Ex5 => 2.0,
        }
    }

    /// The conclusion quantity's supremum modulus coefficient: for
    /// `f = z + a z^{n+1}` the conclusion quantity has modulus
    /// `t r^n` with `t = (n+1)|a|` (derivative constructions) or
    /// `t = |a|` (the f/z construction).
    fn conclusion_scale(self, n: u32, a_mod: f64) -> f64 {
        match self {
            ExampleId::Ex1 | ExampleId::Ex2 => (n as f64 + 1.0) * a_mod,
            ExampleId::Ex5 => a_mod,
        }
    }
}

/// The smallest admissible rho for a worked construction:
/// `sqrt(2) / (1 - c |a|)` with `c` from [`ExampleId::denom_factor`].
/// Requires `|a| < 1/c`; always exceeds 1 when defined.
pub fn rho_min(id: ExampleId, n: u32, a_mod: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Config("order n must be at least 1".into()));
    }
    if !a_mod.is_finite() || a_mod < 0.0 {
        return Err(Error::Config(format!(
            "coefficient modulus must be a finite nonnegative real, got {a_mod}"
        )));
    }
    let c = id.denom_factor(n);
    let bound = 1.0 / c;
    if a_mod >= bound {
        return Err(Error::CoefficientTooLarge {
            a_mod,
            bound,
            constraint: format!("|a| < 1/{c} for {id:?} with n = {n}"),
        });
    }
    Ok(2.0f64.sqrt() / (1.0 - c * a_mod))
}

/// Run a worked construction end to end: build `f = z + a z^{n+1}`, take
/// its canonical boundary points and their average, use the minimal rho,
/// and run the matching checker. Before returning, the closed-form
/// inequality chain
///
/// `sup(conclusion) < t <= t/(1 - c t) <= rho |1 - alpha|`
///
/// (with `t` the conclusion scale) is re-verified numerically; a failure
/// would be an implementation bug and comes back as `ChainViolation`.
pub fn example_end_to_end(
    id: ExampleId,
    n: u32,
    a: Complex64,
    cfg: &SamplingConfig,
) -> Result<TheoremReport> {
    cfg.validate()?;
    if !a.re.is_finite() || !a.im.is_finite() {
        return Err(Error::Config(format!(
            "coefficient a must be finite, got {a}"
        )));
    }
    let rho = rho_min(id, n, a.norm())?;
    let f = ClassMember::monomial(n, a)?;
    let (z1, z2) = monomial_boundary_points(a, n);
    let mode = match id {
        ExampleId::Ex5 => AlphaMode::FOverZMean,
        _ => AlphaMode::DerivativeMean,
    };
    let spec = alpha_mean(&f, &[z1, z2], mode)?.with_rho(rho)?;
    let report = match id {
        ExampleId::Ex1 => check_thm1(&f, &spec, cfg)?,
        ExampleId::Ex2 => check_thm2(&f, &spec, cfg)?,
        ExampleId::Ex5 => check_thm5(&f, &spec, cfg)?,
    };

    let t = id.conclusion_scale(n, a.norm());
    let mid = t / (1.0 - id.denom_factor(n) * a.norm());
    let slack = 1e-12;
    if report.conclusion_sup.value >= t + slack {
        return Err(Error::ChainViolation(format!(
            "sampled conclusion sup {} is not below the scale {t}",
            report.conclusion_sup.value
        )));
    }
    if t > mid + slack {
        return Err(Error::ChainViolation(format!("{t} > {mid}")));
    }
    if mid > report.conclusion_bound + slack {
        return Err(Error::ChainViolation(format!(
            "{mid} exceeds the conclusion bound {}",
            report.conclusion_bound
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::PowerPoly;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn member(coeffs: &[(f64, f64)]) -> ClassMember {
        let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
        ClassMember::new(PowerPoly::new(v).unwrap()).unwrap()
    }

    fn canonical_spec(
        f: &ClassMember,
        a: Complex64,
        n: u32,
        mode: AlphaMode,
        rho: f64,
    ) -> AlphaSpec {
        let (z1, z2) = monomial_boundary_points(a, n);
        alpha_mean(f, &[z1, z2], mode)
            .unwrap()
            .with_rho(rho)
            .unwrap()
    }

    #[test]
    fn thm1_canonical_quadratic_passes() {
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let rho = 2.0f64.sqrt() / 0.2;
        let spec = canonical_spec(&f, a, 1, AlphaMode::DerivativeMean, rho);
        let cfg = SamplingConfig::default();
        let report = check_thm1(&f, &spec, &cfg).unwrap();

        assert_eq!(report.alpha, c(1.2, 0.2));
        assert!((report.hypothesis_bound - 2.0 / 3.0).abs() < 1e-12);
        assert!(report.hypothesis_sup.value > 0.66 && report.hypothesis_sup.value < 2.0 / 3.0);
        assert!(report.hypothesis_ok);
        assert!((report.conclusion_bound - 2.0).abs() < 1e-12);
        assert!((report.conclusion_sup.value - 0.4 * (1.0 - 1e-4)).abs() < 1e-9);
        assert!(report.conclusion_ok);
        assert!(!report.univalent_implied); // bound 2 >= 1
        assert_eq!(report.limits_at_zero, None);
        assert_eq!(
            report.hypothesis_margin,
            report.hypothesis_bound - report.hypothesis_sup.value
        );
        // Corollary chain: rho |1 - alpha| <= rho M_alpha.
        assert!(report.conclusion_bound <= report.corollary1_bound.unwrap() + 1e-9);
    }

    #[test]
    fn thm1_oversized_coefficient_fails_hypothesis() {
        // |a| = 0.45 sits outside the admissible range; with rho = 5 sqrt 2
        // the T1 supremum (about 9 as r -> 1) dwarfs the bound.
        let a = c(0.45, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let spec = canonical_spec(&f, a, 1, AlphaMode::DerivativeMean, 5.0 * 2.0f64.sqrt());
        let report = check_thm1(&f, &spec, &SamplingConfig::default()).unwrap();
        assert!(!report.hypothesis_ok);
        assert!(report.hypothesis_sup.value > 8.9);
        assert!(report.hypothesis_margin < 0.0);
    }

    #[test]
    fn thm2_cubic_passes_with_tight_margin() {
        let a = c(0.1, 0.0);
        let f = ClassMember::monomial(2, a).unwrap();
        let rho = 2.0f64.sqrt() / 0.7;
        let spec = canonical_spec(&f, a, 2, AlphaMode::DerivativeMean, rho);
        let report = check_thm2(&f, &spec, &SamplingConfig::default()).unwrap();
        // The n = 2 boundary point squares cos(pi/4), so alpha is exact
        // only up to one rounding.
        assert!((report.alpha - c(1.15, 0.15)).norm() < 1e-15);
        assert!((report.hypothesis_bound - 9.0 / 35.0).abs() < 1e-12);
        assert!(report.hypothesis_ok);
        assert!(report.hypothesis_margin > 0.0 && report.hypothesis_margin < 1e-3);
        assert!((report.conclusion_bound - 3.0 / 7.0).abs() < 1e-12);
        assert!(report.conclusion_ok);
        assert!(report.univalent_implied); // 3/7 < 1
    }

    #[test]
    fn thm3_constant_expression_fails_strict_comparison() {
        // For f = z + 0.2 z^2 the expression is identically 1 = n^2, and
        // the hypothesis demands strictly less.
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let spec = canonical_spec(&f, a, 1, AlphaMode::DerivativeMean, 2.0);
        let report = check_thm3(&f, &spec, &SamplingConfig::default()).unwrap();
        assert_eq!(report.hypothesis_bound, 1.0);
        assert!((report.hypothesis_sup.value - 1.0).abs() < 1e-9);
        assert!(!report.hypothesis_ok);
        assert_eq!(report.limits_at_zero, Some(1.0));
    }

    #[test]
    fn thm3_generic_function_exceeds_bound() {
        // f = z + 0.1 z^2 + 0.05 z^3: the expression is a Moebius map with
        // real-part sup about 2.2856 at z = r, well above n^2 = 1.
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.1, 0.0), (0.05, 0.0)]);
        let (z1, z2) = monomial_boundary_points(c(0.1, 0.0), 1);
        let spec = alpha_mean(&f, &[z1, z2], AlphaMode::DerivativeMean)
            .unwrap()
            .with_rho(2.0)
            .unwrap();
        let report = check_thm3(&f, &spec, &SamplingConfig::default()).unwrap();
        assert!(report.hypothesis_sup.value > 2.28 && report.hypothesis_sup.value < 2.29);
        assert!(!report.hypothesis_ok);
        assert!((report.hypothesis_sup.argmax - c(1.0 - 1e-4, 0.0)).norm() < 1e-3);
    }

    #[test]
    fn thm4_single_perturbation_sits_on_the_ray() {
        // T4 is identically n for f = z + a z^{n+1}: distance zero, so the
        // avoidance test must fail for any positive tolerance.
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let spec = canonical_spec(&f, a, 1, AlphaMode::DerivativeMean, 2.0);
        let report = check_thm4(&f, &spec, &SamplingConfig::default(), DEFAULT_RAY_TOL).unwrap();
        assert!(!report.hypothesis_ok);
        assert!(report.hypothesis_sup.value.abs() < 1e-9); // -min distance ~ 0
        assert_eq!(report.hypothesis_bound, -DEFAULT_RAY_TOL);
        assert_eq!(report.limits_at_zero, Some(1.0));
        // The conclusion side is unaffected by the ray test.
        assert!(report.conclusion_ok);
    }

    #[test]
    fn thm4_rejects_nonpositive_tolerance() {
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let spec = canonical_spec(&f, a, 1, AlphaMode::DerivativeMean, 2.0);
        let err = check_thm4(&f, &spec, &SamplingConfig::default(), 0.0).unwrap_err();
        assert!(matches!(err, Error::Config(_)));
    }

    #[test]
    fn thm5_canonical_quadratic_passes() {
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let rho = 2.0f64.sqrt() / 0.6;
        let spec = canonical_spec(&f, a, 1, AlphaMode::FOverZMean, rho);
        let report = check_thm5(&f, &spec, &SamplingConfig::default()).unwrap();
        assert_eq!(report.alpha, c(1.1, 0.1));
        assert!((report.hypothesis_bound - 0.25).abs() < 1e-12);
        assert!(report.hypothesis_ok);
        assert!((report.conclusion_bound - 1.0 / 3.0).abs() < 1e-12);
        assert!(report.conclusion_sup.value < 0.2);
        assert!(report.conclusion_ok);
        assert!(report.univalent_implied);
    }

    #[test]
    fn checkers_validate_mode_rho_and_identity() {
        let a = c(0.2, 0.0);
        let f = ClassMember::monomial(1, a).unwrap();
        let (z1, z2) = monomial_boundary_points(a, 1);

        // Mode mismatch: a derivative-mean spec fed to the fifth checker.
        let deriv = alpha_mean(&f, &[z1, z2], AlphaMode::DerivativeMean)
            .unwrap()
            .with_rho(2.0)
            .unwrap();
        assert!(matches!(
            check_thm5(&f, &deriv, &SamplingConfig::default()),
            Err(Error::Config(_))
        ));

        // Missing rho.
        let no_rho = alpha_mean(&f, &[z1, z2], AlphaMode::DerivativeMean).unwrap();
        assert!(matches!(
            check_thm1(&f, &no_rho, &SamplingConfig::default()),
            Err(Error::RhoOutOfRange { .. })
        ));

        // Identity function: degenerate regardless of what the AlphaSpec claims.
        let id = ClassMember::monomial(1, c(0.0, 0.0)).unwrap();
        let mut fake = deriv.clone();
        fake.alpha = c(1.5, 0.0);
        assert!(matches!(
            check_thm1(&id, &fake, &SamplingConfig::default()),
            Err(Error::DegenerateAlpha { .. })
        ));
    }

    #[test]
    fn rho_min_formulas_and_ranges() {
        let s2 = 2.0f64.sqrt();
        assert!((rho_min(ExampleId::Ex1, 1, 0.2).unwrap() - s2 / 0.2).abs() < 1e-12);
        assert!((rho_min(ExampleId::Ex2, 1, 0.2).unwrap() - s2 / 0.6).abs() < 1e-12);
        assert!((rho_min(ExampleId::Ex5, 1, 0.2).unwrap() - s2 / 0.6).abs() < 1e-12);
        // Ex5's range does not depend on n.
        assert!((rho_min(ExampleId::Ex5, 4, 0.2).unwrap() - s2 / 0.6).abs() < 1e-12);

        for (id, n, bad) in [
            (ExampleId::Ex1, 1u32, 0.25),
            (ExampleId::Ex1, 2, 1.0 / 6.0),
            (ExampleId::Ex2, 1, 0.5),
            (ExampleId::Ex5, 1, 0.5),
        ] {
            match rho_min(id, n, bad) {
                Err(Error::CoefficientTooLarge { bound, .. }) => {
                    assert!((bound - bad).abs() < 1e-15)
                }
                other => panic!("expected CoefficientTooLarge, got {other:?}"),
            }
        }

        // Every defined value exceeds 1.
        for a in [0.0, 0.05, 0.12, 0.24] {
            assert!(rho_min(ExampleId::Ex1, 1, a).unwrap() > 1.0);
        }
        assert!(matches!(
            rho_min(ExampleId::Ex1, 1, -0.1),
            Err(Error::Config(_))
        ));
        assert!(matches!(
            rho_min(ExampleId::Ex1, 0, 0.1),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn end_to_end_first_construction() {
        let report =
            example_end_to_end(ExampleId::Ex1, 1, c(0.2, 0.0), &SamplingConfig::default()).unwrap();
        assert_eq!(report.theorem_id, TheoremId::T1);
        assert_eq!(report.alpha, c(1.2, 0.2));
        assert!(report.hypothesis_ok && report.conclusion_ok);
    }

    #[test]
    fn end_to_end_rejects_oversized_coefficient() {
        let err = example_end_to_end(ExampleId::Ex1, 1, c(0.3, 0.0), &SamplingConfig::default())
            .unwrap_err();
        assert!(matches!(err, Error::CoefficientTooLarge { .. }));
    }

    #[test]
    fn report_json_round_trips_identically() {
        let report =
            example_end_to_end(ExampleId::Ex2, 1, c(0.2, 0.0), &SamplingConfig::default()).unwrap();
        let text = report.to_json_string();
        let back = TheoremReport::from_json(&text).unwrap();
        assert_eq!(back, report);
        assert_eq!(back.to_json_string(), text);
    }

    #[test]
    fn report_csv_row_matches_header_arity() {
        let report =
            example_end_to_end(ExampleId::Ex5, 1, c(0.2, 0.0), &SamplingConfig::default()).unwrap();
        let header = TheoremReport::csv_header();
        let row = report.to_csv_row();
        assert_eq!(header.split(',').count(), row.split(',').count());
        assert!(row.starts_with("T5,1,"));
        // The schedule cell uses ';' so the row has exactly as many commas
        // as the header.
    }

    #[test]
    fn ray_distance_cases() {
        assert_eq!(ray_distance(c(2.0, 0.0), 1), 0.0);
        assert_eq!(ray_distance(c(2.0, 0.3), 1), 0.3);
        assert_eq!(ray_distance(c(1.0, -0.25), 1), 0.25);
        assert!((ray_distance(c(0.0, 0.0), 1) - 1.0).abs() < 1e-15);
        assert!((ray_distance(c(0.0, 1.0), 2) - 5.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn bounds_increase_with_rho() {
        let a = c(0.1, 0.05);
        let f = ClassMember::monomial(1, a).unwrap();
        let (z1, z2) = monomial_boundary_points(a, 1);
        let base = alpha_mean(&f, &[z1, z2], AlphaMode::DerivativeMean).unwrap();
        let cfg = SamplingConfig::default();
        let mut prev: Option<TheoremReport> = None;
        for rho in [1.5, 2.0, 4.0, 8.0] {
            let spec = base.clone().with_rho(rho).unwrap();
            let report = check_thm1(&f, &spec, &cfg).unwrap();
            if let Some(p) = prev {
                assert!(report.hypothesis_bound > p.hypothesis_bound);
                assert!(report.conclusion_bound > p.conclusion_bound);
            }
            prev = Some(report);
        }
    }
}
