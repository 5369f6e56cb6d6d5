//! The expressions whose suprema the checkers bound.
//!
//! Each [`ExprKind`] names a scalar complex expression in a class member
//! `f` and its derivatives, e.g. `T1 = z f''(z) / f'(z)` or the conclusion
//! quantity `f'(z) - 1`. Evaluation is exact about cancellation where it
//! can be: quantities like `f' - 1` and `f/z - 1` are formed at the
//! coefficient level (their constant terms are exactly 1 for class
//! members), not by subtracting nearly equal evaluations.
//!
//! `T3` and `T4` are 0/0 at the origin with removable singularities;
//! evaluation at `z = 0` dispatches to [`limit_at_zero`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::series::{ClassMember, PowerPoly, DOMAIN_SLACK};

/// Relative tolerance below which a denominator counts as vanished.
/// The test is `|den| <= POLE_TOL * (1 + |num|)`.
pub const POLE_TOL: f64 = 1e-12;

/// The expressions under study.
///
/// * `T1` — `z f'' / f'`
/// * `T2` — `z f'' - z f'' / f'`
/// * `T3` — `z (z f'')' / (f' - 1)`
/// * `T4` — `z f'' / (f' - 1)`
/// * `T5` — `z f' / f - 1`
/// * `FprimeMinus1` — `f' - 1` (conclusion quantity for T1-T4)
/// * `FOverZMinus1` — `f/z - 1` (conclusion quantity for T5)
/// * `FprimeMinusAlpha(a)` — `f' - a` (deviation from a boundary average)
/// * `FOverZMinusBeta(b)` — `f/z - b` (same, for the f/z average)
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExprKind {
    T1,
    T2,
    T3,
    T4,
    T5,
    FprimeMinus1,
    FOverZMinus1,
    FprimeMinusAlpha(Complex64),
    FOverZMinusBeta(Complex64),
}

impl ExprKind {
    /// Short lowercase name used in messages and CLI output.
    pub fn name(&self) -> &'static str {
        match self {
            ExprKind::T1 => "t1",
            ExprKind::T2 => "t2",
            ExprKind::T3 => "t3",
            ExprKind::T4 => "t4",
            ExprKind::T5 => "t5",
            ExprKind::FprimeMinus1 => "fprime-minus-1",
            ExprKind::FOverZMinus1 => "f-over-z-minus-1",
            ExprKind::FprimeMinusAlpha(_) => "fprime-minus-alpha",
            ExprKind::FOverZMinusBeta(_) => "f-over-z-minus-beta",
        }
    }

    /// True for the two expressions with a removable 0/0 at the origin.
    pub(crate) fn has_origin_dispatch(&self) -> bool {
        matches!(self, ExprKind::T3 | ExprKind::T4)
    }
}

/// An expression specialized to one function: all derived polynomials are
/// computed once so that per-point evaluation is a handful of Horner runs.
pub(crate) struct CompiledExpr {
    form: Form,
}

enum Form {
    /// Value is `p(z)`.
    Poly(PowerPoly),
    /// Value is `num(z) / den(z)`, with the pole guard on `den`.
    Ratio { num: PowerPoly, den: PowerPoly },
    /// T2 as displayed: `zf''(z) - zf''(z)/f'(z)`.
    Difference { zf2: PowerPoly, fp: PowerPoly },
    /// Ratio that is 0/0 at the origin; `origin` is the removable-limit
    /// value there (`None` for the identity, whose limit is undefined).
    RatioAtOrigin {
        num: PowerPoly,
        den: PowerPoly,
        origin: Option<Complex64>,
    },
}

impl CompiledExpr {
    pub(crate) fn new(kind: ExprKind, f: &ClassMember) -> CompiledExpr {
        let one = Complex64::new(1.0, 0.0);
        let d1 = f.poly().differentiate();
        let form = match kind {
            ExprKind::T1 => {
                let d2 = d1.differentiate();
                Form::Ratio {
                    num: d2.shifted_up(),
                    den: d1,
                }
            }
            ExprKind::T2 => {
                let d2 = d1.differentiate();
                Form::Difference {
                    zf2: d2.shifted_up(),
                    fp: d1,
                }
            }
            ExprKind::T3 => {
                let d2 = d1.differentiate();
                let num = d2.shifted_up().differentiate().shifted_up();
                let den = d1.with_constant(Complex64::new(0.0, 0.0));
                let origin = limit_at_zero(ExprKind::T3, f).ok();
                Form::RatioAtOrigin { num, den, origin }
            }
            ExprKind::T4 => {
                let d2 = d1.differentiate();
                let num = d2.shifted_up();
                let den = d1.with_constant(Complex64::new(0.0, 0.0));
                let origin = limit_at_zero(ExprKind::T4, f).ok();
                Form::RatioAtOrigin { num, den, origin }
            }
            ExprKind::T5 => {
                // z f'/f - 1 = (f' - f/z) / (f/z); both constant terms are
                // exactly 1, so the numerator needs no subtraction of ones.
                let fz = f.poly().shifted_down();
                Form::Ratio {
                    num: d1.sub(&fz),
                    den: fz,
                }
            }
            ExprKind::FprimeMinus1 => Form::Poly(d1.with_constant(Complex64::new(0.0, 0.0))),
            ExprKind::FOverZMinus1 => {
                let fz = f.poly().shifted_down();
                Form::Poly(fz.with_constant(Complex64::new(0.0, 0.0)))
            }
            ExprKind::FprimeMinusAlpha(alpha) => Form::Poly(d1.with_constant(one - alpha)),
            ExprKind::FOverZMinusBeta(beta) => {
                let fz = f.poly().shifted_down();
                Form::Poly(fz.with_constant(one - beta))
            }
        };
        CompiledExpr { form }
    }

    /// Evaluate at a point already known to lie in the closed disk.
    pub(crate) fn eval(&self, z: Complex64) -> Result<Complex64> {
        debug_assert!(z.norm() <= 1.0 + DOMAIN_SLACK);
        match &self.form {
            Form::Poly(p) => Ok(p.eval_unchecked(z)),
            Form::Ratio { num, den } => {
                checked_div(num.eval_unchecked(z), den.eval_unchecked(z), z)
            }
            Form::Difference { zf2, fp } => {
                let a = zf2.eval_unchecked(z);
                let b = fp.eval_unchecked(z);
                let quotient = checked_div(a, b, z)?;
                Ok(a - quotient)
            }
            Form::RatioAtOrigin { num, den, origin } => {
                if z.re == 0.0 && z.im == 0.0 {
                    return origin.ok_or(Error::IdentityFunction);
                }
                checked_div(num.eval_unchecked(z), den.eval_unchecked(z), z)
            }
        }
    }
}

fn checked_div(num: Complex64, den: Complex64, at: Complex64) -> Result<Complex64> {
    let den_modulus = den.norm();
    if den_modulus <= POLE_TOL * (1.0 + num.norm()) {
        return Err(Error::Pole {
            at,
            denom_modulus: den_modulus,
        });
    }
    Ok(num / den)
}

/// Evaluate an expression at a point of the closed unit disk.
pub fn eval_expr(kind: ExprKind, f: &ClassMember, z: Complex64) -> Result<Complex64> {
    let modulus = z.norm();
    if modulus.is_nan() || modulus > 1.0 + DOMAIN_SLACK {
        return Err(Error::Domain { modulus });
    }
    CompiledExpr::new(kind, f).eval(z)
}

/// The limit of an expression as `z -> 0`, from the leading terms of the
/// series. For a member of the order-`n` class:
///
/// * `T3 -> n^2` and `T4 -> n` (both 0/0 with matching vanishing orders);
/// * `T1`, `T2`, `T5`, `FprimeMinus1`, `FOverZMinus1 -> 0`;
/// * `FprimeMinusAlpha(a) -> 1 - a`, `FOverZMinusBeta(b) -> 1 - b`.
///
/// For the identity `f(z) = z` the `T3`/`T4` limits do not exist (the
/// numerator and denominator series are identically zero), which is
/// reported as [`Error::IdentityFunction`].
pub fn limit_at_zero(kind: ExprKind, f: &ClassMember) -> Result<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    match kind {
        ExprKind::T3 => {
            if f.is_identity() {
                return Err(Error::IdentityFunction);
            }
            let n = f.n() as f64;
            Ok(Complex64::new(n * n, 0.0))
        }
        ExprKind::T4 => {
            if f.is_identity() {
                return Err(Error::IdentityFunction);
            }
            Ok(Complex64::new(f.n() as f64, 0.0))
        }
        ExprKind::T1 | ExprKind::T2 | ExprKind::T5 => Ok(zero),
        ExprKind::FprimeMinus1 | ExprKind::FOverZMinus1 => Ok(zero),
        ExprKind::FprimeMinusAlpha(alpha) => Ok(one - alpha),
        ExprKind::FOverZMinusBeta(beta) => Ok(one - beta),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn member(coeffs: &[(f64, f64)]) -> ClassMember {
        let v: Vec<Complex64> = coeffs.iter().map(|&(re, im)| c(re, im)).collect();
        ClassMember::new(PowerPoly::new(v).unwrap()).unwrap()
    }

    #[test]
    fn t1_hand_value() {
        // f = z + 0.2 z^2: T1(0.5) = (0.5 * 0.4) / (1 + 0.2) = 1/6
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.2, 0.0)]);
        let v = eval_expr(ExprKind::T1, &f, c(0.5, 0.0)).unwrap();
        assert!((v - c(1.0 / 6.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn t1_at_origin_is_zero() {
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.2, 0.0)]);
        assert_eq!(
            eval_expr(ExprKind::T1, &f, c(0.0, 0.0)).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn t4_is_constant_n_for_single_perturbation() {
        // f = z + a z^{n+1}: T4 = n(n+1)a z^n / ((n+1)a z^n) = n identically.
        for n in 1..=3u32 {
            let f = ClassMember::monomial(n, c(0.11, 0.07)).unwrap();
            for k in 0..50 {
                let theta = 0.13 * k as f64;
                let r = 0.05 + 0.018 * k as f64;
                let z = c(r * theta.cos(), r * theta.sin());
                let v = eval_expr(ExprKind::T4, &f, z).unwrap();
                assert!(
                    (v - c(n as f64, 0.0)).norm() < 1e-10,
                    "n = {n}, z = {z}, T4 = {v}"
                );
            }
        }
    }

    #[test]
    fn t5_vanishes_at_origin_exactly() {
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.2, 0.0)]);
        assert_eq!(
            eval_expr(ExprKind::T5, &f, c(0.0, 0.0)).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn conclusion_quantities_vanish_at_origin_exactly() {
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.0, 0.0), (0.3, -0.2)]);
        assert_eq!(
            eval_expr(ExprKind::FprimeMinus1, &f, c(0.0, 0.0)).unwrap(),
            c(0.0, 0.0)
        );
        assert_eq!(
            eval_expr(ExprKind::FOverZMinus1, &f, c(0.0, 0.0)).unwrap(),
            c(0.0, 0.0)
        );
    }

    #[test]
    fn origin_limits() {
        let f2 = ClassMember::monomial(2, c(0.1, 0.0)).unwrap();
        assert_eq!(limit_at_zero(ExprKind::T3, &f2).unwrap(), c(4.0, 0.0));
        assert_eq!(limit_at_zero(ExprKind::T4, &f2).unwrap(), c(2.0, 0.0));
        let f1 = ClassMember::monomial(1, c(0.2, 0.0)).unwrap();
        assert_eq!(limit_at_zero(ExprKind::T4, &f1).unwrap(), c(1.0, 0.0));
        assert_eq!(limit_at_zero(ExprKind::T1, &f1).unwrap(), c(0.0, 0.0));
        let alpha = c(1.2, 0.2);
        assert_eq!(
            limit_at_zero(ExprKind::FprimeMinusAlpha(alpha), &f1).unwrap(),
            c(1.0, 0.0) - alpha
        );
    }

    #[test]
    fn origin_limit_matches_nearby_evaluation() {
        let f = ClassMember::monomial(2, c(0.1, 0.0)).unwrap();
        let limit = limit_at_zero(ExprKind::T3, &f).unwrap();
        let near = eval_expr(ExprKind::T3, &f, c(1e-4, 0.0)).unwrap();
        assert!((near - limit).norm() < 1e-3);
        // And evaluation *at* the origin dispatches to the limit.
        assert_eq!(eval_expr(ExprKind::T3, &f, c(0.0, 0.0)).unwrap(), limit);
    }

    #[test]
    fn origin_limit_error_decreases_towards_zero() {
        // Non-trivial second coefficient so the approach is first order.
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.1, 0.0), (0.05, 0.0)]);
        let limit = limit_at_zero(ExprKind::T3, &f).unwrap();
        let errs: Vec<f64> = [1e-3, 1e-4, 1e-5]
            .iter()
            .map(|&r| (eval_expr(ExprKind::T3, &f, c(r, 0.0)).unwrap() - limit).norm())
            .collect();
        assert!(errs[0] > errs[1] && errs[1] > errs[2], "errors {errs:?}");
    }

    #[test]
    fn identity_gives_pole_off_origin_and_identity_error_at_origin() {
        let id = ClassMember::monomial(1, c(0.0, 0.0)).unwrap();
        assert!(id.is_identity());
        let off = eval_expr(ExprKind::T4, &id, c(0.5, 0.0)).unwrap_err();
        assert!(matches!(off, Error::Pole { .. }));
        let at = eval_expr(ExprKind::T4, &id, c(0.0, 0.0)).unwrap_err();
        assert_eq!(at, Error::IdentityFunction);
        assert_eq!(
            limit_at_zero(ExprKind::T3, &id).unwrap_err(),
            Error::IdentityFunction
        );
        // The regular expressions still have identity limits.
        assert_eq!(limit_at_zero(ExprKind::T1, &id).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn t2_matches_factored_form_spot_check() {
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.15, -0.1), (0.0, 0.05)]);
        let d1 = f.poly().differentiate();
        let zf2 = d1.differentiate().shifted_up();
        for k in 0..25 {
            let theta = 0.41 * k as f64;
            let r = 0.03 + 0.038 * k as f64;
            let z = c(r * theta.cos(), r * theta.sin());
            let direct = eval_expr(ExprKind::T2, &f, z).unwrap();
            let one = c(1.0, 0.0);
            let factored = zf2.eval(z).unwrap() * (one - one / d1.eval(z).unwrap());
            assert!((direct - factored).norm() < 1e-12, "z = {z}");
        }
    }

    #[test]
    fn eval_expr_rejects_points_outside_disk() {
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (0.2, 0.0)]);
        assert!(matches!(
            eval_expr(ExprKind::T1, &f, c(0.0, 1.5)),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn pole_guard_reports_offending_point() {
        // f = z - 0.5 z^2 has f'(1) = 0, a genuine pole of T1 on the circle.
        let f = member(&[(0.0, 0.0), (1.0, 0.0), (-0.5, 0.0)]);
        let z = c(1.0, 0.0);
        match eval_expr(ExprKind::T1, &f, z) {
            Err(Error::Pole { at, .. }) => assert_eq!(at, z),
            other => panic!("expected pole, got {other:?}"),
        }
    }
}
