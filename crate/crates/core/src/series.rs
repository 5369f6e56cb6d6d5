//! Truncated power series and the normalized function classes.
//!
//! Everything downstream works with polynomials `p(z) = sum_j c_j z^j`
//! held as dense complex coefficient vectors. A [`ClassMember`] is a
//! polynomial of the shape `z + a_{n+1} z^{n+1} + ...` — zero constant
//! term, unit linear term, and an exact gap up to the (n+1)-st
//! coefficient — evaluated only on the closed unit disk.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Slack admitted when checking that a point lies in the closed unit disk.
pub const DOMAIN_SLACK: f64 = 1e-12;

/// Dense polynomial over the complex numbers, coefficient `j` multiplying
/// `z^j`. Trailing zero coefficients are permitted and never affect results.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerPoly {
    coeffs: Vec<Complex64>,
}

impl PowerPoly {
    /// Build from raw coefficients. Rejects empty input and non-finite
    /// components — NaN or infinity in a coefficient would silently poison
    /// every evaluation afterwards.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Config(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        for (j, c) in coeffs.iter().enumerate() {
            if !c.re.is_finite() || !c.im.is_finite() {
                return Err(Error::Config(format!("coefficient {j} is not finite: {c}")));
            }
        }
        Ok(PowerPoly { coeffs })
    }

    /// The coefficient vector, lowest order first.
    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `z^j`; zero beyond the stored length.
    pub fn coeff(&self, j: usize) -> Complex64 {
        self.coeffs
            .get(j)
            .copied()
            .unwrap_or_else(|| Complex64::new(0.0, 0.0))
    }

    /// Index of the highest nonzero coefficient; 0 for constants and for
    /// the zero polynomial (trailing zeros are ignored).
    pub fn degree(&self) -> usize {
        self.coeffs
            .iter()
            .rposition(|c| c.re != 0.0 || c.im != 0.0)
            .unwrap_or(0)
    }

    /// True when every coefficient is exactly zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.re == 0.0 && c.im == 0.0)
    }

    /// Horner evaluation at `z`, restricted to the closed unit disk
    /// (with [`DOMAIN_SLACK`] of leeway for boundary points produced by
    /// `cos`/`sin`).
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        let modulus = z.norm();
        if modulus.is_nan() || modulus > 1.0 + DOMAIN_SLACK {
            return Err(Error::Domain { modulus });
        }
        Ok(self.eval_unchecked(z))
    }

    /// Horner evaluation without the domain check. Callers are expected to
    /// have validated `z` once up front (the samplers do).
    pub(crate) fn eval_unchecked(&self, z: Complex64) -> Complex64 {
        let mut acc = *self.coeffs.last().expect("non-empty by construction");
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc * z + c;
        }
        acc
    }

    /// Coefficient-wise derivative. The derivative of a constant is the
    /// zero polynomial (one zero coefficient), never an empty vector.
    pub fn differentiate(&self) -> PowerPoly {
        if self.coeffs.len() <= 1 {
            return PowerPoly {
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        PowerPoly { coeffs }
    }

    /// Multiply by `z`: shift every coefficient up one index.
    pub(crate) fn shifted_up(&self) -> PowerPoly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::new(0.0, 0.0));
        coeffs.extend_from_slice(&self.coeffs);
        PowerPoly { coeffs }
    }

    /// Drop the constant term and shift down: `p(z)/z` for polynomials
    /// with `p(0) = 0`. Callers guarantee the constant term is zero.
    pub(crate) fn shifted_down(&self) -> PowerPoly {
        debug_assert!(self.coeff(0).re == 0.0 && self.coeff(0).im == 0.0);
        if self.coeffs.len() <= 1 {
            return PowerPoly {
                coeffs: vec![Complex64::new(0.0, 0.0)],
            };
        }
        PowerPoly {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Replace the constant term. Used to form `f' - 1` and `f/z - 1`
    /// exactly: class members have constant term exactly 1 there, so
    /// zeroing it is an exact operation with no cancellation.
    pub(crate) fn with_constant(&self, c0: Complex64) -> PowerPoly {
        let mut coeffs = self.coeffs.clone();
        coeffs[0] = c0;
        PowerPoly { coeffs }
    }

    /// Coefficient-wise difference `self - other`.
    pub(crate) fn sub(&self, other: &PowerPoly) -> PowerPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|j| self.coeff(j) - other.coeff(j)).collect();
        PowerPoly { coeffs }
    }

    /// Parse the coefficient file format: one `index,re,im` line per
    /// nonzero coefficient, indices strictly increasing, missing indices
    /// zero. Blank lines are ignored.
    pub fn from_coeff_lines(text: &str) -> Result<Self> {
        let mut entries: Vec<(usize, Complex64)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split(',').map(str::trim).collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!(
                    "line {}: expected `index,re,im`, got `{line}`",
                    lineno + 1
                )));
            }
            let index: usize = parts[0].parse().map_err(|_| {
                Error::Parse(format!("line {}: bad index `{}`", lineno + 1, parts[0]))
            })?;
            let re: f64 = parts[1].parse().map_err(|_| {
                Error::Parse(format!("line {}: bad real part `{}`", lineno + 1, parts[1]))
            })?;
            let im: f64 = parts[2].parse().map_err(|_| {
                Error::Parse(format!(
                    "line {}: bad imaginary part `{}`",
                    lineno + 1,
                    parts[2]
                ))
            })?;
            if let Some(&(last, _)) = entries.last() {
                if index <= last {
                    return Err(Error::Parse(format!(
                        "line {}: index {index} not strictly increasing (previous {last})",
                        lineno + 1
                    )));
                }
            }
            entries.push((index, Complex64::new(re, im)));
        }
        let last = entries
            .last()
            .ok_or_else(|| Error::Parse("no coefficients found".into()))?
            .0;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); last + 1];
        for (index, c) in entries {
            coeffs[index] = c;
        }
        PowerPoly::new(coeffs)
    }

    /// Inverse of [`from_coeff_lines`]: one line per nonzero coefficient.
    pub fn to_coeff_lines(&self) -> String {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.re != 0.0 || c.im != 0.0 {
                out.push_str(&format!("{},{},{}\n", j, c.re, c.im));
            }
        }
        if out.is_empty() {
            out.push_str("0,0,0\n");
        }
        out
    }
}

/// Outcome of classifying a polynomial against the normalized classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassOrder {
    /// Proper member: the largest `n` such that the polynomial has the
    /// form `z + a_{n+1} z^{n+1} + ...` with `a_{n+1} != 0`.
    Order(u32),
    /// The polynomial is exactly `z`, which sits in every class and has
    /// no largest admissible order.
    Identity,
}

/// Classify `p`: requires constant term exactly 0 and linear term exactly 1,
/// then reports the order from the first nonzero coefficient past `z`.
pub fn class_order(p: &PowerPoly) -> Result<ClassOrder> {
    let c0 = p.coeff(0);
    if c0.re != 0.0 || c0.im != 0.0 {
        return Err(Error::ClassViolation(format!(
            "constant term must be exactly 0, got {c0}"
        )));
    }
    let c1 = p.coeff(1);
    if c1.re != 1.0 || c1.im != 0.0 {
        return Err(Error::ClassViolation(format!(
            "linear term must be exactly 1, got {c1}"
        )));
    }
    for (j, c) in p.coeffs().iter().enumerate().skip(2) {
        if c.re != 0.0 || c.im != 0.0 {
            return Ok(ClassOrder::Order((j - 1) as u32));
        }
    }
    Ok(ClassOrder::Identity)
}

/// A polynomial admitted into a normalized class, together with its order.
///
/// The identity `f(z) = z` is constructible (it belongs to every class) and
/// is recorded with order 1 by convention; [`ClassMember::is_identity`]
/// distinguishes it where the distinction matters.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassMember {
    poly: PowerPoly,
    n: u32,
}

impl ClassMember {
    /// Admit a polynomial, inferring the order via [`class_order`].
    pub fn new(poly: PowerPoly) -> Result<Self> {
        let n = match class_order(&poly)? {
            ClassOrder::Order(n) => n,
            ClassOrder::Identity => 1,
        };
        Ok(ClassMember { poly, n })
    }

    /// The single-perturbation member `f(z) = z + a z^{n+1}`.
    pub fn monomial(n: u32, a: Complex64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Config("order n must be at least 1".into()));
        }
        let mut coeffs = vec![Complex64::new(0.0, 0.0); n as usize + 2];
        coeffs[1] = Complex64::new(1.0, 0.0);
        coeffs[n as usize + 1] = a;
        ClassMember::new(PowerPoly::new(coeffs)?)
    }

    pub fn poly(&self) -> &PowerPoly {
        &self.poly
    }

    /// The class order `n` (1 for the identity, by convention).
    pub fn n(&self) -> u32 {
        self.n
    }

    /// True when the member is exactly `f(z) = z`.
    pub fn is_identity(&self) -> bool {
        matches!(class_order(&self.poly), Ok(ClassOrder::Identity))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eval_identity() {
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let z = c(0.3, -0.4);
        assert_eq!(p.eval(z).unwrap(), z);
    }

    #[test]
    fn eval_quadratic_at_real_and_imaginary_points() {
        // p(z) = z + 0.2 z^2
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.2, 0.0)]).unwrap();
        assert_eq!(p.eval(c(1.0, 0.0)).unwrap(), c(1.2, 0.0));
        // p(i) = i - 0.2, exactly in floating point
        assert_eq!(p.eval(c(0.0, 1.0)).unwrap(), c(-0.2, 1.0));
    }

    #[test]
    fn eval_rejects_points_outside_disk() {
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        let err = p.eval(c(1.1, 0.0)).unwrap_err();
        assert!(matches!(err, Error::Domain { .. }));
        // Boundary itself is fine.
        assert!(p.eval(c(0.0, 1.0)).is_ok());
    }

    #[test]
    fn new_rejects_non_finite_and_empty() {
        assert!(PowerPoly::new(vec![]).is_err());
        assert!(PowerPoly::new(vec![c(f64::NAN, 0.0)]).is_err());
        assert!(PowerPoly::new(vec![c(0.0, f64::INFINITY)]).is_err());
    }

    #[test]
    fn differentiate_drops_degree() {
        // (z + a2 z^2)'' = 2 a2 exactly
        let a2 = c(0.37, -0.11);
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), a2]).unwrap();
        let d2 = p.differentiate().differentiate();
        assert_eq!(d2.coeffs(), &[a2 * 2.0]);
    }

    #[test]
    fn differentiate_constant_is_zero_polynomial() {
        let p = PowerPoly::new(vec![c(5.0, 1.0)]).unwrap();
        let d = p.differentiate();
        assert_eq!(d.coeffs(), &[c(0.0, 0.0)]);
        assert!(d.is_zero());
    }

    #[test]
    fn degree_ignores_trailing_zeros() {
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(PowerPoly::new(vec![c(0.0, 0.0)]).unwrap().degree(), 0);
    }

    #[test]
    fn class_order_reads_first_gap() {
        // z + 0.1 z^3 lies in the order-2 class.
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.1, 0.0)]).unwrap();
        assert_eq!(class_order(&p).unwrap(), ClassOrder::Order(2));
    }

    #[test]
    fn class_order_rejects_wrong_normalization() {
        let shifted = PowerPoly::new(vec![c(0.1, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(matches!(
            class_order(&shifted),
            Err(Error::ClassViolation(_))
        ));
        let scaled = PowerPoly::new(vec![c(0.0, 0.0), c(2.0, 0.0), c(0.1, 0.0)]).unwrap();
        assert!(matches!(
            class_order(&scaled),
            Err(Error::ClassViolation(_))
        ));
        // An *approximately* zero constant term is still a violation:
        // membership is structural, not numeric.
        let nearly = PowerPoly::new(vec![c(1e-300, 0.0), c(1.0, 0.0)]).unwrap();
        assert!(matches!(
            class_order(&nearly),
            Err(Error::ClassViolation(_))
        ));
    }

    #[test]
    fn class_order_marks_identity() {
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0)]).unwrap();
        assert_eq!(class_order(&p).unwrap(), ClassOrder::Identity);
        let padded =
            PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(class_order(&padded).unwrap(), ClassOrder::Identity);
    }

    #[test]
    fn member_round_trips_order() {
        for n in 1..=5u32 {
            let f = ClassMember::monomial(n, c(0.05, 0.02)).unwrap();
            assert_eq!(f.n(), n);
            assert_eq!(class_order(f.poly()).unwrap(), ClassOrder::Order(n));
            assert!(!f.is_identity());
        }
    }

    #[test]
    fn identity_member_is_flagged() {
        let f = ClassMember::monomial(3, c(0.0, 0.0)).unwrap();
        assert!(f.is_identity());
        assert_eq!(f.n(), 1);
    }

    #[test]
    fn coeff_lines_round_trip() {
        let text = "1,1,0\n3,0.25,-0.5\n";
        let p = PowerPoly::from_coeff_lines(text).unwrap();
        assert_eq!(p.coeff(0), c(0.0, 0.0));
        assert_eq!(p.coeff(1), c(1.0, 0.0));
        assert_eq!(p.coeff(2), c(0.0, 0.0));
        assert_eq!(p.coeff(3), c(0.25, -0.5));
        assert_eq!(p.to_coeff_lines(), text);
    }

    #[test]
    fn coeff_lines_reject_disorder_and_garbage() {
        assert!(matches!(
            PowerPoly::from_coeff_lines("2,1,0\n1,1,0\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PowerPoly::from_coeff_lines("1,1,0\n1,2,0\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PowerPoly::from_coeff_lines("1,x,0\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PowerPoly::from_coeff_lines("1,1\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            PowerPoly::from_coeff_lines(""),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn shifts_are_inverse_on_zero_constant_polys() {
        let p = PowerPoly::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(0.2, 0.3)]).unwrap();
        assert_eq!(p.shifted_down().shifted_up(), p);
    }
}
