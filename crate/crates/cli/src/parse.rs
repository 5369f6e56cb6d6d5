//! Flag-value parsers: complex literals, boundary points, coefficient
//! lists, expression names. Everything returns the library's `Parse`
//! error so malformed values map to the usage exit code.

use gft::{ClassMember, Complex64, Error, ExprKind, PowerPoly, Result};

/// How far an explicit point may sit from the unit circle before it is
/// rejected instead of normalized.
pub const POINT_CIRCLE_TOL: f64 = 1e-9;

fn parse_real(text: &str) -> Result<f64> {
    let s = text.trim();
    let value: f64 = s
        .parse()
        .map_err(|_| Error::Parse(format!("expected a number, got {s:?}")))?;
    if !value.is_finite() {
        return Err(Error::Parse(format!("number {s:?} is not finite")));
    }
    Ok(value)
}

/// Complex literal: `re`, `imi`, or `re+imi` / `re-imi`, e.g. `0.2`,
/// `-1.5`, `0.2i`, `0+0.2i`, `1.2-0.5i`. Exponents are fine (`1e-3i`).
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let Some(body) = s.strip_suffix(['i', 'I']) else {
        return Ok(Complex64::new(parse_real(s)?, 0.0));
    };
    // Split the body at the sign that starts the imaginary part; a sign
    // right after an exponent marker belongs to the exponent.
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        if matches!(bytes[idx], b'+' | b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            split = Some(idx);
            break;
        }
    }
    let (re_text, im_text) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("0", body),
    };
    let im = match im_text {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => parse_real(other)?,
    };
    Ok(Complex64::new(parse_real(re_text)?, im))
}

/// Comma-separated complex literals.
pub fn parse_complex_list(text: &str) -> Result<Vec<Complex64>> {
    text.split(',').map(parse_complex).collect()
}

/// Comma-separated reals.
pub fn parse_real_list(text: &str) -> Result<Vec<f64>> {
    text.split(',').map(parse_real).collect()
}

/// Boundary points: each comma-separated token is either a plain number —
/// an angle in turns, taken modulo 1 — or a complex literal (anything
/// containing `i`), which must already sit within [`POINT_CIRCLE_TOL`] of
/// the unit circle and is then normalized exactly onto it.
pub fn parse_points(text: &str) -> Result<Vec<Complex64>> {
    text.split(',')
        .map(|token| {
            let token = token.trim();
            if token.contains(['i', 'I']) {
                let p = parse_complex(token)?;
                let r = p.norm();
                if (r - 1.0).abs() > POINT_CIRCLE_TOL {
                    return Err(Error::Parse(format!(
                        "point {token:?} has modulus {r}, too far from the unit circle"
                    )));
                }
                Ok(p / r)
            } else {
                let turns = parse_real(token)?.rem_euclid(1.0);
                let angle = turns * std::f64::consts::TAU;
                Ok(Complex64::new(angle.cos(), angle.sin()))
            }
        })
        .collect()
}

/// Inline coefficient list `c0,c1,...` into a class member.
pub fn parse_member(text: &str) -> Result<ClassMember> {
    let coeffs = parse_complex_list(text)?;
    ClassMember::new(PowerPoly::new(coeffs)?)
}

/// Expression name as printed by `ExprKind::name` (`t1`..`t5`,
/// `fprime-minus-1`, `f-over-z-minus-1`).
pub fn parse_kind(text: &str) -> Result<ExprKind> {
    match text.trim().to_ascii_lowercase().as_str() {
        "t1" => Ok(ExprKind::T1),
        "t2" => Ok(ExprKind::T2),
        "t3" => Ok(ExprKind::T3),
        "t4" => Ok(ExprKind::T4),
        "t5" => Ok(ExprKind::T5),
        "fprime-minus-1" => Ok(ExprKind::FprimeMinus1),
        "f-over-z-minus-1" => Ok(ExprKind::FOverZMinus1),
        other => Err(Error::Parse(format!(
            "unknown expression {other:?}; expected one of t1, t2, t3, t4, t5, \
             fprime-minus-1, f-over-z-minus-1"
        ))),
    }
}
