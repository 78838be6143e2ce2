//! Closed-form inverses of the approximations.
//!
//! Setting `sqrt(1 - e^E(x)) = y` gives `E(x) = ln(1 - y²) =: L`. With
//! `u = x²` the exponent equation `N(u) = L·D(u)` is the quadratic
//!
//! ```text
//! (n2 - L·d2)·u² + (n1 - L·d1)·u - L·d0 = 0
//! ```
//!
//! so `x` follows from one logarithm, one quadratic and one square root. No
//! iteration is involved; an optional Newton polish is available through
//! [`invert`].
//!
//! # Conditioning
//!
//! The inverse is as accurate as its input allows. Near saturation the
//! forward slope collapses like `e^{-x²}`, so a `y` rounded to `f64` only
//! pins `x` down to about `ulp(y) / slope`: roughly `1e-12` at `x = 3`,
//! `1e-9` at `x = 4` and `1e-6` at `x = 5`. Callers who need the deep tail
//! should go through the complement (`erfc_approx_inv`, `q_approx_inv`),
//! whose inputs keep full relative precision there.

use serde::Serialize;

use crate::approx::{
    erf_approx, erfc_approx, phi_approx, q_approx, winitzki_erf, RationalExponentCoeffs, Target,
    ERF_COEFFS, PHI_COEFFS, WINITZKI_COEFFS,
};
use crate::error::{Error, Result};

/// An abscissa together with the forward residual `|forward(x) - y|` it
/// achieves.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct InverseResult {
    pub x: f64,
    pub residual: f64,
}

/// Whether to follow the closed-form solution with a Newton correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Polish {
    #[default]
    None,
    /// One Newton step on the forward formula, kept only if it does not
    /// increase the residual.
    Newton,
}

/// Solves `E(u) = level` for `u = x² ≥ 0`.
///
/// The returned root is the branch continuous with `u(0) = 0`. Both roots
/// are formed without cancellation and the non-negative one is selected.
///
/// ```
/// use erf4::approx::{exponent, ERF_COEFFS};
/// use erf4::inverse::invert_exponent;
///
/// let level = exponent(&ERF_COEFFS, 1.5).unwrap();
/// let u = invert_exponent(&ERF_COEFFS, level).unwrap();
/// assert!((u.sqrt() - 1.5).abs() < 1e-12);
/// ```
pub fn invert_exponent(coeffs: &RationalExponentCoeffs, level: f64) -> Result<f64> {
    if level.is_nan() || level > 0.0 {
        return Err(Error::Domain {
            op: "invert_exponent",
            value: level,
            expected: "level <= 0",
        });
    }
    if level == 0.0 {
        return Ok(0.0);
    }
    // E decreases from 0 towards its limit; levels at or past it are
    // never attained.
    if level <= coeffs.limit() {
        return Err(Error::Domain {
            op: "invert_exponent",
            value: level,
            expected: "level above the exponent's limit",
        });
    }

    let a = coeffs.n2 - level * coeffs.d2;
    let b = coeffs.n1 - level * coeffs.d1;
    let c = -level * coeffs.d0;

    if a == 0.0 {
        let u = -c / b;
        return if u >= 0.0 && u.is_finite() {
            Ok(u)
        } else {
            Err(Error::Internal(format!(
                "degenerate quadratic has no admissible root at level {level}"
            )))
        };
    }

    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        return Err(Error::Internal(format!(
            "negative discriminant {disc} at level {level}"
        )));
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let r1 = q / a;
    let r2 = c / q;
    match (r1 >= 0.0 && r1.is_finite(), r2 >= 0.0 && r2.is_finite()) {
        (true, false) => Ok(r1),
        (false, true) => Ok(r2),
        _ => Err(Error::Internal(format!(
            "expected exactly one non-negative root, got {r1} and {r2} at level {level}"
        ))),
    }
}

/// `ln(1 - s²)` given `s ∈ [0, 1)` and its complement `c = 1 - s`, using
/// whichever form avoids cancellation.
fn log_one_minus_square(s: f64, c: f64) -> f64 {
    let s2 = s * s;
    if s2 < 0.5 {
        (-s2).ln_1p()
    } else {
        (c * (2.0 - c)).ln()
    }
}

fn abscissa(coeffs: &RationalExponentCoeffs, s: f64, c: f64) -> Result<f64> {
    let level = log_one_minus_square(s, c);
    Ok(invert_exponent(coeffs, level)?.sqrt())
}

fn domain(op: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        op,
        value,
        expected,
    }
}

/// Inverts [`erf_approx`]: returns `x` with `erf_approx(x) = y`, odd in `y`.
pub fn erf_approx_inv(y: f64) -> Result<InverseResult> {
    invert(Target::Erf, y, Polish::None)
}

/// Inverts [`erfc_approx`] on `(0, 2)`.
pub fn erfc_approx_inv(y: f64) -> Result<InverseResult> {
    invert(Target::Erfc, y, Polish::None)
}

/// Inverts [`phi_approx`] on `(0, 1)`.
///
/// ```
/// let r = erf4::phi_approx_inv(0.975).unwrap();
/// assert!((r.x - 1.959964).abs() < 3e-4);
/// ```
pub fn phi_approx_inv(p: f64) -> Result<InverseResult> {
    invert(Target::Phi, p, Polish::None)
}

/// Inverts [`q_approx`] on `(0, 1)`.
pub fn q_approx_inv(p: f64) -> Result<InverseResult> {
    invert(Target::Q, p, Polish::None)
}

/// Inverts [`winitzki_erf`], which has the same rational-exponent shape.
pub fn winitzki_erf_inv(y: f64) -> Result<InverseResult> {
    let x = erf_family_x(&WINITZKI_COEFFS, "winitzki_erf_inv", y)?;
    Ok(InverseResult {
        x,
        residual: (winitzki_erf(x)? - y).abs(),
    })
}

fn erf_family_x(coeffs: &RationalExponentCoeffs, op: &'static str, y: f64) -> Result<f64> {
    if !(y.is_finite() && y.abs() < 1.0) {
        return Err(domain(op, y, "-1 < y < 1"));
    }
    let s = y.abs();
    Ok(abscissa(coeffs, s, 1.0 - s)?.copysign(y))
}

/// Inverts the improved approximation of `target` at `y`.
pub fn invert(target: Target, y: f64, polish: Polish) -> Result<InverseResult> {
    let x = match target {
        Target::Erf => erf_family_x(&ERF_COEFFS, "erf_approx_inv", y)?,
        Target::Erfc => {
            if !(y.is_finite() && y > 0.0 && y < 2.0) {
                return Err(domain("erfc_approx_inv", y, "0 < y < 2"));
            }
            if y <= 1.0 {
                abscissa(&ERF_COEFFS, 1.0 - y, y)?
            } else {
                let s = y - 1.0;
                -abscissa(&ERF_COEFFS, s, 1.0 - s)?
            }
        }
        Target::Phi | Target::Q => {
            let op = if target == Target::Phi {
                "phi_approx_inv"
            } else {
                "q_approx_inv"
            };
            if !(y.is_finite() && y > 0.0 && y < 1.0) {
                return Err(domain(op, y, "0 < p < 1"));
            }
            // Express everything through the upper-tail probability, which
            // is exact to form on either side of ½.
            let (tail, sign) = match (target, y >= 0.5) {
                (Target::Phi, true) => (1.0 - y, 1.0),
                (Target::Phi, false) => (y, -1.0),
                (_, true) => (1.0 - y, -1.0),
                (_, false) => (y, 1.0),
            };
            sign * abscissa(&PHI_COEFFS, 1.0 - 2.0 * tail, 2.0 * tail)?
        }
    };

    let forward = |x: f64| match target {
        Target::Erf => erf_approx(x),
        Target::Erfc => erfc_approx(x),
        Target::Phi => phi_approx(x),
        Target::Q => q_approx(x),
    };
    let mut result = InverseResult {
        x,
        residual: (forward(x)? - y).abs(),
    };

    if polish == Polish::Newton && result.residual > 0.0 {
        let slope = forward_slope(target, x);
        if slope.is_finite() && slope != 0.0 {
            let candidate = x - (forward(x)? - y) / slope;
            if candidate.is_finite() {
                let residual = (forward(candidate)? - y).abs();
                if residual < result.residual {
                    result = InverseResult {
                        x: candidate,
                        residual,
                    };
                }
            }
        }
    }
    Ok(result)
}

/// Derivative of the improved forward formula for `target` at `x`.
pub fn forward_slope(target: Target, x: f64) -> f64 {
    let (coeffs, scale) = match target {
        Target::Erf | Target::Erfc => (&ERF_COEFFS, 1.0),
        Target::Phi | Target::Q => (&PHI_COEFFS, 0.5),
    };
    // d/dx sqrt(1 - e^E) = -e^E · E'(u) · x / sqrt(1 - e^E), even in x.
    let ax = x.abs();
    let rise_slope = if ax == 0.0 {
        (-coeffs.n1 / coeffs.d0).sqrt()
    } else {
        let u = ax * ax;
        let e = coeffs.eval_u(u);
        let rise = (-e.exp_m1()).sqrt();
        -e.exp() * coeffs.derivative_u(u) * ax / rise
    };
    let slope = scale * rise_slope;
    if target.is_complement() {
        -slope
    } else {
        slope
    }
}
