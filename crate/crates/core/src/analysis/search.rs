//! Root searches for crossover abscissae and relative-error thresholds.

use serde::Serialize;

use super::scan::{ERF_REL_SKIP_BELOW, REL_ORACLE_FLOOR};
use crate::approx::{ApproxFunction, Target};
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// Bisection stops once the bracket is narrower than this.
pub const DEFAULT_X_TOL: f64 = 1e-10;

/// Spacing of the dense grid used to locate the first threshold crossing.
pub const THRESHOLD_GRID_STEP: f64 = 1e-4;

const MAX_BISECTIONS: usize = 200;

/// `|saturation - f(x)| - |approx(x) - f(x)|`: positive while the formula
/// beats the constant, negative once the constant wins.
///
/// For erf and Φ the two differences are formed on the complements (erfc,
/// Q), which are exact in real arithmetic and keep full relative precision
/// where `f(x)` has already rounded to one.
pub fn crossover_gap(
    approx: &ApproxFunction,
    saturation: f64,
    oracle: &Oracle,
    x: f64,
) -> Result<f64> {
    let (f, sat) = if approx.target().is_complement() {
        (*approx, saturation)
    } else {
        (approx.complement(), 1.0 - saturation)
    };
    let a = f.eval(x)?;
    let r = oracle.eval(f.target(), x)?;
    Ok((sat - r).abs() - (a - r).abs())
}

/// Finds `x` in `bracket` where the formula and the constant `saturation`
/// have equal absolute error against the reference.
pub fn find_crossover(
    approx: ApproxFunction,
    saturation: f64,
    bracket: (f64, f64),
) -> Result<f64> {
    find_crossover_with(approx, saturation, bracket, &Oracle::default(), DEFAULT_X_TOL)
}

pub fn find_crossover_with(
    approx: ApproxFunction,
    saturation: f64,
    bracket: (f64, f64),
    oracle: &Oracle,
    x_tol: f64,
) -> Result<f64> {
    let g = |x: f64| crossover_gap(&approx, saturation, oracle, x);
    bisect("crossover gap", g, bracket, x_tol)
}

fn bisect(
    what: &'static str,
    f: impl Fn(f64) -> Result<f64>,
    (lo, hi): (f64, f64),
    x_tol: f64,
) -> Result<f64> {
    if !(lo < hi) {
        return Err(Error::Bracketing { what, lo, hi });
    }
    let (mut a, mut b) = (lo, hi);
    let fa = f(a)?;
    let fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Bracketing { what, lo, hi });
    }
    let sign_a = fa.signum();
    for _ in 0..MAX_BISECTIONS {
        if b - a <= x_tol {
            break;
        }
        let mid = 0.5 * (a + b);
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Result of a relative-error threshold search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RelThreshold {
    /// First abscissa where the relative error reaches the threshold; the
    /// relative error stays at or below it on `[0, b]`.
    pub b: f64,
    /// Whether the relative error kept growing on `[b, bracket.1]`.
    pub monotone_beyond: bool,
}

/// Relative error of `approx` at `x`, or `None` where it is not formed.
pub fn relative_error(approx: &ApproxFunction, oracle: &Oracle, x: f64) -> Result<Option<f64>> {
    let a = approx.eval(x)?;
    let r = oracle.eval(approx.target(), x)?;
    if r.abs() < REL_ORACLE_FLOOR
        || (approx.target() == Target::Erf && x.abs() < ERF_REL_SKIP_BELOW)
    {
        return Ok(None);
    }
    Ok(Some((a - r).abs() / r.abs()))
}

/// Locates the first abscissa where the relative error of `approx` exceeds
/// `threshold`, scanning `[0, bracket.1]` densely and refining by
/// bisection. The crossing must fall inside `bracket`.
pub fn find_rel_threshold(
    approx: ApproxFunction,
    threshold: f64,
    bracket: (f64, f64),
) -> Result<RelThreshold> {
    find_rel_threshold_with(approx, threshold, bracket, &Oracle::default(), DEFAULT_X_TOL)
}

pub fn find_rel_threshold_with(
    approx: ApproxFunction,
    threshold: f64,
    (lo, hi): (f64, f64),
    oracle: &Oracle,
    x_tol: f64,
) -> Result<RelThreshold> {
    const WHAT: &str = "relative error minus threshold";
    if !(0.0 <= lo && lo < hi && hi.is_finite()) {
        return Err(Error::Bracketing { what: WHAT, lo, hi });
    }
    let n = (hi / THRESHOLD_GRID_STEP).ceil() as usize;
    let at = |i: usize| if i == n { hi } else { hi * i as f64 / n as f64 };
    let rel = |x: f64| relative_error(&approx, oracle, x).map(|r| r.unwrap_or(0.0));

    let mut first = None;
    for i in 0..=n {
        if rel(at(i))? > threshold {
            first = Some(i);
            break;
        }
    }
    let i = first.ok_or(Error::Bracketing { what: WHAT, lo, hi })?;
    if i == 0 || at(i) < lo {
        // Exceeded before the bracket opens.
        return Err(Error::Bracketing { what: WHAT, lo, hi });
    }

    let b = bisect(WHAT, |x| Ok(rel(x)? - threshold), (at(i - 1), at(i)), x_tol)?;

    let mut monotone_beyond = true;
    let mut last = rel(b)?;
    for j in i..=n {
        let r = rel(at(j))?;
        if r < last {
            monotone_beyond = false;
            break;
        }
        last = r;
    }
    Ok(RelThreshold { b, monotone_beyond })
}
