use serde::Serialize;

use super::grid::GridSpec;
use crate::approx::{erfc_approx, ERF_COEFFS};
use crate::error::{Error, Result};
use crate::oracle::Oracle;

/// Level the erf exponent must stay below for `x > 4`.
pub const TAIL_EXPONENT_LEVEL: f64 = -12.0;

/// Bound on `|erf_approx - erf|` beyond `x = 4`.
pub const TAIL_ABS_BOUND: f64 = 1e-5;

/// Worst observations of the tail checks; margins are positive on success.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TailCertificate {
    pub pass: bool,
    pub x_lo: f64,
    pub x_hi: f64,
    pub points: usize,
    /// Largest exponent seen, and `-12 - max_exponent`.
    pub max_exponent: f64,
    pub exponent_margin: f64,
    /// Extremes of `1 - erf_approx(x)`, and `e^-12 - max_complement`.
    pub min_complement: f64,
    pub max_complement: f64,
    pub complement_margin: f64,
    /// Largest `|erf_approx - erf|`, and `1e-5 - max_abs_err`.
    pub max_abs_err: f64,
    pub abs_err_margin: f64,
    pub violations: usize,
}

/// Samples `n` points on `[x_lo, x_hi]` and checks the tail inequalities
/// `E(x) < -12`, `0 < 1 - erf_approx(x) < e^-12` and
/// `|erf_approx(x) - erf(x)| < 1e-5`.
///
/// `1 - erf_approx` is evaluated as `erfc_approx`, and the erf error as the
/// erfc error, so neither collapses to zero when erf rounds to one.
pub fn tail_certificate(x_lo: f64, x_hi: f64, n: usize) -> Result<TailCertificate> {
    tail_certificate_with(x_lo, x_hi, n, &Oracle::default())
}

pub fn tail_certificate_with(
    x_lo: f64,
    x_hi: f64,
    n: usize,
    oracle: &Oracle,
) -> Result<TailCertificate> {
    if !(x_lo >= 4.0) {
        return Err(Error::Domain {
            op: "tail_certificate",
            value: x_lo,
            expected: "x_lo >= 4",
        });
    }
    let grid = GridSpec::uniform(x_lo, x_hi, n)?;
    let bound = TAIL_EXPONENT_LEVEL.exp();

    let mut cert = TailCertificate {
        pass: true,
        x_lo,
        x_hi,
        points: n,
        max_exponent: f64::NEG_INFINITY,
        exponent_margin: 0.0,
        min_complement: f64::INFINITY,
        max_complement: 0.0,
        complement_margin: 0.0,
        max_abs_err: 0.0,
        abs_err_margin: 0.0,
        violations: 0,
    };
    for x in grid.points() {
        let e = ERF_COEFFS.eval_u(x * x);
        let complement = erfc_approx(x)?;
        let err = (complement - oracle.erfc(x)?).abs();

        let ok = e < TAIL_EXPONENT_LEVEL
            && complement > 0.0
            && complement < bound
            && err < TAIL_ABS_BOUND;
        if !ok {
            cert.violations += 1;
        }
        cert.max_exponent = cert.max_exponent.max(e);
        cert.min_complement = cert.min_complement.min(complement);
        cert.max_complement = cert.max_complement.max(complement);
        cert.max_abs_err = cert.max_abs_err.max(err);
    }
    cert.exponent_margin = TAIL_EXPONENT_LEVEL - cert.max_exponent;
    cert.complement_margin = bound - cert.max_complement;
    cert.abs_err_margin = TAIL_ABS_BOUND - cert.max_abs_err;
    cert.pass = cert.violations == 0;
    Ok(cert)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_start_below_four() {
        assert!(tail_certificate(3.9, 10.0, 10).is_err());
        assert!(tail_certificate(f64::NAN, 10.0, 10).is_err());
    }

    #[test]
    fn far_tail_stays_positive() {
        // erf_approx(x) itself rounds to 1 here; its complement must not.
        let c = tail_certificate(20.0, 40.0, 50).unwrap();
        assert!(c.pass);
        assert!(c.min_complement > 0.0);
    }
}
