//! High-precision reference values of erf, erfc, Φ and Q.
//!
//! Two independent methods cover the real line:
//!
//! * the Maclaurin series of erf, summed with Neumaier compensation, for
//!   `|x| ≤ switch_point`;
//! * the continued fraction of erfc, evaluated with the modified Lentz
//!   algorithm, beyond it.
//!
//! Both converge on an overlap around the switch point, so the oracle can
//! check itself there. Complements (erfc, Q) are computed directly in the
//! right tail rather than as `1 - erf`, keeping full relative precision.

use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};

const FRAC_2_SQRT_PI: f64 = std::f64::consts::FRAC_2_SQRT_PI;
// 1/√π
const FRAC_1_SQRT_PI: f64 = 0.5 * FRAC_2_SQRT_PI;
const LENTZ_TINY: f64 = 1e-300;

/// Truncation and handover settings for the oracle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleConfig {
    /// Truncation tolerance. The series stops once a term is below
    /// `abs_tol` times the partial sum; the continued fraction once a Lentz
    /// update factor is within `abs_tol` of one.
    pub abs_tol: f64,
    pub max_terms: usize,
    /// Series for `|x| ≤ switch_point`, continued fraction beyond.
    pub switch_point: f64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            abs_tol: 1e-16,
            max_terms: 500,
            switch_point: 2.0,
        }
    }
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol > 0.0) {
            return Err(Error::InvalidConfig("abs_tol must be > 0".into()));
        }
        if self.max_terms < 50 {
            return Err(Error::InvalidConfig("max_terms must be >= 50".into()));
        }
        if !(1.0..=4.0).contains(&self.switch_point) {
            return Err(Error::InvalidConfig(
                "switch_point must lie in [1, 4]".into(),
            ));
        }
        Ok(())
    }
}

/// Neumaier's variant of compensated (Kahan) summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// erf by its Maclaurin series, `(2/√π) Σ (-1)ⁿ x^{2n+1} / (n!(2n+1))`.
pub fn erf_series(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("erf_series", x)?;
    if x == 0.0 {
        return Ok(x);
    }
    let x2 = x * x;
    let mut acc = CompensatedSum::new();
    // power = (-1)ⁿ x^{2n+1} / n!
    let mut power = x;
    for n in 0..cfg.max_terms {
        let term = power / (2 * n + 1) as f64;
        acc.add(term);
        if term.abs() <= cfg.abs_tol * acc.total().abs() {
            return Ok(FRAC_2_SQRT_PI * acc.total());
        }
        power *= -x2 / (n + 1) as f64;
    }
    Err(Error::NoConvergence {
        method: "erf Maclaurin series",
        x,
        terms: cfg.max_terms,
    })
}

/// erfc for `x > 0` by the continued fraction
/// `erfc(x) = e^{-x²}/√π · 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + …))))`,
/// evaluated with the modified Lentz algorithm.
pub fn erfc_continued_fraction(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("erfc_continued_fraction", x)?;
    if x <= 0.0 {
        return Err(Error::Domain {
            op: "erfc_continued_fraction",
            value: x,
            expected: "x > 0",
        });
    }
    let mut f = x;
    let mut c = f;
    let mut d = 0.0;
    for n in 1..=cfg.max_terms {
        let a = 0.5 * n as f64;
        d = x + a * d;
        if d == 0.0 {
            d = LENTZ_TINY;
        }
        c = x + a / c;
        if c == 0.0 {
            c = LENTZ_TINY;
        }
        d = d.recip();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).abs() <= cfg.abs_tol {
            return Ok((-x * x).exp() * FRAC_1_SQRT_PI / f);
        }
    }
    Err(Error::NoConvergence {
        method: "erfc continued fraction",
        x,
        terms: cfg.max_terms,
    })
}

/// Reference erf, accurate to about `1e-13` absolute or better.
pub fn erf_ref(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("erf_ref", x)?;
    let ax = x.abs();
    let v = if ax <= cfg.switch_point {
        erf_series(ax, cfg)?
    } else {
        1.0 - erfc_continued_fraction(ax, cfg)?
    };
    Ok(v.copysign(x))
}

/// Reference erfc, with full relative precision for large positive `x`.
pub fn erfc_ref(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("erfc_ref", x)?;
    if x > cfg.switch_point {
        erfc_continued_fraction(x, cfg)
    } else if x >= 0.0 {
        Ok(1.0 - erf_series(x, cfg)?)
    } else {
        Ok(1.0 + erf_ref(-x, cfg)?)
    }
}

/// Reference standard normal CDF, `½·erfc(-x/√2)`.
pub fn phi_ref(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("phi_ref", x)?;
    Ok(0.5 * erfc_ref(-x * std::f64::consts::FRAC_1_SQRT_2, cfg)?)
}

/// Reference Gaussian tail, `½·erfc(x/√2)`.
pub fn q_ref(x: f64, cfg: &OracleConfig) -> Result<f64> {
    ensure_finite("q_ref", x)?;
    Ok(0.5 * erfc_ref(x * std::f64::consts::FRAC_1_SQRT_2, cfg)?)
}

/// A validated oracle configuration with per-function convenience methods.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize)]
pub struct Oracle {
    cfg: OracleConfig,
}

impl Oracle {
    pub fn new(cfg: OracleConfig) -> Result<Self> {
        cfg.validate()?;
        Ok(Oracle { cfg })
    }

    pub fn config(&self) -> &OracleConfig {
        &self.cfg
    }

    pub fn erf(&self, x: f64) -> Result<f64> {
        erf_ref(x, &self.cfg)
    }

    pub fn erfc(&self, x: f64) -> Result<f64> {
        erfc_ref(x, &self.cfg)
    }

    pub fn phi(&self, x: f64) -> Result<f64> {
        phi_ref(x, &self.cfg)
    }

    pub fn q(&self, x: f64) -> Result<f64> {
        q_ref(x, &self.cfg)
    }

    pub fn eval(&self, target: crate::approx::Target, x: f64) -> Result<f64> {
        use crate::approx::Target;
        match target {
            Target::Erf => self.erf(x),
            Target::Erfc => self.erfc(x),
            Target::Phi => self.phi(x),
            Target::Q => self.q(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> OracleConfig {
        OracleConfig::default()
    }

    #[test]
    fn known_values() {
        assert_eq!(erf_ref(0.0, &cfg()).unwrap(), 0.0);
        assert!((erf_ref(1.0, &cfg()).unwrap() - 0.842_700_792_949_714_9).abs() < 1e-13);
        let e4 = erf_ref(4.0, &cfg()).unwrap();
        assert_eq!(format!("{e4:.11}"), "0.99999998458");
        let c4 = erfc_ref(4.0, &cfg()).unwrap();
        assert_eq!(format!("{c4:.3e}"), "1.542e-8");
        assert_eq!(phi_ref(0.0, &cfg()).unwrap(), 0.5);
        assert_eq!(q_ref(0.0, &cfg()).unwrap(), 0.5);
    }

    #[test]
    fn odd_and_complement() {
        for i in -40..=40 {
            let x = i as f64 * 0.137;
            let e = erf_ref(x, &cfg()).unwrap();
            assert_eq!(erf_ref(-x, &cfg()).unwrap(), -e);
            let c = erfc_ref(x, &cfg()).unwrap();
            assert!((e + c - 1.0).abs() <= 2.0 * f64::EPSILON, "x = {x}");
            let p = phi_ref(x, &cfg()).unwrap();
            let q = q_ref(x, &cfg()).unwrap();
            assert!((p + q - 1.0).abs() <= 2.0 * f64::EPSILON, "x = {x}");
        }
    }

    #[test]
    fn compensated_sum_recovers_lost_bits() {
        let mut acc = CompensatedSum::new();
        acc.add(1.0);
        for _ in 0..10 {
            acc.add(1e-16);
        }
        acc.add(-1.0);
        assert!((acc.total() - 1e-15).abs() < 1e-30);
    }

    #[test]
    fn config_validation() {
        assert!(OracleConfig::default().validate().is_ok());
        let bad = OracleConfig {
            abs_tol: 0.0,
            ..OracleConfig::default()
        };
        assert!(Oracle::new(bad).is_err());
        let bad = OracleConfig {
            max_terms: 10,
            ..OracleConfig::default()
        };
        assert!(bad.validate().is_err());
        let bad = OracleConfig {
            switch_point: 5.0,
            ..OracleConfig::default()
        };
        assert!(bad.validate().is_err());
    }

    #[test]
    fn non_convergence_is_surfaced() {
        let starved = OracleConfig {
            max_terms: 50,
            switch_point: 1.0,
            ..OracleConfig::default()
        };
        // The continued fraction needs ~190 terms at x = 1.01.
        assert!(matches!(
            erf_ref(1.01, &starved),
            Err(Error::NoConvergence { .. })
        ));
        assert!(erfc_continued_fraction(-1.0, &cfg()).is_err());
        assert!(erf_ref(f64::NAN, &cfg()).is_err());
    }

    #[test]
    fn switch_point_does_not_move_values() {
        let wide = OracleConfig {
            switch_point: 3.0,
            ..OracleConfig::default()
        };
        for i in 0..=15 {
            let x = 1.0 + i as f64 * 0.1;
            let a = erf_ref(x, &cfg()).unwrap();
            let b = erf_ref(x, &wide).unwrap();
            assert!((a - b).abs() < 1e-14, "x = {x}");
        }
    }
}
