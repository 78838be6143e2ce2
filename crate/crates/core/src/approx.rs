//! Forward approximations of erf, erfc, the normal CDF Φ and the Q-function.
//!
//! Every approximation here has the shape
//!
//! ```text
//! sqrt(1 - exp(E(x))),    E(x) = (n1·x² + n2·x⁴) / (d0 + d1·x² + d2·x⁴)
//! ```
//!
//! with a different [`RationalExponentCoeffs`] per target. Because `E` is a
//! ratio of quadratics in `u = x²`, the formulas can be inverted in closed
//! form (see [`crate::inverse`]).
//!
//! The improved coefficient sets keep the absolute error of erf below
//! `2.27e-5` and of Φ below `1.14e-5` for all `x ≥ 0`. The Winitzki set is
//! the older `a = 0.147` formula, kept as a baseline.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{ensure_finite, Error, Result};

/// Coefficients of the rational exponent
/// `E(u) = (n1·u + n2·u²) / (d0 + d1·u + d2·u²)` with `u = x²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RationalExponentCoeffs {
    pub n1: f64,
    pub n2: f64,
    pub d0: f64,
    pub d1: f64,
    pub d2: f64,
}

/// Exponent coefficients of the improved erf approximation.
pub const ERF_COEFFS: RationalExponentCoeffs = RationalExponentCoeffs {
    n1: -1.2735457,
    n2: -0.1487936,
    d0: 1.0,
    d1: 0.1480931,
    d2: 0.0005160,
};

/// Exponent coefficients of the improved Φ approximation.
///
/// This is [`ERF_COEFFS`] after substituting `x/√2` and rescaling numerator and
/// denominator by 2, so `Φ(x) ≈ ½ + ½·erf_approx(x/√2)` holds exactly in real
/// arithmetic.
pub const PHI_COEFFS: RationalExponentCoeffs = RationalExponentCoeffs {
    n1: -1.2735457,
    n2: -0.0743968,
    d0: 2.0,
    d1: 0.1480931,
    d2: 0.0002580,
};

/// Winitzki's constant `a` in `E(x) = -x²(4/π + a·x²)/(1 + a·x²)`.
pub const WINITZKI_A: f64 = 0.147;

/// Winitzki's erf exponent written in the common rational form.
pub const WINITZKI_COEFFS: RationalExponentCoeffs = RationalExponentCoeffs {
    n1: -2.0 * std::f64::consts::FRAC_2_PI,
    n2: -WINITZKI_A,
    d0: 1.0,
    d1: WINITZKI_A,
    d2: 0.0,
};

/// Abscissa beyond which `erf(x) ≈ 1` (and `erfc(x) ≈ 0`) beats the formula.
pub const ERF_CROSSOVER: f64 = 4.125;

/// Abscissa beyond which `Φ(x) ≈ 1` (and `Q(x) ≈ 0`) beats the formula.
pub const PHI_CROSSOVER: f64 = 5.834;

/// Above this value of `x²` the forward functions return their saturation
/// value without evaluating the exponent.
pub const SATURATION_U: f64 = 1e150;

impl RationalExponentCoeffs {
    /// Checks that the denominator is positive for every `u ≥ 0` and that the
    /// exponent is non-positive, which every built-in set satisfies.
    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.n1, self.n2, self.d0, self.d1, self.d2]
            .iter()
            .all(|c| c.is_finite());
        if !all_finite {
            return Err(Error::InvalidConfig("non-finite exponent coefficient".into()));
        }
        if self.d0 <= 0.0 || self.d1 < 0.0 || self.d2 < 0.0 {
            return Err(Error::InvalidConfig(
                "denominator must be positive for u >= 0 (need d0 > 0, d1 >= 0, d2 >= 0)".into(),
            ));
        }
        if self.n1 >= 0.0 || self.n2 > 0.0 {
            return Err(Error::InvalidConfig(
                "exponent must be non-positive (need n1 < 0, n2 <= 0)".into(),
            ));
        }
        Ok(())
    }

    /// Evaluates `E` at `u = x²` without argument checks.
    #[inline]
    pub fn eval_u(&self, u: f64) -> f64 {
        if u > SATURATION_U {
            // Divide through by u² so the products cannot overflow.
            let w = u.recip();
            return (self.n1 * w + self.n2) / ((self.d0 * w + self.d1) * w + self.d2);
        }
        let num = (self.n2 * u + self.n1) * u;
        let den = (self.d2 * u + self.d1) * u + self.d0;
        num / den
    }

    /// `dE/du` at `u`.
    pub fn derivative_u(&self, u: f64) -> f64 {
        let num = (self.n2 * u + self.n1) * u;
        let den = (self.d2 * u + self.d1) * u + self.d0;
        let dnum = 2.0 * self.n2 * u + self.n1;
        let dden = 2.0 * self.d2 * u + self.d1;
        (dnum * den - num * dden) / (den * den)
    }

    /// The limit of `E` as `x → ∞`, or `-∞` when the exponent is unbounded.
    pub fn limit(&self) -> f64 {
        if self.d2 > 0.0 {
            self.n2 / self.d2
        } else {
            f64::NEG_INFINITY
        }
    }
}

/// Evaluates the rational exponent `E(x)` for the given coefficient set.
///
/// The result is even in `x`, zero at the origin and non-positive for the
/// built-in sets.
///
/// ```
/// use erf4::approx::{exponent, ERF_COEFFS};
///
/// assert_eq!(exponent(&ERF_COEFFS, 0.0).unwrap(), 0.0);
/// assert!(exponent(&ERF_COEFFS, 4.5).unwrap() < -12.0);
/// ```
pub fn exponent(coeffs: &RationalExponentCoeffs, x: f64) -> Result<f64> {
    ensure_finite("exponent", x)?;
    Ok(coeffs.eval_u(x * x))
}

/// `sqrt(1 - e^E)` for `E ≤ 0`, i.e. the common erf-shaped core.
#[inline]
fn rise(e: f64) -> f64 {
    (-e.exp_m1()).sqrt()
}

/// `1 - sqrt(1 - e^E)` evaluated without cancellation.
#[inline]
fn fall(e: f64) -> f64 {
    e.exp() / (1.0 + rise(e))
}

/// Improved approximation of `erf(x)`, odd in `x`.
///
/// Absolute error below `2.27e-5` and relative error below `1.21e-4`.
///
/// ```
/// let y = erf4::erf_approx(1.0).unwrap();
/// assert!((y - 0.842_700_792_949_715).abs() < 2.27e-5);
/// ```
pub fn erf_approx(x: f64) -> Result<f64> {
    ensure_finite("erf_approx", x)?;
    Ok(erf_shape(&ERF_COEFFS, x))
}

/// Improved approximation of `erfc(x) = 1 - erf(x)`.
///
/// For `x ≥ 0` the complement is formed as `e^E / (1 + sqrt(1 - e^E))`, which
/// equals `1 - erf_approx(x)` but keeps full relative precision in the tail.
pub fn erfc_approx(x: f64) -> Result<f64> {
    ensure_finite("erfc_approx", x)?;
    Ok(erfc_shape(&ERF_COEFFS, x))
}

/// Improved approximation of the standard normal CDF `Φ(x)`.
///
/// Absolute error below `1.14e-5` and relative error below `1.78e-5`.
pub fn phi_approx(x: f64) -> Result<f64> {
    ensure_finite("phi_approx", x)?;
    if x < 0.0 {
        return Ok(upper_half(-x));
    }
    Ok(lower_half(x))
}

/// Improved approximation of the Gaussian tail `Q(x) = 1 - Φ(x)`.
pub fn q_approx(x: f64) -> Result<f64> {
    ensure_finite("q_approx", x)?;
    if x < 0.0 {
        return Ok(lower_half(-x));
    }
    Ok(upper_half(x))
}

/// Winitzki's erf approximation (`a = 0.147`), odd in `x`.
///
/// Absolute error below `1.25e-4`.
pub fn winitzki_erf(x: f64) -> Result<f64> {
    ensure_finite("winitzki_erf", x)?;
    Ok(erf_shape(&WINITZKI_COEFFS, x))
}

/// `1 - winitzki_erf(x)`.
pub fn winitzki_erfc(x: f64) -> Result<f64> {
    ensure_finite("winitzki_erfc", x)?;
    Ok(erfc_shape(&WINITZKI_COEFFS, x))
}

/// The improved approximation switched to its saturation value past the
/// crossover (`4.125` for erf/erfc, `5.834` for Φ/Q), mirrored for negative
/// arguments. The switch is a jump of at most the absolute error bound.
pub fn clamped(target: Target, x: f64) -> Result<f64> {
    ensure_finite("clamped", x)?;
    let crossover = target.crossover();
    let ax = x.abs();
    if ax < crossover {
        return ApproxFunction::improved(target).eval(x);
    }
    let positive = x > 0.0;
    Ok(match (target, positive) {
        (Target::Erf, true) => 1.0,
        (Target::Erf, false) => -1.0,
        (Target::Erfc, true) => 0.0,
        (Target::Erfc, false) => 2.0,
        (Target::Phi, true) | (Target::Q, false) => 1.0,
        (Target::Phi, false) | (Target::Q, true) => 0.0,
    })
}

fn erf_shape(coeffs: &RationalExponentCoeffs, x: f64) -> f64 {
    let ax = x.abs();
    let u = ax * ax;
    let v = if u > SATURATION_U {
        1.0
    } else {
        rise(coeffs.eval_u(u))
    };
    v.copysign(x)
}

fn erfc_shape(coeffs: &RationalExponentCoeffs, x: f64) -> f64 {
    if x < 0.0 {
        return 1.0 + erf_shape(coeffs, -x);
    }
    let u = x * x;
    if u > SATURATION_U {
        return 0.0;
    }
    fall(coeffs.eval_u(u))
}

// ½ + ½·sqrt(1 - e^E) for x >= 0.
fn lower_half(x: f64) -> f64 {
    let u = x * x;
    if u > SATURATION_U {
        return 1.0;
    }
    0.5 + 0.5 * rise(PHI_COEFFS.eval_u(u))
}

// ½ - ½·sqrt(1 - e^E) for x >= 0, without cancellation.
fn upper_half(x: f64) -> f64 {
    let u = x * x;
    if u > SATURATION_U {
        return 0.0;
    }
    0.5 * fall(PHI_COEFFS.eval_u(u))
}

/// Which function an approximation stands in for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Erf,
    Erfc,
    Phi,
    Q,
}

/// Which formula family to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Improved,
    Winitzki,
    Clamped,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Erf, Target::Erfc, Target::Phi, Target::Q];

    pub fn name(self) -> &'static str {
        match self {
            Target::Erf => "erf",
            Target::Erfc => "erfc",
            Target::Phi => "phi",
            Target::Q => "q",
        }
    }

    /// Limit of the target as `x → +∞`.
    pub fn saturation(self) -> f64 {
        match self {
            Target::Erf | Target::Phi => 1.0,
            Target::Erfc | Target::Q => 0.0,
        }
    }

    /// Crossover abscissa used by the clamped variant.
    pub fn crossover(self) -> f64 {
        match self {
            Target::Erf | Target::Erfc => ERF_CROSSOVER,
            Target::Phi | Target::Q => PHI_CROSSOVER,
        }
    }

    /// erf ↔ erfc, Φ ↔ Q.
    pub fn complement(self) -> Target {
        match self {
            Target::Erf => Target::Erfc,
            Target::Erfc => Target::Erf,
            Target::Phi => Target::Q,
            Target::Q => Target::Phi,
        }
    }

    /// True for the complement-type targets (erfc, Q), whose value decays to
    /// zero in the right tail.
    pub fn is_complement(self) -> bool {
        matches!(self, Target::Erfc | Target::Q)
    }
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Improved => "improved",
            Variant::Winitzki => "winitzki",
            Variant::Clamped => "clamped",
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "erf" => Ok(Target::Erf),
            "erfc" => Ok(Target::Erfc),
            "phi" => Ok(Target::Phi),
            "q" => Ok(Target::Q),
            _ => Err(Error::InvalidConfig(format!(
                "unknown function {s:?} (expected erf, erfc, phi or q)"
            ))),
        }
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "improved" => Ok(Variant::Improved),
            "winitzki" => Ok(Variant::Winitzki),
            "clamped" => Ok(Variant::Clamped),
            _ => Err(Error::InvalidConfig(format!(
                "unknown variant {s:?} (expected improved, winitzki or clamped)"
            ))),
        }
    }
}

/// A target paired with a formula variant.
///
/// The Winitzki variant exists only for erf and erfc.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ApproxFunction {
    target: Target,
    variant: Variant,
}

impl ApproxFunction {
    pub fn new(target: Target, variant: Variant) -> Result<Self> {
        if variant == Variant::Winitzki && !matches!(target, Target::Erf | Target::Erfc) {
            return Err(Error::Unsupported {
                target: target.name(),
                variant: variant.name(),
            });
        }
        Ok(ApproxFunction { target, variant })
    }

    pub const fn improved(target: Target) -> Self {
        ApproxFunction {
            target,
            variant: Variant::Improved,
        }
    }

    pub fn target(&self) -> Target {
        self.target
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    /// The same variant of the complementary target; `f(x) + g(x) = 1`.
    pub fn complement(&self) -> Self {
        ApproxFunction {
            target: self.target.complement(),
            variant: self.variant,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        match (self.variant, self.target) {
            (Variant::Improved, Target::Erf) => erf_approx(x),
            (Variant::Improved, Target::Erfc) => erfc_approx(x),
            (Variant::Improved, Target::Phi) => phi_approx(x),
            (Variant::Improved, Target::Q) => q_approx(x),
            (Variant::Winitzki, Target::Erf) => winitzki_erf(x),
            (Variant::Winitzki, Target::Erfc) => winitzki_erfc(x),
            (Variant::Winitzki, _) => unreachable!("rejected by ApproxFunction::new"),
            (Variant::Clamped, target) => clamped(target, x),
        }
    }
}

impl fmt::Display for ApproxFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.target, self.variant)
    }
}
