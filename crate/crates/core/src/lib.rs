//! Explicitly invertible approximations of the error function and the
//! normal distribution, accurate to four decimals.
//!
//! ```
//! use erf4::{erf_approx, erf_approx_inv};
//!
//! let y = erf_approx(0.5).unwrap();
//! assert!((y - 0.520_499_877_813_046_5).abs() < 2.27e-5);
//! assert!((erf_approx_inv(y).unwrap().x - 0.5).abs() < 1e-14);
//! ```
//!
//! The crate is organised as
//!
//! * [`approx`]: the forward formulas for erf, erfc, Φ and Q, plus
//!   Winitzki's older formula and saturating variants;
//! * [`inverse`]: their closed-form inverses;
//! * [`oracle`]: reference values from a series and a continued fraction;
//! * [`analysis`]: scans, crossover searches and the full certification.

// `!(a < b)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod approx;
mod error;
pub mod inverse;
pub mod oracle;

pub use approx::{
    clamped, erf_approx, erfc_approx, exponent, phi_approx, q_approx, winitzki_erf, winitzki_erfc,
    ApproxFunction, RationalExponentCoeffs, Target, Variant,
};
pub use error::{Error, Result};
pub use inverse::{
    erf_approx_inv, erfc_approx_inv, phi_approx_inv, q_approx_inv, winitzki_erf_inv,
    InverseResult, Polish,
};
pub use oracle::{erf_ref, erfc_ref, phi_ref, q_ref, Oracle, OracleConfig};
