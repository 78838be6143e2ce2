//! Every published bound and constant as one checkable list.

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use serde::Serialize;

use super::grid::GridSpec;
use super::scan::{scan_with, ErrorReport, ScanOptions};
use super::search::{
    find_crossover_with, find_rel_threshold_with, relative_error, RelThreshold, DEFAULT_X_TOL,
};
use super::tail::{tail_certificate_with, TailCertificate};
use crate::approx::{erf_approx, phi_approx, ApproxFunction, Target, Variant, ERF_COEFFS};
use crate::error::Result;
use crate::oracle::{erf_series, erfc_continued_fraction};

pub const ERF_ABS_BOUND: f64 = 2.27e-5;
pub const ERF_REL_BOUND: f64 = 1.21e-4;
pub const WINITZKI_ABS_BOUND: f64 = 1.25e-4;
pub const WINITZKI_REL_BOUND: f64 = 1.28e-4;
pub const PHI_ABS_BOUND: f64 = 1.14e-5;
pub const PHI_REL_BOUND: f64 = 1.78e-5;
/// Relative error of erfc and Q stays below 1% up to these abscissae.
pub const ERFC_REL_PERCENT_B: f64 = 2.1588;
pub const Q_REL_PERCENT_B: f64 = 3.053;
pub const CROSSOVER_TOL: f64 = 5e-3;
/// Minimum ratio of Winitzki's maximum error to the improved one.
pub const MIN_IMPROVEMENT: f64 = 5.0;
/// erf(4) as printed, to 11 digits.
pub const ERF_AT_4: f64 = 0.99999998458;
/// Abscissae windows that contain the four error peaks of the erf formula.
pub const PEAK_WINDOWS: [(f64, f64); 4] = [(0.2, 0.3), (0.75, 0.85), (1.35, 1.45), (2.1, 2.2)];
pub const PEAK_WINDOW_SLACK: f64 = 0.05;

/// `lim_{x→0} erf_approx(x)/erf(x) - 1 = sqrt(-n1·π/4) - 1`.
pub fn small_x_rel_limit() -> f64 {
    (-ERF_COEFFS.n1 * PI / 4.0).sqrt() - 1.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Relation {
    Below { bound: f64 },
    Above { bound: f64 },
    Near { target: f64, tol: f64 },
}

impl Relation {
    pub fn holds(&self, observed: f64) -> bool {
        match *self {
            Relation::Below { bound } => observed < bound,
            Relation::Above { bound } => observed > bound,
            Relation::Near { target, tol } => (observed - target).abs() <= tol,
        }
    }

    pub fn describe(&self) -> String {
        match *self {
            Relation::Below { bound } => format!("< {bound:e}"),
            Relation::Above { bound } => format!("> {bound}"),
            Relation::Near { target, tol } => format!("{target} ± {tol:e}"),
        }
    }
}

/// One certified statement.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    pub observed: f64,
    pub relation: Relation,
    pub pass: bool,
}

impl Claim {
    fn new(id: &'static str, statement: &'static str, observed: f64, relation: Relation) -> Self {
        Claim {
            id,
            statement,
            observed,
            relation,
            pass: relation.holds(observed),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct CertifyOptions {
    /// Points per dense scan over `[0, 8]`.
    pub grid_count: usize,
    pub scan: ScanOptions,
    /// Points of the tail certificate on `(4, 40]`.
    pub tail_points: usize,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            grid_count: 1_000_001,
            scan: ScanOptions::parallel(),
            tail_points: 1000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certification {
    pub claims: Vec<Claim>,
    pub reports: Vec<ErrorReport>,
    pub tail: TailCertificate,
    pub erfc_threshold: RelThreshold,
    pub q_threshold: RelThreshold,
}

impl Certification {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| !c.pass)
    }
}

/// Runs every scan, crossover search, threshold search and tail check.
pub fn certify(opts: &CertifyOptions) -> Result<Certification> {
    let oracle = opts.scan.oracle;
    let grid = GridSpec::uniform(0.0, 8.0, opts.grid_count)?;
    let erf = ApproxFunction::improved(Target::Erf);
    let winitzki = ApproxFunction::new(Target::Erf, Variant::Winitzki)?;
    let erfc = ApproxFunction::improved(Target::Erfc);
    let phi = ApproxFunction::improved(Target::Phi);
    let q = ApproxFunction::improved(Target::Q);

    let erf_r = scan_with(erf, grid, &opts.scan)?;
    let win_r = scan_with(winitzki, grid, &opts.scan)?;
    let erfc_r = scan_with(erfc, grid, &opts.scan)?;
    let phi_r = scan_with(phi, grid, &opts.scan)?;
    let q_r = scan_with(q, grid, &opts.scan)?;

    let tail = tail_certificate_with(4.0 + 36.0 / opts.tail_points as f64, 40.0, opts.tail_points, &oracle)?;
    let erf_cross = find_crossover_with(erf, 1.0, (3.0, 5.0), &oracle, DEFAULT_X_TOL)?;
    let phi_cross = find_crossover_with(phi, 1.0, (5.0, 7.0), &oracle, DEFAULT_X_TOL)?;
    let erfc_threshold = find_rel_threshold_with(erfc, 0.01, (1.5, 3.0), &oracle, DEFAULT_X_TOL)?;
    let q_threshold = find_rel_threshold_with(q, 0.01, (2.5, 4.0), &oracle, DEFAULT_X_TOL)?;

    let limit_rel = relative_error(&erf, &oracle, 1e-4)?.unwrap_or(f64::NAN);

    let stray_peaks = erf_r
        .local_maxima
        .iter()
        .filter(|p| p.abs_err >= 0.5 * erf_r.max_abs)
        .filter(|p| {
            !PEAK_WINDOWS
                .iter()
                .any(|&(a, b)| p.x >= a - PEAK_WINDOW_SLACK && p.x <= b + PEAK_WINDOW_SLACK)
        })
        .count();

    let mut agreement: f64 = 0.0;
    for i in 0..100 {
        let x = 1.5 + i as f64 / 99.0;
        let series = erf_series(x, oracle.config())?;
        let cf = 1.0 - erfc_continued_fraction(x, oracle.config())?;
        agreement = agreement.max((series - cf).abs());
    }

    let mut identity: f64 = 0.0;
    for x in GridSpec::uniform(0.0, 8.0, 10_000)?.points() {
        let via_erf = 0.5 + 0.5 * erf_approx(x * FRAC_1_SQRT_2)?;
        identity = identity.max((phi_approx(x)? - via_erf).abs());
    }

    let claims = vec![
        Claim::new("A.abs", "max |erf_approx - erf| on [0, 8]", erf_r.max_abs,
            Relation::Below { bound: ERF_ABS_BOUND }),
        Claim::new("A.rel", "max relative error of erf_approx on [1e-6, 8]", erf_r.max_rel,
            Relation::Below { bound: ERF_REL_BOUND }),
        Claim::new("A.rel.limit", "relative error of erf_approx at x = 1e-4 vs its x -> 0 limit",
            limit_rel, Relation::Near { target: small_x_rel_limit(), tol: 1e-6 }),
        Claim::new("A.tail", "tail inequalities violated on (4, 40]", tail.violations as f64,
            Relation::Below { bound: 1.0 }),
        Claim::new("A.crossover", "x where erf ~ 1 starts to beat erf_approx", erf_cross,
            Relation::Near { target: crate::approx::ERF_CROSSOVER, tol: CROSSOVER_TOL }),
        Claim::new("A.peaks", "error peaks (>= half the maximum) outside the zoom windows",
            stray_peaks as f64, Relation::Below { bound: 1.0 }),
        Claim::new("B.abs", "max |erfc_approx - erfc| on [0, 8]", erfc_r.max_abs,
            Relation::Below { bound: ERF_ABS_BOUND }),
        Claim::new("B.rel.threshold", "first x where erfc relative error exceeds 1%",
            erfc_threshold.b, Relation::Above { bound: ERFC_REL_PERCENT_B }),
        Claim::new("C.abs", "max |phi_approx - phi| on [0, 8]", phi_r.max_abs,
            Relation::Below { bound: PHI_ABS_BOUND }),
        Claim::new("C.rel", "max relative error of phi_approx on [0, 8]", phi_r.max_rel,
            Relation::Below { bound: PHI_REL_BOUND }),
        Claim::new("C.crossover", "x where phi ~ 1 starts to beat phi_approx", phi_cross,
            Relation::Near { target: crate::approx::PHI_CROSSOVER, tol: CROSSOVER_TOL }),
        Claim::new("D.abs", "max |q_approx - Q| on [0, 8]", q_r.max_abs,
            Relation::Below { bound: PHI_ABS_BOUND }),
        Claim::new("D.rel.threshold", "first x where Q relative error exceeds 1%",
            q_threshold.b, Relation::Above { bound: Q_REL_PERCENT_B }),
        Claim::new("winitzki.abs", "max |winitzki_erf - erf| on [0, 8]", win_r.max_abs,
            Relation::Below { bound: WINITZKI_ABS_BOUND }),
        Claim::new("winitzki.rel", "max relative error of winitzki_erf on [1e-6, 8]",
            win_r.max_rel, Relation::Below { bound: WINITZKI_REL_BOUND }),
        Claim::new("improvement", "Winitzki max error over improved max error",
            win_r.max_abs / erf_r.max_abs, Relation::Above { bound: MIN_IMPROVEMENT }),
        Claim::new("oracle.erf4", "erf_ref(4) against the printed 0.99999998458",
            oracle.erf(4.0)?, Relation::Near { target: ERF_AT_4, tol: 5e-12 }),
        Claim::new("oracle.agreement", "max |series - continued fraction| on [1.5, 2.5]",
            agreement, Relation::Below { bound: 1e-13 }),
        Claim::new("phi.erf.identity", "max |phi_approx(x) - (1 + erf_approx(x/sqrt 2))/2|",
            identity, Relation::Below { bound: 8.0 * f64::EPSILON }),
    ];

    Ok(Certification {
        claims,
        reports: vec![erf_r, win_r, erfc_r, phi_r, q_r],
        tail,
        erfc_threshold,
        q_threshold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations() {
        assert!(Relation::Below { bound: 1.0 }.holds(0.5));
        assert!(!Relation::Below { bound: 1.0 }.holds(1.0));
        assert!(Relation::Above { bound: 1.0 }.holds(1.5));
        assert!(Relation::Near { target: 2.0, tol: 0.1 }.holds(2.05));
        assert!(!Relation::Near { target: 2.0, tol: 0.1 }.holds(f64::NAN));
    }

    #[test]
    fn small_x_limit_value() {
        assert!((small_x_rel_limit() - 1.202e-4).abs() < 1e-7);
    }

    #[test]
    fn coarse_certification_passes() {
        let opts = CertifyOptions {
            grid_count: 1000,
            tail_points: 100,
            ..CertifyOptions::default()
        };
        let cert = certify(&opts).unwrap();
        for c in &cert.claims {
            assert!(c.pass, "{} failed: {} {}", c.id, c.observed, c.relation.describe());
        }
    }
}
