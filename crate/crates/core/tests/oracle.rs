use std::f64::consts::PI;

use erf4::oracle::{erf_series, erfc_continued_fraction, erfc_ref, q_ref, OracleConfig};
use erf4::{erf_ref, phi_ref};

#[test]
fn series_and_continued_fraction_overlap() {
    let cfg = OracleConfig::default();
    for i in 0..100 {
        let x = 1.5 + i as f64 / 99.0;
        let s = erf_series(x, &cfg).unwrap();
        let c = 1.0 - erfc_continued_fraction(x, &cfg).unwrap();
        assert!((s - c).abs() <= 1e-13, "x = {x}: {s} vs {c}");
    }
}

#[test]
fn complement_identity_where_both_paths_are_direct() {
    let cfg = OracleConfig::default();
    for i in 0..=200 {
        let x = i as f64 * 0.04;
        let sum = erf_ref(x, &cfg).unwrap() + erfc_ref(x, &cfg).unwrap();
        assert!((sum - 1.0).abs() <= f64::EPSILON, "x = {x}");
    }
}

#[test]
fn tail_matches_the_asymptotic_expansion() {
    // erfc(x)·e^{x²}·x·√π = 1 - 1/(2x²) + 3/(4x⁴) - 15/(8x⁶) + …
    let cfg = OracleConfig::default();
    for &x in &[10.0, 20.0, 25.0] {
        let scaled = erfc_ref(x, &cfg).unwrap() * (x * x).exp() * x * PI.sqrt();
        let x2 = x * x;
        let series = 1.0 - 0.5 / x2 + 0.75 / (x2 * x2);
        assert!((scaled - series).abs() < 2e-6, "x = {x}: {scaled}");
        // The leading correction is 1/(2x²) = 1.25e-3 at x = 20.
        assert!((scaled - 1.0).abs() <= 0.5 / x2);
    }
}

#[test]
fn q_keeps_relative_accuracy_in_the_tail() {
    let cfg = OracleConfig::default();
    // Q(3.053) to 12 digits, from mpmath at 50 digits.
    let q = q_ref(3.053, &cfg).unwrap();
    assert!((q / 1.1328296916222611e-3 - 1.0).abs() < 1e-12, "{q:e}");
    // Far out the complement is still resolved.
    let q10 = q_ref(10.0, &cfg).unwrap();
    assert!((q10 / 7.619_853_024_160_526e-24 - 1.0).abs() < 1e-12);
    assert_eq!(phi_ref(0.0, &cfg).unwrap(), 0.5);
}

#[test]
fn matches_platform_erf_where_available() {
    let cfg = OracleConfig::default();
    for i in -600..=600 {
        let x = i as f64 * 0.01;
        assert!((erf_ref(x, &cfg).unwrap() - libm::erf(x)).abs() < 1e-15, "x = {x}");
    }
}
