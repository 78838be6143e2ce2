use std::f64::consts::{FRAC_1_SQRT_2, PI};

use erf4::approx::ERF_COEFFS;
use erf4::{
    erf_approx, erf_ref, erfc_approx, exponent, phi_approx, q_approx, winitzki_erf, OracleConfig,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn odd_and_complement_symmetries(x in -10.0f64..10.0) {
        let e = erf_approx(x).unwrap();
        prop_assert_eq!(erf_approx(-x).unwrap(), -e);
        prop_assert!((erfc_approx(x).unwrap() - (1.0 - e)).abs() <= 2.0 * f64::EPSILON);
        let p = phi_approx(x).unwrap();
        prop_assert!((p + phi_approx(-x).unwrap() - 1.0).abs() <= 2.0 * f64::EPSILON);
        prop_assert!((q_approx(x).unwrap() - (1.0 - p)).abs() <= 2.0 * f64::EPSILON);
        prop_assert_eq!(winitzki_erf(-x).unwrap(), -winitzki_erf(x).unwrap());
    }

    #[test]
    fn ranges(x in 0.0f64..1e6) {
        let e = erf_approx(x).unwrap();
        prop_assert!((0.0..=1.0).contains(&e));
        let p = phi_approx(x).unwrap();
        prop_assert!((0.5..=1.0).contains(&p));
        let c = erfc_approx(x).unwrap();
        prop_assert!((0.0..=1.0).contains(&c));
        prop_assert!(exponent(&ERF_COEFFS, x).unwrap() <= 0.0);
    }

    #[test]
    fn phi_is_rescaled_erf(x in 0.0f64..8.0) {
        let via_erf = 0.5 + 0.5 * erf_approx(x * FRAC_1_SQRT_2).unwrap();
        prop_assert!((phi_approx(x).unwrap() - via_erf).abs() <= 8.0 * f64::EPSILON);
    }
}

#[test]
fn strictly_below_one_while_representable() {
    // sqrt(1 - e^E) stays below 1 until e^E drops under half an ulp of 1.
    for i in 0..=5000 {
        let x = i as f64 * 1e-3;
        assert!(erf_approx(x).unwrap() < 1.0, "x = {x}");
        assert!(phi_approx(x).unwrap() < 1.0, "x = {x}");
    }
}

#[test]
fn monotone_on_a_million_points() {
    let n = 1_000_000;
    let (mut last_e, mut last_p) = (f64::NEG_INFINITY, f64::NEG_INFINITY);
    for i in 0..=n {
        let x = 8.0 * i as f64 / n as f64;
        let e = erf_approx(x).unwrap();
        let p = phi_approx(x).unwrap();
        assert!(e >= last_e && p >= last_p, "x = {x}");
        last_e = e;
        last_p = p;
    }
}

#[test]
fn tail_of_the_exponent_and_complement() {
    let bound = (-12.0f64).exp();
    for i in 1..=1000 {
        let x = 4.0 + 36.0 * i as f64 / 1000.0;
        assert!(exponent(&ERF_COEFFS, x).unwrap() < -12.0, "x = {x}");
        let c = erfc_approx(x).unwrap();
        assert!(c > 0.0 && c < bound, "x = {x}: {c}");
    }
    assert!((bound - 6.1442e-6).abs() < 1e-9);
}

#[test]
fn small_argument_relative_error_limit() {
    let limit = (1.2735457 * PI / 4.0).sqrt() - 1.0;
    assert!((limit - 1.202e-4).abs() < 1e-7);
    let x = 1e-4;
    let rel = erf_approx(x).unwrap() / erf_ref(x, &OracleConfig::default()).unwrap() - 1.0;
    assert!((rel - limit).abs() <= 1e-6, "{rel} vs {limit}");
}

#[test]
fn forward_examples_against_the_oracle() {
    let cfg = OracleConfig::default();
    let erf1 = erf_ref(1.0, &cfg).unwrap();
    assert!((erf_approx(1.0).unwrap() - erf1).abs() < 2.27e-5);
    assert!((erf_approx(4.0).unwrap() - 0.99999998458).abs() < 2.27e-5);
    assert!((erfc_approx(1.0).unwrap() - (1.0 - erf1)).abs() < 2.27e-5);
    assert!((erfc_approx(4.0).unwrap() - 1.5417e-8).abs() < 2.27e-5);
    assert!((phi_approx(1.959964).unwrap() - 0.975).abs() < 1.14e-5);
    assert!((winitzki_erf(1.0).unwrap() - erf1).abs() < 1.25e-4);

    let q = q_approx(3.053).unwrap();
    let q_ref = erf4::q_ref(3.053, &cfg).unwrap();
    assert!(q > 0.0 && (q / q_ref - 1.0).abs() <= 0.01);
}

#[test]
fn winitzki_within_its_bound_on_a_grid() {
    let cfg = OracleConfig::default();
    for i in 0..=60_000 {
        let x = i as f64 * 1e-4;
        let err = (winitzki_erf(x).unwrap() - erf_ref(x, &cfg).unwrap()).abs();
        assert!(err < 1.25e-4, "x = {x}: {err}");
    }
}
