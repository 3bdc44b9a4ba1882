//! Asymptotic formulas checked against exact coefficients: the
//! leading-order approximation must tighten as n grows and stay within a
//! stated band, and the Cauchy-integral quadrature must recover exact
//! values to tight relative error with sample-count stability.

use hookdist::asymptotics::{cauchy_estimate, sc_asymptotic};
use hookdist::genfun::{build_genfun, build_genfun_scalar, sc_counts};
use hookdist::series::Rational;
use num_traits::ToPrimitive;

/// Exact sc_t(n; T) as f64 via the scalar series assembly.
fn exact_scalar(t: usize, t0: &Rational, n: usize) -> f64 {
    let series = build_genfun_scalar(t, n, t0).unwrap();
    series.coeff(n).unwrap().to_f64()
}

fn rel_err(approx: f64, exact: f64) -> f64 {
    (approx / exact - 1.0).abs()
}

#[test]
fn leading_order_error_shrinks_with_n() {
    let counts = sc_counts(2000);
    let count = |n: usize| counts[n].to_f64().unwrap();
    let half = Rational::new(1.into(), 2.into());
    let three_half = Rational::new(3.into(), 2.into());

    // (t, T, exact values at n = 200 and n = 2000)
    let cases = [
        (2usize, 1.0, count(200), count(2000)),
        (3, 1.0, count(200), count(2000)),
        (
            2,
            1.5,
            exact_scalar(2, &three_half, 200),
            exact_scalar(2, &three_half, 2000),
        ),
        (
            3,
            0.5,
            exact_scalar(3, &half, 200),
            exact_scalar(3, &half, 2000),
        ),
    ];

    for (t, t0, exact_small, exact_big) in cases {
        let err_small = rel_err(sc_asymptotic(t, t0, 200), exact_small);
        let err_big = rel_err(sc_asymptotic(t, t0, 2000), exact_big);
        assert!(
            err_big < 0.25,
            "(t={t}, T={t0}): relative error {err_big} at n=2000 exceeds 0.25"
        );
        assert!(
            err_big < err_small,
            "(t={t}, T={t0}): error did not shrink ({err_small} at n=200, {err_big} at n=2000)"
        );
    }
}

#[test]
fn quadrature_recovers_exact_values() {
    let counts = sc_counts(50);
    let three_half = Rational::new(3.into(), 2.into());
    let exact_poly = build_genfun(2, 40)
        .unwrap()
        .evaluate_sc(40, &three_half)
        .unwrap()
        .to_f64();

    // (t, T, n, exact value)
    let cases = [
        (2usize, 1.0, 50usize, counts[50].to_f64().unwrap()),
        (2, 1.5, 40, exact_poly),
        (3, 1.0, 30, counts[30].to_f64().unwrap()),
    ];

    for (t, t0, n, exact) in cases {
        let got = cauchy_estimate(t, t0, n, 4096).unwrap();
        let err = rel_err(got, exact);
        assert!(
            err < 1e-6,
            "(t={t}, T={t0}, n={n}): relative error {err} at M=4096"
        );

        // doubling the sample count must leave the estimate stable
        let doubled = cauchy_estimate(t, t0, n, 8192).unwrap();
        let shift = rel_err(got, doubled);
        assert!(
            shift < 1e-9,
            "(t={t}, T={t0}, n={n}): estimate moved by {shift} when doubling M"
        );
    }
}
