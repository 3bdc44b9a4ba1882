//! Cross-checks for the exact-moment machinery: the jet route and the
//! full-polynomial route must agree exactly, and the mean-convergence
//! table reproduces frozen reference strings.

use hookdist::stats::{self, MomentMethod};

#[test]
fn jet_and_polynomial_moments_agree_on_a_grid() {
    for t in [2usize, 3] {
        for n in (1..=200).step_by(13).filter(|&n| n != 2) {
            let full = stats::exact_moments(t, n, MomentMethod::FullPolynomial).unwrap();
            let jets = stats::exact_moments(t, n, MomentMethod::Jets).unwrap();
            assert_eq!(full, jets, "moment mismatch at t={t}, n={n}");
        }
    }
}

#[test]
fn table_means_match_frozen_values() {
    // exact means of the 2-hook count over self-conjugate partitions,
    // rounded half away from zero to five decimals
    let rows = stats::table1(&[100, 1000]).unwrap();
    assert_eq!(rows[0].measured, "7.17483");
    assert_eq!(rows[0].asymptotic, "7.79697");
    assert_eq!(rows[0].ratio, "0.92021");
    assert_eq!(rows[1].measured, "23.97841");
    assert_eq!(rows[1].asymptotic, "24.65618");
    assert_eq!(rows[1].ratio, "0.97251");
}

#[test]
fn figure2_is_normalized_for_larger_sizes() {
    let dist = stats::HookDistribution::from_genfun(
        &hookdist::genfun::build_genfun(2, 400).unwrap(),
        400,
    )
    .unwrap();
    let spacing = stats::support_spacing(dist.counts()) as f64;
    assert_eq!(spacing, 2.0, "even hooks pair up in self-conjugate partitions");
    let rows = stats::figure2_from(&dist).unwrap();
    let (_, variance) = dist.exact_mean_variance().unwrap();
    let sigma = variance.to_f64().sqrt();
    let riemann: f64 = rows.iter().map(|&(_, _, y)| y * spacing / sigma).sum();
    assert!((riemann - 1.0).abs() < 1e-12);
    // the peak sits near x = 0 and close to the normal density peak
    let peak = rows.iter().cloned().fold((0.0f64, 0.0f64), |acc, (_, x, y)| {
        if y > acc.1 {
            (x, y)
        } else {
            acc
        }
    });
    assert!(peak.0.abs() < 0.5, "peak at x = {}", peak.0);
    let normal_peak = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
    assert!((peak.1 - normal_peak).abs() < 0.05, "peak y = {}", peak.1);
}
