//! Acceptance gate: one test per acceptance criterion, each printing a
//! single `criterion N: PASS/FAIL` line (visible with `--nocapture`).
//!
//! Criterion 1 is special. The published reference table that the tool is
//! measured against reports 2-hook means that are provably inconsistent
//! with the distributions it describes: every "measured mean" in it
//! exceeds the true exact mean by exactly 2.00000 at five decimals, while
//! its asymptotic column is correct. The criterion therefore cannot pass
//! against correct output. Its test pins the refutation precisely: the
//! tool's exact means, the matching asymptotic column, the constant +2
//! offset, and the internal consistency of the reference's ratio column
//! with its own inflated means. The printed status is FAIL (refuted); the
//! assertions keep the refutation itself regression-guarded.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use hookdist::genfun;
use hookdist::partitions::{brute_distribution, hook_multiset, Partition};
use hookdist::stats::{self, HookDistribution};
use hookdist_cli::verify::{self, Check, Suite};

const BIN: &str = env!("CARGO_BIN_EXE_hookdist");

fn run_cli(args: &[&str]) -> (String, Duration) {
    let start = Instant::now();
    let out = Command::new(BIN).args(args).output().expect("binary runs");
    let elapsed = start.elapsed();
    assert!(out.status.success(), "hookdist {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    (String::from_utf8(out.stdout).expect("utf-8 output"), elapsed)
}

fn phi(x: f64) -> f64 {
    (-x * x / 2.0).exp() / (2.0 * PI).sqrt()
}

/// Exact t=2 distributions shared by criterion 8's comparisons.
fn dist2(n: usize) -> &'static HookDistribution {
    static DISTS: OnceLock<BTreeMap<usize, HookDistribution>> = OnceLock::new();
    &DISTS.get_or_init(|| {
        [100usize, 400, 2500]
            .into_iter()
            .map(|n| {
                let gf = genfun::build_genfun(2, n).expect("build");
                (n, HookDistribution::from_genfun(&gf, n).expect("distribution"))
            })
            .collect()
    })[&n]
}

/// One shared run of the asymptotics verification suite (criteria 6 and 7).
fn asymptotics_checks() -> &'static (Vec<Check>, Duration) {
    static CHECKS: OnceLock<(Vec<Check>, Duration)> = OnceLock::new();
    CHECKS.get_or_init(|| {
        let start = Instant::now();
        let checks = verify::run(Suite::Asymptotics);
        (checks, start.elapsed())
    })
}

#[test]
fn criterion_1_reference_table_reproduction() {
    // (n, measured mean, asymptotic mean, ratio) as printed in the
    // reference table this tool is checked against
    let reference: [(usize, &str, &str, &str); 4] = [
        (100, "9.17483", "7.79697", "1.17672"),
        (500, "18.76417", "17.43455", "1.07626"),
        (1000, "25.97841", "24.65618", "1.05363"),
        (5000, "56.44511", "55.13289", "1.0238"),
    ];

    let (stdout, elapsed) = run_cli(&["table1", "--nvals", "100,500,1000,5000"]);
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 2 minutes");

    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "n,mu_measured,mu_asymptotic,ratio");
    assert_eq!(lines.len(), 5);

    let trim5 = |v: f64| {
        let s = format!("{v:.5}");
        let s = s.trim_end_matches('0');
        s.strip_suffix('.').unwrap_or(s).to_string()
    };

    for (line, (n, ref_measured, ref_asym, ref_ratio)) in lines[1..].iter().zip(reference) {
        let cols: Vec<&str> = line.split(',').collect();
        assert_eq!(cols[0], n.to_string());
        let (ours, asym, ratio) = (cols[1], cols[2], cols[3]);

        // the asymptotic column sqrt(6n)/pi is reproduced verbatim
        assert_eq!(asym, ref_asym, "asymptotic mean at n = {n}");

        // the reference's measured means are refuted: they exceed the
        // exact means by exactly 2.00000 (identical fractional digits,
        // integer part shifted by two)
        assert_ne!(ours, ref_measured, "reference mean unexpectedly matches at n = {n}");
        let (ri, rf) = ref_measured.split_once('.').unwrap();
        let (oi, of) = ours.split_once('.').unwrap();
        assert_eq!(rf, of, "fractional digits differ at n = {n}");
        assert_eq!(
            ri.parse::<i64>().unwrap() - oi.parse::<i64>().unwrap(),
            2,
            "offset is not exactly 2 at n = {n}"
        );

        // the reference's ratio column is consistent with its own
        // inflated means, not with the true ones
        let asym_f: f64 = asym.parse().unwrap();
        let ref_f: f64 = ref_measured.parse().unwrap();
        let ours_f: f64 = ours.parse().unwrap();
        assert_eq!(trim5(ref_f / asym_f), ref_ratio, "reference ratio at n = {n}");
        assert_eq!(trim5(ours_f / asym_f), ratio, "emitted ratio at n = {n}");
        assert_ne!(ratio, ref_ratio, "ratio unexpectedly matches at n = {n}");
    }

    // the emitted table is the library's exact result, not a transcription
    let expected = stats::table1(&[100, 500, 1000, 5000]).unwrap();
    for (line, row) in lines[1..].iter().zip(&expected) {
        assert_eq!(
            *line,
            format!("{},{},{},{}", row.n, row.measured, row.asymptotic, row.ratio)
        );
    }

    println!(
        "criterion 1: FAIL (refuted) -- reference table's measured means exceed the exact means \
         by exactly 2.00000 at all four sizes (e.g. 9.17483 vs exact 7.17483 at n=100); its \
         asymptotic column matches; its ratios follow the inflated means ({elapsed:?})"
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let checks = verify::run(Suite::Oracle);
    let elapsed = start.elapsed();
    let poly: Vec<&Check> = checks
        .iter()
        .filter(|c| c.name.starts_with("oracle: sc_polynomial"))
        .collect();
    assert_eq!(poly.len(), 6);
    for c in &poly {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}, budget 1 minute");
    println!(
        "criterion 2: PASS -- generating-function polynomials equal brute-force enumeration \
         for t <= 6, n <= 30, exactly ({elapsed:?})"
    );
}

#[test]
fn criterion_3_unrestricted_hook_example() {
    let d = brute_distribution(2, 6, false);
    let expected: Vec<num_bigint::BigInt> =
        [1u32, 4, 6].iter().map(|&c| num_bigint::BigInt::from(c)).collect();
    assert_eq!(d.counts(), expected.as_slice());
    assert_eq!(d.total(), &num_bigint::BigInt::from(11));
    println!(
        "criterion 3: PASS -- 2-hook counts over all 11 partitions of 6 are {{0: 1, 1: 4, 2: 6}}"
    );
}

#[test]
fn criterion_4_hook_multiset_example() {
    let hooks = hook_multiset(&Partition::new(vec![5, 4, 2]));
    assert_eq!(hooks.hooks(), [7, 6, 5, 4, 4, 3, 2, 2, 1, 1, 1]);
    println!("criterion 4: PASS -- hook multiset of (5,4,2) is {{7,6,5,4,4,3,2,2,1,1,1}}");
}

#[test]
fn criterion_5_identity_suites() {
    let checks = verify::run(Suite::Identities);
    assert_eq!(checks.len(), 4);
    for c in &checks {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    println!(
        "criterion 5: PASS -- Nekrasov-Okounkov identity (n <= 8, exact), sum of squared \
         dimensions equals n! (n <= 8, exact), dilogarithm identity and derivative within 1e-10"
    );
}

#[test]
fn criterion_6_saddle_point_quadrature() {
    let (checks, elapsed) = asymptotics_checks();
    let quad: Vec<&Check> =
        checks.iter().filter(|c| c.name.starts_with("asymptotics: quadrature")).collect();
    assert_eq!(quad.len(), 3);
    for c in &quad {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    assert!(*elapsed < Duration::from_secs(120), "took {elapsed:?}, budget 2 minutes");
    println!(
        "criterion 6: PASS -- quadrature matches exact coefficients to relative error < 1e-6 at \
         (t=2,T=1,n=50), (t=2,T=3/2,n=40), (t=3,T=1,n=30) with M=4096 ({elapsed:?} incl. trend checks)"
    );
}

#[test]
fn criterion_7_asymptotic_formula_trend() {
    let (checks, _) = asymptotics_checks();
    let trend: Vec<&Check> = checks
        .iter()
        .filter(|c| c.name.starts_with("asymptotics: coefficient formula trend"))
        .collect();
    assert_eq!(trend.len(), 3);
    for c in &trend {
        assert!(c.passed, "{}: {}", c.name, c.detail);
    }
    println!(
        "criterion 7: PASS -- closed-form coefficient asymptotic has relative error < 0.25 at \
         n=2000 and strictly below its n=200 error for (t,T) in {{(2,1),(2,3/2),(3,1)}}"
    );
}

#[test]
fn criterion_8_normality_diagnostics() {
    // standardized moment generating function against its normal limit
    for r in [-1.0f64, 1.0] {
        let target = (r * r / 2.0).exp();
        let err_small = (stats::mgf_from(dist2(100), r).unwrap() - target).abs();
        let err_big = (stats::mgf_from(dist2(2500), r).unwrap() - target).abs();
        assert!(
            err_big < err_small,
            "mgf deviation grew at r = {r}: {err_small:.6} -> {err_big:.6}"
        );
    }

    let (skew_small, kurt_small) = stats::standardized_moments_from(dist2(100)).unwrap();
    let (skew_big, kurt_big) = stats::standardized_moments_from(dist2(2500)).unwrap();
    assert!(skew_big.abs() < skew_small.abs(), "skewness grew: {skew_small} -> {skew_big}");
    assert!(kurt_big.abs() < kurt_small.abs(), "kurtosis grew: {kurt_small} -> {kurt_big}");

    let maxdev = |n: usize| {
        stats::figure2_from(dist2(n))
            .unwrap()
            .iter()
            .map(|&(_, x, y)| (y - phi(x)).abs())
            .fold(0.0f64, f64::max)
    };
    let (dev_small, dev_big) = (maxdev(400), maxdev(2500));
    assert!(dev_big < dev_small, "density deviation grew: {dev_small:.5} -> {dev_big:.5}");

    println!(
        "criterion 8: PASS -- t=2 normality improves from n=100/400 to n=2500: |skew| {:.4} -> \
         {:.4}, |excess kurtosis| {:.4} -> {:.4}, max density deviation {dev_small:.5} -> \
         {dev_big:.5}, MGF deviations shrink at r = ±1",
        skew_small.abs(),
        skew_big.abs(),
        kurt_small.abs(),
        kurt_big.abs()
    );
}

#[test]
fn criterion_9_mean_variance_constants() {
    let gf2 = genfun::build_genfun_jets(2, 4000).unwrap();
    let gf3 = genfun::build_genfun_jets(3, 4000).unwrap();
    let mean_const = -1.0 + 3.0 / (PI * PI);
    let var_const = 3.0 * (PI * PI - 12.0) / PI.powi(4);

    let devs = |n: usize| {
        let (mean, var) = stats::moments_from_jets(&gf2, n).unwrap();
        let root = (6.0 * n as f64).sqrt();
        let mean_dev = ((mean.to_f64() - root / PI) - mean_const).abs();
        let var_dev = ((var.to_f64() - (PI * PI - 6.0) * root / PI.powi(3)) - var_const).abs();
        (mean_dev, var_dev)
    };
    let (mean_small, var_small) = devs(400);
    let (mean_big, var_big) = devs(4000);
    assert!(mean_big < 0.1, "mean constant deviation {mean_big} at n=4000");
    assert!(mean_big < mean_small, "mean deviation grew: {mean_small} -> {mean_big}");
    assert!(var_big < 0.1, "variance constant deviation {var_big} at n=4000");
    assert!(var_big < var_small, "variance deviation grew: {var_small} -> {var_big}");

    let (m2, _) = stats::moments_from_jets(&gf2, 4000).unwrap();
    let (m3, _) = stats::moments_from_jets(&gf3, 4000).unwrap();
    let gap = m3.to_f64() - m2.to_f64();
    assert!((gap + 0.25).abs() < 0.1, "t=3 vs t=2 mean gap {gap} vs -1/4");

    println!(
        "criterion 9: PASS -- second-order constants at t=2: mean offset within {mean_big:.4} of \
         -1+3/pi^2 and variance offset within {var_big:.4} of 3(pi^2-12)/pi^4 at n=4000 (both \
         shrinking from n=400); t=3 vs t=2 mean gap {gap:.4} vs -1/4"
    );
}

#[test]
fn criterion_10_full_polynomial_scalability() {
    let (stdout, elapsed) = run_cli(&["dist", "-t", "2", "-n", "2000"]);
    assert!(elapsed < Duration::from_secs(600), "took {elapsed:?}, budget 10 minutes");

    let gf = genfun::build_genfun(2, 2000).unwrap();
    let dist = HookDistribution::from_genfun(&gf, 2000).unwrap();
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines[0], "m,count");
    assert_eq!(lines.len(), dist.counts().len() + 1, "row count");
    for (line, (m, c)) in lines[1..].iter().zip(dist.counts().iter().enumerate()) {
        assert_eq!(*line, format!("{m},{c}"), "coefficient row m = {m}");
    }
    let total: num_bigint::BigInt = dist.counts().iter().sum();
    assert_eq!(&total, dist.total());
    assert_eq!(total, genfun::sc_counts(2000)[2000], "coefficient sum vs independent count");

    println!(
        "criterion 10: PASS -- `dist -t 2 -n 2000` emitted all {} exact coefficients in \
         {elapsed:?} (budget 10 minutes); they match an in-process rebuild and sum to sc(2000)",
        dist.counts().len()
    );
}

/// The large renormalized-density run. Opt in with
/// `cargo test --test acceptance -- --ignored` (budget: two hours; it
/// actually takes well under a minute).
#[test]
#[ignore = "large n=5000 run; opt-in"]
fn criterion_10_optin_figure2_at_5000() {
    let (stdout, elapsed) = run_cli(&["figure2", "-t", "2", "-n", "5000"]);
    assert!(elapsed < Duration::from_secs(7200), "took {elapsed:?}, budget 2 hours");

    let rows: Vec<(f64, f64)> = stdout
        .lines()
        .skip(1)
        .map(|l| {
            let cols: Vec<&str> = l.split(',').collect();
            (cols[1].parse().unwrap(), cols[2].parse().unwrap())
        })
        .collect();
    let peak = rows.iter().fold(0.0f64, |acc, &(_, y)| acc.max(y));
    let normal_peak = 1.0 / (2.0 * PI).sqrt();
    assert!(
        (peak - normal_peak).abs() < 0.2 * normal_peak,
        "peak {peak} vs normal density peak {normal_peak}"
    );

    // Riemann sum over the uniform x-grid stays a probability density
    let dx = rows[1].0 - rows[0].0;
    let riemann: f64 = rows.iter().map(|&(_, y)| y * dx).sum();
    assert!((riemann - 1.0).abs() < 1e-6, "Riemann sum {riemann}");

    println!(
        "criterion 10 (opt-in): PASS -- figure2 at t=2, n=5000 finished in {elapsed:?}; density \
         peak {peak:.5} within 20% of 1/sqrt(2*pi) = {normal_peak:.5}; Riemann sum {riemann:.9}"
    );
}
