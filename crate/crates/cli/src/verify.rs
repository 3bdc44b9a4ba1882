//! Self-contained verification suites driving the library's invariants:
//! brute-force oracles, classical identities, and asymptotic cross-checks.
//!
//! Every check is deterministic (fixed evaluation grids, no randomness), so
//! a failing run always reproduces. Invariants:
//!
//! * a `Check` never panics on the supported grids; failures are reported
//!   through `passed = false` with a diagnostic detail string;
//! * suites are independent: any subset can run in any order.

use clap::ValueEnum;

use hookdist::asymptotics;
use hookdist::genfun;
use hookdist::partitions::{
    self, brute_distribution, count_t_hooks, enumerate_partitions, enumerate_self_conjugate,
    ftr_dimension, hook_multiset, Partition,
};
use hookdist::series::{CoeffPoly, Rational, Ring};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

/// One verification result: a stable name, the outcome, and a short
/// human-readable diagnostic.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

/// Which suite(s) to run.
#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Suite {
    /// Generating functions versus brute-force enumeration.
    Oracle,
    /// Classical exact identities (hook products, dilogarithm).
    Identities,
    /// Saddle-point quadrature and asymptotic trend checks.
    Asymptotics,
    /// Everything.
    All,
}

/// Runs the selected suite(s) and returns every check outcome.
pub fn run(suite: Suite) -> Vec<Check> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Oracle | Suite::All) {
        checks.extend(oracle_suite());
    }
    if matches!(suite, Suite::Identities | Suite::All) {
        checks.extend(identities_suite());
    }
    if matches!(suite, Suite::Asymptotics | Suite::All) {
        checks.extend(asymptotics_suite());
    }
    checks
}

fn brute_polynomial(list: &[Partition], t: usize) -> CoeffPoly {
    let mut poly = CoeffPoly::zero();
    for p in list {
        poly += &CoeffPoly::monomial(Rational::one(), count_t_hooks(p, t) as i64);
    }
    poly
}

/// Generating-function coefficients versus exhaustive enumeration
/// (t <= 6, n <= 30), plus the two small worked examples.
fn oracle_suite() -> Vec<Check> {
    const N_MAX: usize = 30;
    const T_MAX: usize = 6;
    let mut checks = Vec::new();

    let gfs: Vec<_> = (1..=T_MAX)
        .map(|t| genfun::build_genfun(t, N_MAX).expect("truncation budget"))
        .collect();
    let mut mismatch = vec![None; T_MAX + 1];
    for n in 0..=N_MAX {
        let list = enumerate_self_conjugate(n);
        for (gf, slot) in gfs.iter().zip(mismatch.iter_mut().skip(1)) {
            if slot.is_none()
                && gf.sc_polynomial(n).expect("within truncation")
                    != &brute_polynomial(&list, gf.t())
            {
                *slot = Some(n);
            }
        }
    }
    for (t, slot) in mismatch.iter().enumerate().skip(1) {
        let (passed, detail) = match slot {
            None => (true, format!("all n <= {N_MAX} match exactly")),
            Some(n) => (false, format!("first mismatch at n = {n}")),
        };
        checks.push(Check::new(format!("oracle: sc_polynomial(t={t}) vs enumeration"), passed, detail));
    }

    let d = brute_distribution(2, 6, false);
    let expected: Vec<BigInt> = [1u32, 4, 6].iter().map(|&c| BigInt::from(c)).collect();
    checks.push(Check::new(
        "oracle: unrestricted 2-hook counts over the 11 partitions of 6",
        d.counts() == expected.as_slice() && d.total() == &BigInt::from(11),
        format!("counts {:?}, total {}", d.counts(), d.total()),
    ));

    let hooks = hook_multiset(&Partition::new(vec![5, 4, 2]));
    let expected_hooks = [7usize, 6, 5, 4, 4, 3, 2, 2, 1, 1, 1];
    checks.push(Check::new(
        "oracle: hook multiset of (5,4,2)",
        hooks.hooks() == expected_hooks,
        format!("{:?}", hooks.hooks()),
    ));

    checks
}

/// Exact classical identities: the Nekrasov-Okounkov polynomial identity,
/// the dimension formula's sum of squares, and dilogarithm functional
/// checks on fixed grids.
fn identities_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    let no_bad = (0..=8).find(|&n| {
        partitions::nekrasov_okounkov_lhs(n) != partitions::nekrasov_okounkov_rhs(n)
    });
    checks.push(Check::new(
        "identities: Nekrasov-Okounkov polynomial identity (n <= 8)",
        no_bad.is_none(),
        match no_bad {
            None => "hook side equals product side exactly".into(),
            Some(n) => format!("polynomials differ at n = {n}"),
        },
    ));

    let ftr_bad = (1..=8).find(|&n| {
        let sum: BigInt = enumerate_partitions(n)
            .iter()
            .map(|p| {
                let d = ftr_dimension(p).expect("exact division");
                &d * &d
            })
            .sum();
        let mut fact = BigInt::one();
        for k in 2..=n {
            fact *= k;
        }
        sum != fact
    });
    checks.push(Check::new(
        "identities: sum of squared dimensions equals n! (n <= 8)",
        ftr_bad.is_none(),
        match ftr_bad {
            None => "holds exactly".into(),
            Some(n) => format!("fails at n = {n}"),
        },
    ));

    // Li2(x) + Li2(-x) = Li2(x^2)/2 on a symmetric grid inside (-1, 1)
    let mut worst = 0.0f64;
    for k in 1..50 {
        let x = -0.98 + 0.04 * k as f64;
        if x.abs() < 1e-9 {
            continue;
        }
        let lhs = asymptotics::dilog(x).unwrap() + asymptotics::dilog(-x).unwrap();
        let rhs = asymptotics::dilog(x * x).unwrap() / 2.0;
        worst = worst.max((lhs - rhs).abs());
    }
    checks.push(Check::new(
        "identities: dilogarithm squaring identity on 49 points",
        worst < 1e-10,
        format!("max deviation {worst:.3e} (tolerance 1e-10)"),
    ));

    // d/dx Li2(x) = -ln(1-x)/x, Richardson-extrapolated central difference
    let mut worst = 0.0f64;
    for &x in &[-1.5, -0.5, 0.3, 0.7, 0.9] {
        let h = 1e-4;
        let central = |h: f64| {
            (asymptotics::dilog(x + h).unwrap() - asymptotics::dilog(x - h).unwrap()) / (2.0 * h)
        };
        let approx = (4.0 * central(h / 2.0) - central(h)) / 3.0;
        let closed = -(1.0 - x).ln() / x;
        worst = worst.max((approx - closed).abs());
    }
    checks.push(Check::new(
        "identities: dilogarithm derivative matches -ln(1-x)/x at 5 points",
        worst < 1e-10,
        format!("max deviation {worst:.3e} (tolerance 1e-10)"),
    ));

    checks
}

fn exact_coefficient(t: usize, t0: &Rational, n: usize) -> f64 {
    if t0.is_one() {
        genfun::sc_counts(n)[n].to_f64().expect("finite count")
    } else {
        genfun::build_genfun_scalar(t, n, t0)
            .expect("truncation budget")
            .coeff(n)
            .expect("within truncation")
            .to_f64()
    }
}

fn rel_err(approx: f64, exact: f64) -> f64 {
    (approx - exact).abs() / exact.abs().max(f64::MIN_POSITIVE)
}

/// Quadrature agreement on exact coefficients, and the shrinking relative
/// error of the closed-form coefficient asymptotic.
fn asymptotics_suite() -> Vec<Check> {
    let mut checks = Vec::new();

    let half = || Rational::new(BigInt::from(1), BigInt::from(2));
    let quad_points = [
        (2usize, Rational::one(), 50usize),
        (2, &Rational::one() + &half(), 40),
        (3, Rational::one(), 30),
    ];
    for (t, t0, n) in quad_points {
        let exact = exact_coefficient(t, &t0, n);
        let est = asymptotics::cauchy_estimate(t, t0.to_f64(), n, 4096).expect("valid quadrature");
        let err = rel_err(est, exact);
        checks.push(Check::new(
            format!("asymptotics: quadrature at (t={t}, T={t0}, n={n}, M=4096)"),
            err < 1e-6,
            format!("relative error {err:.3e} (tolerance 1e-6)"),
        ));
    }

    let trend_points = [
        (2usize, Rational::one()),
        (2, &Rational::one() + &half()),
        (3, Rational::one()),
    ];
    for (t, t0) in trend_points {
        let t0f = t0.to_f64();
        let err_small = rel_err(asymptotics::sc_asymptotic(t, t0f, 200), exact_coefficient(t, &t0, 200));
        let err_big = rel_err(asymptotics::sc_asymptotic(t, t0f, 2000), exact_coefficient(t, &t0, 2000));
        checks.push(Check::new(
            format!("asymptotics: coefficient formula trend at (t={t}, T={t0})"),
            err_big < err_small && err_big < 0.25,
            format!("relative error {err_small:.4} at n=200, {err_big:.4} at n=2000"),
        ));
    }

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_suite_is_green() {
        for c in oracle_suite() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn identities_suite_is_green() {
        for c in identities_suite() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn suite_selection_composes() {
        let oracle = run(Suite::Oracle).len();
        let identities = run(Suite::Identities).len();
        assert_eq!(oracle, 8);
        assert_eq!(identities, 4);
    }
}
