//! Exact hook-count distributions and their statistics.
//!
//! A [`HookDistribution`] holds, for fixed (t, n), the exact counts of
//! partitions in a sample space (all partitions, or the self-conjugate ones)
//! grouped by their number of t-hooks. Moments are computed in exact rational
//! arithmetic; floating point only appears in the diagnostic outputs
//! (moment-generating function values, standardized plot data).
//!
//! Invariants:
//!
//! * `counts[m]` is the number of sample partitions with exactly m t-hooks;
//!   the vector carries no trailing zero (its length is 1 + max occupied m),
//!   and is empty exactly when the sample space is empty;
//! * `total` is always the sum of `counts`;
//! * the two exact-moment routes (full polynomial coefficients, and jet
//!   arithmetic at T = 1 + eps) agree as exact rationals.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::asymptotics;
use crate::error::{Error, Result};
use crate::genfun::{self, HookGenFun, JetGenFun};
use crate::series::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookDistribution {
    t: usize,
    n: usize,
    counts: Vec<BigInt>,
    total: BigInt,
}

impl HookDistribution {
    /// Builds a distribution from sparse counts keyed by m.
    pub fn from_counts(t: usize, n: usize, counts: &BTreeMap<usize, BigInt>) -> Self {
        let len = counts
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .next_back()
            .map_or(0, |(&m, _)| m + 1);
        let mut dense = vec![BigInt::zero(); len];
        for (&m, c) in counts {
            if m < len {
                dense[m] = c.clone();
            }
        }
        let total = dense.iter().sum();
        HookDistribution { t, n, counts: dense, total }
    }

    /// Reads the self-conjugate distribution off a generating function:
    /// counts[m] is the T^m coefficient of sc_polynomial(n).
    pub fn from_genfun(gf: &HookGenFun, n: usize) -> Result<Self> {
        let poly = gf.sc_polynomial(n)?;
        let mut map = BTreeMap::new();
        for (exp, coeff) in poly.terms() {
            // build_genfun already validated integrality and nonnegativity
            assert!(exp >= 0 && coeff.is_integer(), "validated polynomial coefficient");
            map.insert(exp as usize, coeff.numer().clone());
        }
        Ok(HookDistribution::from_counts(gf.t(), n, &map))
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Dense counts indexed by m; empty when the sample space is empty.
    pub fn counts(&self) -> &[BigInt] {
        &self.counts
    }

    /// Count at m, zero beyond the stored range.
    pub fn count(&self, m: usize) -> BigInt {
        self.counts.get(m).cloned().unwrap_or_default()
    }

    /// Size of the sample space.
    pub fn total(&self) -> &BigInt {
        &self.total
    }

    /// Exact mean and variance of the hook count under the uniform
    /// measure on the sample space.
    pub fn exact_mean_variance(&self) -> Result<(Rational, Rational)> {
        if self.total.is_zero() {
            return Err(Error::EmptySampleSpace { n: self.n });
        }
        let mut m1 = BigInt::zero();
        let mut m2 = BigInt::zero();
        for (m, c) in self.counts.iter().enumerate() {
            let mb = BigInt::from(m);
            m1 += &mb * c;
            m2 += &mb * &mb * c;
        }
        let mean = Rational::new(m1, self.total.clone());
        let mut variance = Rational::new(m2, self.total.clone());
        variance.sub_product(&mean, &mean);
        Ok((mean, variance))
    }
}

/// Which machinery computes the exact moments.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MomentMethod {
    /// Jet arithmetic at T = 1 + eps: reads E[N] and E[N(N-1)] off the
    /// first and second jet coefficients without building the polynomial.
    Jets,
    /// Full polynomial coefficients, summed directly.
    FullPolynomial,
}

/// Exact mean and variance from an already-built jet generating function.
pub fn moments_from_jets(gf: &JetGenFun, n: usize) -> Result<(Rational, Rational)> {
    let jet = gf.coeff(n)?;
    if jet.a0.is_zero() {
        return Err(Error::EmptySampleSpace { n });
    }
    // a1 = sum m c_m and a2 = sum C(m,2) c_m, so E[N] = a1/a0 and
    // E[N(N-1)] = 2 a2/a0; V = E[N(N-1)] + E[N] - E[N]^2.
    let mean = &jet.a1 / &jet.a0;
    let double = &jet.a2 + &jet.a2;
    let mut variance = &(&double / &jet.a0) + &mean;
    variance.sub_product(&mean, &mean);
    Ok((mean, variance))
}

/// Exact (mean, variance) of the t-hook count over self-conjugate
/// partitions of n, by either method; the two agree exactly.
pub fn exact_moments(t: usize, n: usize, method: MomentMethod) -> Result<(Rational, Rational)> {
    match method {
        MomentMethod::Jets => moments_from_jets(&genfun::build_genfun_jets(t, n)?, n),
        MomentMethod::FullPolynomial => {
            HookDistribution::from_genfun(&genfun::build_genfun(t, n)?, n)?.exact_mean_variance()
        }
    }
}

/// Standardized moment-generating function value
///
///   M(r) = (1/sc(n)) sum_m counts[m] e^{(m - mu_t(n)) r / sigma_t(n)}
///
/// with mu, sigma the asymptotic constants (not the distribution's own
/// moments); the normal limit is e^{r^2/2}.
pub fn mgf_from(dist: &HookDistribution, r: f64) -> Result<f64> {
    if dist.total().is_zero() {
        return Err(Error::EmptySampleSpace { n: dist.n() });
    }
    let (mu, sigma2) = asymptotics::mean_variance(dist.t(), dist.n())?;
    let sigma = sigma2.sqrt();
    let total = dist.total().to_f64().expect("finite total");
    let sum: f64 = dist
        .counts()
        .iter()
        .enumerate()
        .map(|(m, c)| c.to_f64().expect("finite count") * ((m as f64 - mu) * r / sigma).exp())
        .sum();
    Ok(sum / total)
}

/// [`mgf_from`] on a freshly built distribution.
pub fn mgf(t: usize, n: usize, r: f64) -> Result<f64> {
    mgf_from(&HookDistribution::from_genfun(&genfun::build_genfun(t, n)?, n)?, r)
}

/// Normality diagnostics (skewness, excess kurtosis) from the
/// distribution's own exact mean and variance; both vanish in the normal
/// limit.
pub fn standardized_moments_from(dist: &HookDistribution) -> Result<(f64, f64)> {
    let (mean, variance) = dist.exact_mean_variance()?;
    if variance.is_zero() {
        return Err(Error::DegenerateDistribution { n: dist.n() });
    }
    let mut c3 = Rational::zero();
    let mut c4 = Rational::zero();
    for (m, c) in dist.counts().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let d = &Rational::from_integer(m.into()) - &mean;
        let wd3 = &Rational::from_integer(c.clone()) * &d.pow(3);
        c4.add_product(&wd3, &d);
        c3 += &wd3;
    }
    let total = Rational::from_integer(dist.total().clone());
    let mu3 = &c3 / &total;
    let mu4 = &c4 / &total;
    let skewness = mu3.to_f64() / variance.to_f64().powf(1.5);
    let excess = (&mu4 / &(&variance * &variance)).to_f64() - 3.0;
    Ok((skewness, excess))
}

/// [`standardized_moments_from`] on a freshly built distribution.
pub fn standardized_moments(t: usize, n: usize) -> Result<(f64, f64)> {
    standardized_moments_from(&HookDistribution::from_genfun(&genfun::build_genfun(t, n)?, n)?)
}

/// Renormalized density plot data: for every occupied m, the row
///
///   (m,  x = (m - mean)/sigma,  y = counts[m] sigma / (total * spacing))
///
/// using the distribution's own exact mean and standard deviation, where
/// `spacing` is the lattice spacing of the support (the gcd of the gaps
/// between occupied m). The division by the spacing makes y a genuine
/// density estimate, so y approximates the standard normal density at x
/// and the Riemann sum of y over the grid width spacing/sigma is exactly
/// one.
///
/// The spacing matters: for even t the t-hook count of a self-conjugate
/// partition is always even (a hook of even length never sits on the main
/// diagonal, and off-diagonal cells pair up under transposition), so the
/// support lives on 2Z and the naive scaling counts[m] sigma / total
/// would converge to twice the normal density.
pub fn figure2_from(dist: &HookDistribution) -> Result<Vec<(usize, f64, f64)>> {
    let (mean, variance) = dist.exact_mean_variance()?;
    if variance.is_zero() {
        return Err(Error::DegenerateDistribution { n: dist.n() });
    }
    let mu = mean.to_f64();
    let sigma = variance.to_f64().sqrt();
    let total = dist.total().to_f64().expect("finite total");
    let spacing = support_spacing(dist.counts()) as f64;
    Ok(dist
        .counts()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| {
            let y = c.to_f64().expect("finite count") * sigma / (total * spacing);
            (m, (m as f64 - mu) / sigma, y)
        })
        .collect())
}

/// Lattice spacing of the occupied support: gcd of all gaps between
/// consecutive occupied indices (1 when fewer than two are occupied).
pub fn support_spacing(counts: &[BigInt]) -> usize {
    let mut prev = None;
    let mut g = 0usize;
    for (m, c) in counts.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if let Some(p) = prev {
            g = num_integer::gcd(g, m - p);
        }
        prev = Some(m);
    }
    g.max(1)
}

/// [`figure2_from`] on a freshly built distribution.
pub fn figure2_data(t: usize, n: usize) -> Result<Vec<(usize, f64, f64)>> {
    figure2_from(&HookDistribution::from_genfun(&genfun::build_genfun(t, n)?, n)?)
}

/// One row of the mean-convergence table: measured exact mean of the
/// 2-hook count, the leading asymptotic sqrt(6n)/pi, and their ratio.
/// The measured and asymptotic columns carry five decimals (half away
/// from zero for the exact column); the ratio is rounded to five decimals
/// and printed with trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Table1Row {
    pub n: usize,
    pub measured: String,
    pub asymptotic: String,
    pub ratio: String,
}

/// Mean-convergence table for t = 2 over the given sizes, via one jet
/// build at the largest size.
pub fn table1(nvals: &[usize]) -> Result<Vec<Table1Row>> {
    let max = nvals.iter().copied().max().unwrap_or(0);
    let gf = genfun::build_genfun_jets(2, max)?;
    nvals
        .iter()
        .map(|&n| {
            let (mean, _) = moments_from_jets(&gf, n)?;
            let asym = (6.0 * n as f64).sqrt() / PI;
            Ok(Table1Row {
                n,
                measured: mean.to_decimal(5),
                asymptotic: format!("{asym:.5}"),
                ratio: trim_trailing_zeros(format!("{:.5}", mean.to_f64() / asym)),
            })
        })
        .collect()
}

fn trim_trailing_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0');
    t.strip_suffix('.').unwrap_or(t).to_string()
}
