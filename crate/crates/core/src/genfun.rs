//! The bivariate generating functions F_t(T;q) marking t-hook counts over
//! self-conjugate partitions.
//!
//! F_t(T;q) = Σ_λ T^{N_t(λ)} q^{|λ|} over self-conjugate λ factors into
//! (-q;q²)_∞ times t-dependent products:
//!
//! * even t: (-q;q²)_∞ · ((1-T²)q^{2t}; q^{2t})_∞^{t/2}
//! * odd t:  (-q;q²)_∞ · H*(T;q^t) · ((1-T²)q^{2t}; q^{2t})_∞^{(t-1)/2}
//!
//! H* is computed from its q-hypergeometric representation (two sums with
//! weights (T²-1)ⁿ and 1/T prefactors), never from the square-root product
//! form, so everything stays inside Laurent-polynomial arithmetic.
//!
//! Invariants (checked at every assembly, not just in tests):
//!
//! * every q-coefficient of an assembled generating function is an honest
//!   polynomial in T (the 1/T terms of H* must cancel) with non-negative
//!   integer coefficients;
//! * evaluating the q^n coefficient at T = 1 gives sc(n), the number of
//!   self-conjugate partitions of n.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::series::{pochhammer, CoeffPoly, Jet3, QSeries, Rational, Ring};

/// An assembled F_t(T;q), truncated in q. The coefficient ring is CoeffPoly
/// for the full polynomial data ([`HookGenFun`]) or Jet3 for moments at
/// T = 1 ([`JetGenFun`]).
#[derive(Clone, Debug)]
pub struct GenFun<R: Ring> {
    t: usize,
    series: QSeries<R>,
}

pub type HookGenFun = GenFun<CoeffPoly>;
pub type JetGenFun = GenFun<Jet3>;

impl<R: Ring> GenFun<R> {
    pub fn t(&self) -> usize {
        self.t
    }

    pub fn truncation(&self) -> usize {
        self.series.truncation()
    }

    pub fn series(&self) -> &QSeries<R> {
        &self.series
    }

    /// The q^n coefficient, i.e. sc_t(n;T) in the coefficient ring.
    pub fn coeff(&self, n: usize) -> Result<&R> {
        self.series.coeff(n)
    }
}

impl HookGenFun {
    /// The exact polynomial sc_t(n;T); its T^m coefficient is the number of
    /// self-conjugate partitions of n with exactly m t-hooks.
    pub fn sc_polynomial(&self, n: usize) -> Result<&CoeffPoly> {
        self.series.coeff(n)
    }

    /// Exact rational evaluation of sc_t(n;T) at T = t0.
    pub fn evaluate_sc(&self, n: usize, t0: &Rational) -> Result<Rational> {
        self.sc_polynomial(n)?.eval(t0)
    }

    /// Float evaluation of sc_t(n;T). Finite floats are dyadic rationals, so
    /// the evaluation itself is exact and only the final value rounds.
    pub fn evaluate_sc_f64(&self, n: usize, t0: f64) -> Result<f64> {
        let exact = Rational::from_f64(t0)
            .ok_or_else(|| Error::InvalidParameter(format!("non-finite T0: {t0}")))?;
        Ok(self.evaluate_sc(n, &exact)?.to_f64())
    }

    /// JSON form {"t":…, "n":…, "coeffs":[[m, "count"], …]} with counts as
    /// decimal strings; zero coefficients are omitted.
    pub fn polynomial_json(&self, n: usize) -> Result<serde_json::Value> {
        let poly = self.sc_polynomial(n)?;
        let coeffs: Vec<serde_json::Value> = poly
            .terms()
            .map(|(m, c)| {
                debug_assert!(m >= 0 && c.is_integer());
                serde_json::json!([m, c.numer().to_string()])
            })
            .collect();
        Ok(serde_json::json!({ "t": self.t, "n": n, "coeffs": coeffs }))
    }
}

/// Exact counts of self-conjugate partitions of 0..=trunc, as the
/// coefficients of (-q;q²)_∞.
pub fn sc_counts(trunc: usize) -> Vec<BigInt> {
    let series = pochhammer::<Rational>(&Rational::from(-1), 1, 2, None, trunc)
        .expect("product terminates: positive q-power");
    series
        .coeffs()
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.numer().clone()
        })
        .collect()
}

/// H*(T;q) from its q-hypergeometric representation,
///
///   (1 - 1/T) Σ_{k≥0} (T²-1)^k q^{2k²+k} / [(q²;q²)_k (-q;q²)_{k+1}]
///   + (1/T)   Σ_{k≥0} (T²-1)^k q^{2k²-k} / [(q²;q²)_k (-q;q²)_k],
///
/// truncated at `trunc`, including every term with 2k²-k ≤ trunc. Generic
/// over the coefficient ring; the caller passes T and 1/T as ring elements
/// (CoeffPoly variables, jets at T = 1+ε, or a rational point and its
/// reciprocal).
///
/// The shared denominators are maintained incrementally: advancing level k
/// multiplies the running inverse by 1/(1-q^{2k}) and 1/(1+q^{2k-1}), two
/// O(trunc) in-place passes, and the first sum's extra (-q;q²) factor is one
/// more pass on a copy.
pub fn hstar_series<R: Ring>(trunc: usize, t_var: &R, t_inv: &R) -> QSeries<R> {
    let mut u = t_var.mul_ref(t_var); // T² - 1
    u -= &R::one();
    let mut first_weight = R::one(); // 1 - 1/T
    first_weight -= t_inv;

    let one = R::one();
    let minus_one = R::from_int(-1);
    let mut total = QSeries::zero(trunc);
    let mut inv = QSeries::one(trunc); // 1 / [(q²;q²)_k (-q;q²)_k]
    let mut upow = R::one(); // (T²-1)^k
    let mut k = 0usize;
    loop {
        let e2 = 2 * k * k - k;
        if e2 > trunc || upow.is_zero() {
            break; // nilpotent rings (jets) zero out all higher terms too
        }
        let w2 = t_inv.mul_ref(&upow);
        total.add_scaled_shifted(&inv, &w2, e2);

        let e1 = 2 * k * k + k;
        let w1 = first_weight.mul_ref(&upow);
        if e1 <= trunc && !w1.is_zero() {
            let mut inv1 = inv.clone();
            inv1.mul_inv_binomial(&minus_one, 2 * k + 1); // ÷ (1 + q^{2k+1})
            total.add_scaled_shifted(&inv1, &w1, e1);
        }

        k += 1;
        if 2 * k * k - k > trunc {
            break;
        }
        inv.mul_inv_binomial(&one, 2 * k); // ÷ (1 - q^{2k})
        inv.mul_inv_binomial(&minus_one, 2 * k - 1); // ÷ (1 + q^{2k-1})
        upow = upow.mul_ref(&u);
    }
    total
}

/// Shared assembly for every coefficient ring: start from (-q;q²)_∞, fold in
/// H*(T;q^t) for odd t, then apply the ((1-T²)q^{2t};q^{2t})_∞ power factor
/// by factor. `u` must be T²-1 and `t_inv` must be 1/T in the target ring.
fn assemble<R: Ring>(t: usize, trunc: usize, t_var: &R, t_inv: &R) -> QSeries<R> {
    assert!(t >= 1, "hook lengths are positive");
    let mut u = t_var.mul_ref(t_var);
    u -= &R::one();

    let counts = sc_counts(trunc);
    let mut base = QSeries::from_coeffs(counts.iter().map(|c| R::from_bigint(c)).collect());

    if t % 2 == 1 {
        let h = hstar_series(trunc / t, t_var, t_inv);
        base = base.mul(&h.dilate(t, trunc));
    }
    let rounds = t / 2; // t/2 factors for even t, (t-1)/2 for odd t
    for _ in 0..rounds {
        let mut e = 2 * t;
        while e <= trunc {
            base.mul_binomial(&u, e); // 1 - (1-T²) q^e = 1 + u q^e
            e += 2 * t;
        }
    }
    base
}

/// Assembles F_t(T;q) over full T-polynomials and verifies the HookGenFun
/// invariants coefficient by coefficient.
pub fn build_genfun(t: usize, trunc: usize) -> Result<HookGenFun> {
    let series = assemble(t, trunc, &CoeffPoly::var(), &CoeffPoly::var_inv());
    let counts = sc_counts(trunc);
    for (n, poly) in series.coeffs().iter().enumerate() {
        if !poly.is_polynomial() {
            return Err(Error::GenFunInvariant(format!(
                "q^{n} coefficient of F_{t} keeps a negative T-exponent: {poly:?}"
            )));
        }
        let mut at_one = Rational::zero();
        for (_, c) in poly.terms() {
            if !c.is_integer() || c.is_negative() {
                return Err(Error::GenFunInvariant(format!(
                    "q^{n} coefficient of F_{t} has a non-count T-coefficient: {poly:?}"
                )));
            }
            at_one += c;
        }
        if at_one != Rational::from_integer(counts[n].clone()) {
            return Err(Error::GenFunInvariant(format!(
                "q^{n} coefficient of F_{t} sums to {at_one} at T=1, expected sc({n}) = {}",
                counts[n]
            )));
        }
    }
    Ok(GenFun { t, series })
}

/// Assembles F_t over second-order jets at T = 1, carrying sc(n), Σ m·sc_t(n,m)
/// and Σ C(m,2)·sc_t(n,m) without materializing the polynomials.
pub fn build_genfun_jets(t: usize, trunc: usize) -> Result<JetGenFun> {
    let series = assemble(t, trunc, &Jet3::var(), &Jet3::var_inv());
    let counts = sc_counts(trunc);
    for (n, jet) in series.coeffs().iter().enumerate() {
        let ok = jet.a0 == Rational::from_integer(counts[n].clone())
            && jet.a1.is_integer()
            && !jet.a1.is_negative()
            && jet.a2.is_integer()
            && !jet.a2.is_negative();
        if !ok {
            return Err(Error::GenFunInvariant(format!(
                "q^{n} jet of F_{t} is not a count jet: {jet:?} (sc({n}) = {})",
                counts[n]
            )));
        }
    }
    Ok(GenFun { t, series })
}

/// Assembles the scalar series F_t(T0;q) at an exact rational point. This is
/// how single evaluations reach large n without polynomial coefficients.
pub fn build_genfun_scalar(t: usize, trunc: usize, t0: &Rational) -> Result<QSeries<Rational>> {
    let t0_inv = t0
        .recip()
        .ok_or_else(|| Error::InvalidParameter("T0 = 0 needs the polynomial build".into()))?;
    let series = assemble(t, trunc, t0, &t0_inv);
    let nonneg = !t0.is_negative();
    let counts = sc_counts(trunc);
    for (n, v) in series.coeffs().iter().enumerate() {
        if nonneg && v.is_negative() {
            return Err(Error::GenFunInvariant(format!(
                "sc_{t}({n};{t0}) = {v} is negative at a non-negative marking value"
            )));
        }
        if t0.is_one() && v != &Rational::from_integer(counts[n].clone()) {
            return Err(Error::GenFunInvariant(format!(
                "sc_{t}({n};1) = {v}, expected sc({n}) = {}",
                counts[n]
            )));
        }
    }
    Ok(series)
}
