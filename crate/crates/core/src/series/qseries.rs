//! Truncated formal power series in q over a pluggable coefficient ring.
//!
//! Invariants:
//!
//! * `coeffs` always has length `trunc + 1`; index k holds the coefficient
//!   of q^k;
//! * binary operations truncate the result to the smaller operand truncation;
//! * all arithmetic is exact; multiplication is schoolbook O(N^2)
//!   convolution, optionally parallelized over output exponents (each output
//!   coefficient is accumulated serially in index order, so results are
//!   identical for any thread count).

use rayon::prelude::*;

use crate::error::{Error, Result};

use super::ring::Ring;

/// Output coefficients below this count are not worth a rayon dispatch.
const PAR_THRESHOLD: usize = 192;

#[derive(Clone, PartialEq, Debug)]
pub struct QSeries<R: Ring> {
    trunc: usize,
    coeffs: Vec<R>,
}

impl<R: Ring> QSeries<R> {
    pub fn zero(trunc: usize) -> Self {
        QSeries { trunc, coeffs: vec![R::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = R::one();
        s
    }

    /// c * q^exp as a series.
    pub fn monomial(coeff: R, exp: usize, trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        if exp <= trunc {
            s.coeffs[exp] = coeff;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty());
        QSeries { trunc: coeffs.len() - 1, coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> Result<&R> {
        self.coeffs.get(k).ok_or(Error::TruncationExceeded { n: k, trunc: self.trunc })
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    /// Drops coefficients above `new_trunc`.
    pub fn truncated(&self, new_trunc: usize) -> Self {
        let n = new_trunc.min(self.trunc);
        QSeries { trunc: n, coeffs: self.coeffs[..=n].to_vec() }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.trunc.min(rhs.trunc);
        let mut coeffs = self.coeffs[..=n].to_vec();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs[..=n]) {
            *c += r;
        }
        QSeries { trunc: n, coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.trunc.min(rhs.trunc);
        let mut coeffs = self.coeffs[..=n].to_vec();
        for (c, r) in coeffs.iter_mut().zip(&rhs.coeffs[..=n]) {
            *c -= r;
        }
        QSeries { trunc: n, coeffs }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.trunc.min(rhs.trunc);
        let a = &self.coeffs[..=n];
        let b = &rhs.coeffs[..=n];
        let conv = |k: usize| {
            let mut acc = R::zero();
            for (ai, bi) in a[..=k].iter().zip(b[..=k].iter().rev()) {
                acc.add_mul_assign(ai, bi);
            }
            acc
        };
        let coeffs: Vec<R> = if n >= PAR_THRESHOLD {
            (0..=n).into_par_iter().map(conv).collect()
        } else {
            (0..=n).map(conv).collect()
        };
        QSeries { trunc: n, coeffs }
    }

    /// In-place multiplication by the sparse factor (1 + c * q^exp).
    pub fn mul_binomial(&mut self, c: &R, exp: usize) {
        if exp == 0 {
            // (1 + c) scales every coefficient
            let mut f = R::one();
            f += c;
            for v in &mut self.coeffs {
                *v = v.mul_ref(&f);
            }
            return;
        }
        if c.is_zero() || exp > self.trunc {
            return;
        }
        for k in (exp..=self.trunc).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0].add_mul_assign(c, &lo[k - exp]);
        }
    }

    /// In-place multiplication by 1 / (1 - c * q^exp), a single geometric
    /// factor. One forward pass: g[k] += c * g[k - exp].
    pub fn mul_inv_binomial(&mut self, c: &R, exp: usize) {
        assert!(exp > 0, "geometric factor needs a positive exponent");
        if c.is_zero() || exp > self.trunc {
            return;
        }
        for k in exp..=self.trunc {
            let (lo, hi) = self.coeffs.split_at_mut(k);
            hi[0].add_mul_assign(c, &lo[k - exp]);
        }
    }

    /// Multiplicative inverse by long division; the leading coefficient must
    /// be a unit.
    pub fn inv(&self) -> Result<Self> {
        let f0_inv = self.coeffs[0].inverse().ok_or(Error::NonUnitLeadingCoeff)?;
        let mut g: Vec<R> = Vec::with_capacity(self.trunc + 1);
        g.push(f0_inv.clone());
        for k in 1..=self.trunc {
            let mut acc = R::zero();
            for j in 1..=k {
                acc.add_mul_assign(&self.coeffs[j], &g[k - j]);
            }
            acc.neg_assign();
            g.push(f0_inv.mul_ref(&acc));
        }
        Ok(QSeries { trunc: self.trunc, coeffs: g })
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut out = Self::one(self.trunc);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Substitutes q -> q^factor, producing a series truncated at
    /// `new_trunc`. Requires enough input coefficients to cover the target.
    pub fn dilate(&self, factor: usize, new_trunc: usize) -> Self {
        assert!(factor >= 1);
        assert!(
            self.trunc >= new_trunc / factor,
            "dilation source truncated at {} but needs {}",
            self.trunc,
            new_trunc / factor
        );
        let mut out = Self::zero(new_trunc);
        for k in 0..=new_trunc / factor {
            out.coeffs[k * factor] = self.coeffs[k].clone();
        }
        out
    }

    /// Coefficient-wise multiplication by a ring constant.
    pub fn scale(&self, c: &R) -> Self {
        let coeffs = self.coeffs.iter().map(|v| v.mul_ref(c)).collect();
        QSeries { trunc: self.trunc, coeffs }
    }

    /// `self += other * c * q^shift`, used to accumulate hypergeometric
    /// terms.
    pub fn add_scaled_shifted(&mut self, other: &Self, c: &R, shift: usize) {
        if c.is_zero() {
            return;
        }
        for k in shift..=self.trunc {
            if k - shift > other.trunc {
                break;
            }
            self.coeffs[k].add_mul_assign(&other.coeffs[k - shift], c);
        }
    }
}

/// The q-Pochhammer product (a; q^step)_count with a = coeff * q^exp:
///
///   prod_{j=0}^{count-1} (1 - coeff * q^(exp + step*j))
///
/// truncated at `trunc`. `count = None` means the infinite product, which
/// terminates once factors are 1 + O(q^(trunc+1)); that requires `exp > 0`
/// (or a zero coefficient).
pub fn pochhammer<R: Ring>(
    coeff: &R,
    exp: usize,
    step: usize,
    count: Option<usize>,
    trunc: usize,
) -> Result<QSeries<R>> {
    assert!(step >= 1, "q-Pochhammer step must be positive");
    let mut out = QSeries::one(trunc);
    if coeff.is_zero() {
        return Ok(out);
    }
    let mut neg = coeff.clone();
    neg.neg_assign();
    match count {
        Some(n) => {
            for j in 0..n {
                let e = exp + step * j;
                if e > trunc && e > 0 {
                    break; // remaining factors are 1 + O(q^(trunc+1))
                }
                out.mul_binomial(&neg, e);
            }
        }
        None => {
            if exp == 0 {
                return Err(Error::NonTerminatingProduct);
            }
            let mut e = exp;
            while e <= trunc {
                out.mul_binomial(&neg, e);
                e += step;
            }
        }
    }
    Ok(out)
}
