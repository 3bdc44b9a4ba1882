//! Thin high-precision layer over `astro_float` used by the oscillatory
//! quadrature in the asymptotics module.
//!
//! The quadrature needs a few hundred bits of working precision so that
//! cancellation between samples of the oscillatory integrand does not eat
//! the answer. Everything here is crate-private plumbing: a context that
//! owns the constants cache for transcendental calls, a tiny rectangular
//! complex type, and a deterministic pairwise summation.
//!
//! Invariants:
//! - All operations round to `RoundingMode::ToEven` at the context's fixed
//!   bit precision, so results are a pure function of the inputs and the
//!   precision (no dependence on evaluation order or thread count).
//! - `to_f64` reads the top 128 mantissa bits and performs exactly one
//!   rounding, so it is correctly rounded up to one ulp.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};

const RM: RoundingMode = RoundingMode::ToEven;

/// Fixed-precision context. Holds the shared constants cache needed by
/// `exp`, `sin` and `cos`; pure arithmetic goes through the free functions
/// below so it can run on worker threads without the cache.
pub(crate) struct Ctx {
    p: usize,
    cc: Consts,
}

impl Ctx {
    /// Context with at least `decimal_digits` digits of working precision.
    pub fn new(decimal_digits: usize) -> Self {
        // 1 decimal digit ~ 3.33 bits; round up to whole words and add one
        // guard word for the long product chains in the quadrature.
        let bits = (decimal_digits * 3322).div_ceil(1000) + 64;
        let p = bits.div_ceil(64) * 64;
        let cc = Consts::new().expect("constants cache allocation");
        Ctx { p, cc }
    }

    pub fn prec(&self) -> usize {
        self.p
    }

    pub fn f(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, self.p)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.p, RM, &mut self.cc)
    }

    pub fn sin_cos(&mut self, x: &BigFloat) -> (BigFloat, BigFloat) {
        (x.sin(self.p, RM, &mut self.cc), x.cos(self.p, RM, &mut self.cc))
    }
}

pub(crate) fn add(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.add(b, p, RM)
}

pub(crate) fn sub(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.sub(b, p, RM)
}

pub(crate) fn mul(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.mul(b, p, RM)
}

pub(crate) fn div(a: &BigFloat, b: &BigFloat, p: usize) -> BigFloat {
    a.div(b, p, RM)
}

/// Round to f64 with a single rounding step: packs the top two mantissa
/// words into a u128 (conversion to f64 is correctly rounded) and scales
/// by the binary exponent.
pub(crate) fn to_f64(x: &BigFloat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf() {
        return if x.is_inf_neg() { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
        return f64::NAN;
    };
    // Mantissa is little-endian; the value is sign * 0.m * 2^exp with the
    // most significant bit of the last word set.
    let k = words.len();
    let hi = words[k - 1] as u128;
    let lo = if k >= 2 { words[k - 2] as u128 } else { 0 };
    let mant = (hi << 64) | lo;
    // staged scaling keeps intermediates in range for subnormal results
    let mut mag = mant as f64;
    let mut e = exp - 128;
    while e > 1023 {
        mag *= 2f64.powi(1023);
        e -= 1023;
    }
    while e < -1022 {
        mag *= 2f64.powi(-1022);
        e += 1022;
    }
    mag *= 2f64.powi(e);
    if sign == Sign::Neg {
        -mag
    } else {
        mag
    }
}

/// Rectangular complex number over `BigFloat`.
#[derive(Clone, Debug)]
pub(crate) struct Cplx {
    pub re: BigFloat,
    pub im: BigFloat,
}

impl Cplx {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Cplx { re, im }
    }

    pub fn real(re: BigFloat, p: usize) -> Self {
        Cplx { re, im: BigFloat::new(p) }
    }

    pub fn one(p: usize) -> Self {
        Cplx { re: BigFloat::from_f64(1.0, p), im: BigFloat::new(p) }
    }

    pub fn conj(&self) -> Self {
        Cplx { re: self.re.clone(), im: self.im.neg() }
    }

    pub fn add(&self, o: &Cplx, p: usize) -> Self {
        Cplx { re: add(&self.re, &o.re, p), im: add(&self.im, &o.im, p) }
    }

    /// `self + r` for real `r`; only touches the real part.
    pub fn add_real(&self, r: &BigFloat, p: usize) -> Self {
        Cplx { re: add(&self.re, r, p), im: self.im.clone() }
    }

    pub fn mul(&self, o: &Cplx, p: usize) -> Self {
        let re = sub(&mul(&self.re, &o.re, p), &mul(&self.im, &o.im, p), p);
        let im = add(&mul(&self.re, &o.im, p), &mul(&self.im, &o.re, p), p);
        Cplx { re, im }
    }

    pub fn scale(&self, r: &BigFloat, p: usize) -> Self {
        Cplx { re: mul(&self.re, r, p), im: mul(&self.im, r, p) }
    }

    pub fn div(&self, o: &Cplx, p: usize) -> Self {
        let norm = add(&mul(&o.re, &o.re, p), &mul(&o.im, &o.im, p), p);
        let num = self.mul(&o.conj(), p);
        Cplx { re: div(&num.re, &norm, p), im: div(&num.im, &norm, p) }
    }

    /// Integer power by binary squaring.
    pub fn powu(&self, mut n: usize, p: usize) -> Self {
        let mut acc = Cplx::one(p);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, p);
            }
        }
        acc
    }
}

/// Sums a slice with a fixed halving tree, independent of chunking or
/// thread count.
pub(crate) fn pairwise_sum(xs: &[BigFloat], p: usize) -> BigFloat {
    match xs.len() {
        0 => BigFloat::new(p),
        1 => xs[0].clone(),
        len => {
            let (a, b) = xs.split_at(len / 2);
            add(&pairwise_sum(a, p), &pairwise_sum(b, p), p)
        }
    }
}
