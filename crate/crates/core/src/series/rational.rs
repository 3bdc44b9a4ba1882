//! Arbitrary-precision rational numbers.
//!
//! A thin reduced-fraction type over [`BigInt`]. The representation
//! invariants are:
//!
//! * the denominator is strictly positive;
//! * numerator and denominator are coprime;
//! * zero is stored as `0/1`.
//!
//! Nearly every coefficient produced by the generating-function machinery is
//! an integer, so all arithmetic takes a fast path when both denominators are
//! one: plain [`BigInt`] ops, no gcd. That fast path is the reason this type
//! exists; a generic reduced fraction pays a gcd against 1 on every
//! operation, which dominates the runtime of large series builds.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    /// Builds `num/den`, reducing to lowest terms. Panics if `den` is zero.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        let mut r = Rational { num, den };
        r.reduce();
        r
    }

    pub fn from_integer(num: BigInt) -> Self {
        Rational { num, den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(BigInt::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(BigInt::one())
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational { num: self.num.abs(), den: self.den.clone() }
    }

    pub fn recip(&self) -> Option<Self> {
        if self.num.is_zero() {
            return None;
        }
        let (num, den) = if self.num.is_negative() {
            (-self.den.clone(), -self.num.clone())
        } else {
            (self.den.clone(), self.num.clone())
        };
        Some(Rational { num, den })
    }

    fn reduce(&mut self) {
        if self.den.is_negative() {
            self.num = -std::mem::take(&mut self.num);
            self.den = -std::mem::take(&mut self.den);
        }
        if self.den.is_one() {
            return;
        }
        if self.num.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num /= &g;
            self.den /= &g;
        }
    }

    /// `self + rhs * scale` without intermediate clones on the integer path.
    pub fn add_product(&mut self, a: &Rational, b: &Rational) {
        if a.num.is_zero() || b.num.is_zero() {
            return;
        }
        if self.den.is_one() && a.den.is_one() && b.den.is_one() {
            self.num += &a.num * &b.num;
            return;
        }
        *self += &(a * b);
    }

    /// `self - rhs * scale`, fused like [`Rational::add_product`].
    pub fn sub_product(&mut self, a: &Rational, b: &Rational) {
        if a.num.is_zero() || b.num.is_zero() {
            return;
        }
        if self.den.is_one() && a.den.is_one() && b.den.is_one() {
            self.num -= &a.num * &b.num;
            return;
        }
        *self -= &(a * b);
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Rational::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// The exact rational value of a finite `f64` (every finite float is a
    /// dyadic rational). `None` for NaN or infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        // decompose into mantissa * 2^exp
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mantissa, exp) = if biased == 0 {
            (frac, -1074i64) // subnormal
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let num = BigInt::from(sign) * BigInt::from(mantissa);
        Some(if exp >= 0 {
            Rational::from_integer(num << (exp as usize))
        } else {
            Rational::new(num, BigInt::one() << ((-exp) as usize))
        })
    }

    /// Closest `f64`, correct to within a few ulps for any magnitude.
    pub fn to_f64(&self) -> f64 {
        if self.num.is_zero() {
            return 0.0;
        }
        let nb = self.num.bits() as i64;
        let db = self.den.bits() as i64;
        if nb < 1000 && db < 1000 {
            let n = self.num.to_f64().unwrap_or(f64::NAN);
            let d = self.den.to_f64().unwrap_or(f64::NAN);
            return n / d;
        }
        // keep ~96 top bits of each and rescale
        let kn = (nb - 96).max(0) as u64;
        let kd = (db - 96).max(0) as u64;
        let top_n = (&self.num >> kn).to_f64().unwrap_or(f64::NAN);
        let top_d = (&self.den >> kd).to_f64().unwrap_or(f64::NAN);
        let shift = kn as i32 - kd as i32;
        top_n / top_d * 2f64.powi(shift)
    }

    /// Exact decimal string with `decimals` fractional digits, rounding
    /// half-away-from-zero.
    pub fn to_decimal(&self, decimals: usize) -> String {
        let scale = BigInt::from(10u32).pow(decimals as u32);
        let scaled = self.num.abs() * &scale;
        let (mut q, r) = scaled.div_rem(&self.den);
        if &r * 2 >= self.den {
            q += 1;
        }
        let digits = q.to_string();
        let mut s = String::new();
        if self.num.is_negative() && !q.is_zero() {
            s.push('-');
        }
        if decimals == 0 {
            s.push_str(&digits);
            return s;
        }
        if digits.len() > decimals {
            let split = digits.len() - decimals;
            s.push_str(&digits[..split]);
            s.push('.');
            s.push_str(&digits[split..]);
        } else {
            s.push_str("0.");
            for _ in 0..decimals - digits.len() {
                s.push('0');
            }
            s.push_str(&digits);
        }
        s
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Self::from_integer(BigInt::from(v))
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Self::from_integer(v)
    }
}

/// Parses `"p/q"`, a plain integer, or a decimal string such as `"1.5"`
/// (decimals convert exactly).
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse {s:?} as a rational"));
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let num = BigInt::from_str(p.trim()).map_err(|_| bad())?;
            let den = BigInt::from_str(q.trim()).map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            return Ok(Rational::new(num, den));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int_part.trim_start().starts_with('-');
            let int: BigInt = if int_part.is_empty() || int_part == "-" {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|_| bad())?
            };
            let frac = BigInt::from_str(frac_part).map_err(|_| bad())?;
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let num = int * &scale + if negative { -frac } else { frac };
            return Ok(Rational::new(num, scale));
        }
        let num = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(Rational::from_integer(num))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        if rhs.num.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
            return;
        }
        self.num = &self.num * &rhs.den + &rhs.num * &self.den;
        self.den = &self.den * &rhs.den;
        self.reduce();
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        if rhs.num.is_zero() {
            return;
        }
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
            return;
        }
        self.num = &self.num * &rhs.den - &rhs.num * &self.den;
        self.den = &self.den * &rhs.den;
        self.reduce();
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Rational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Rational::from_integer(&self.num * &rhs.num);
        }
        // cross-reduce so the result needs no full gcd
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let num = (&self.num / &g1) * (&rhs.num / &g2);
        let den = (&self.den / &g2) * (&rhs.den / &g1);
        Rational { num, den }
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        let inv = rhs.recip().expect("division by zero rational");
        self * &inv
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(mut self) -> Rational {
        self.num = -self.num;
        self
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational { num: -self.num.clone(), den: self.den.clone() }
    }
}
