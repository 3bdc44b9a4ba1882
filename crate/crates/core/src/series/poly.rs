//! Laurent polynomials in the hook-marking variable T.
//!
//! Invariants:
//!
//! * `terms` maps exponent -> coefficient and never stores a zero
//!   coefficient;
//! * exponents may be negative while intermediate expressions carry 1/T
//!   prefactors; assembled generating-function coefficients are asserted to
//!   be honest polynomials downstream.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, SubAssign};

use crate::error::{Error, Result};

use super::rational::Rational;
use super::ring::Ring;

#[derive(Clone, PartialEq, Default)]
pub struct CoeffPoly {
    terms: BTreeMap<i64, Rational>,
}

impl CoeffPoly {
    pub fn new() -> Self {
        CoeffPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(coeff: Rational, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        CoeffPoly { terms }
    }

    /// The variable T.
    pub fn var() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    /// The inverse variable 1/T.
    pub fn var_inv() -> Self {
        Self::monomial(Rational::one(), -1)
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        self.terms.get(&exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Largest exponent with a nonzero coefficient; `None` for the zero
    /// polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// True when no negative exponent occurs (vacuously for zero).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().map_or(true, |e| e >= 0)
    }

    /// Exact evaluation at a rational point. Fails only when a negative
    /// exponent meets `t0 == 0`.
    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        // Horner over descending exponents, with an exact power fix-up for
        // exponent gaps; negative exponents are evaluated against 1/t0.
        let (neg, nonneg): (Vec<_>, Vec<_>) = self.terms.iter().partition(|(e, _)| **e < 0);
        let mut out = Self::horner(nonneg.iter().rev().map(|(e, c)| (**e as u32, *c)), t0);
        if !neg.is_empty() {
            let inv = t0.recip().ok_or(Error::LaurentAtZero)?;
            let neg_part =
                Self::horner(neg.iter().map(|(e, c)| ((-**e) as u32, *c)), &inv);
            out += &neg_part;
        }
        Ok(out)
    }

    fn horner<'a>(descending: impl Iterator<Item = (u32, &'a Rational)>, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        let mut prev_exp: Option<u32> = None;
        for (e, c) in descending {
            if let Some(p) = prev_exp {
                acc = &acc * &x.pow(p - e);
            }
            acc += c;
            prev_exp = Some(e);
        }
        match prev_exp {
            Some(e) => &acc * &x.pow(e),
            None => Rational::zero(),
        }
    }

    fn insert_add(&mut self, exp: i64, val: &Rational, subtract: bool) {
        if val.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                let c = if subtract { -val } else { val.clone() };
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                if subtract {
                    *o.get_mut() -= val;
                } else {
                    *o.get_mut() += val;
                }
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*T")?,
                _ => write!(f, "{c}*T^{e}")?,
            }
        }
        Ok(())
    }
}

impl AddAssign<&CoeffPoly> for CoeffPoly {
    fn add_assign(&mut self, rhs: &CoeffPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c, false);
        }
    }
}

impl SubAssign<&CoeffPoly> for CoeffPoly {
    fn sub_assign(&mut self, rhs: &CoeffPoly) {
        for (e, c) in &rhs.terms {
            self.insert_add(*e, c, true);
        }
    }
}

impl Ring for CoeffPoly {
    fn zero() -> Self {
        CoeffPoly::new()
    }

    fn one() -> Self {
        CoeffPoly::constant(Rational::one())
    }

    fn from_int(v: i64) -> Self {
        CoeffPoly::constant(Rational::from(v))
    }

    fn from_bigint(v: &num_bigint::BigInt) -> Self {
        CoeffPoly::constant(Rational::from_integer(v.clone()))
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = CoeffPoly::new();
        out.add_mul_assign(self, rhs);
        out
    }

    fn neg_assign(&mut self) {
        for c in self.terms.values_mut() {
            let v = std::mem::replace(c, Rational::zero());
            *c = -v;
        }
    }

    /// Only monomials are units in the Laurent ring.
    fn inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(CoeffPoly::monomial(c.recip()?, -e))
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        let (small, large) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let prod = ca * cb;
                self.insert_add(ea + eb, &prod, false);
            }
        }
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        let (small, large) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
        for (ea, ca) in &small.terms {
            for (eb, cb) in &large.terms {
                let prod = ca * cb;
                self.insert_add(ea + eb, &prod, true);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    /// T^2 - 1
    fn t2m1() -> CoeffPoly {
        let mut p = CoeffPoly::var().mul_ref(&CoeffPoly::var());
        p -= &CoeffPoly::one();
        p
    }

    #[test]
    fn construction_drops_zeros() {
        assert!(CoeffPoly::monomial(Rational::zero(), 3).is_zero());
        let mut p = CoeffPoly::var();
        p -= &CoeffPoly::var();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn multiplication() {
        // (T^2-1)^2 = T^4 - 2T^2 + 1
        let sq = t2m1().mul_ref(&t2m1());
        assert_eq!(sq.coeff(4), q("1"));
        assert_eq!(sq.coeff(2), q("-2"));
        assert_eq!(sq.coeff(0), q("1"));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn laurent_inverse() {
        let m = CoeffPoly::monomial(q("-2/3"), -4);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul_ref(&inv), CoeffPoly::one());
        assert!(t2m1().inverse().is_none());
        assert!(CoeffPoly::new().inverse().is_none());
    }

    #[test]
    fn eval_horner() {
        // 2T^3 - T + 1/2 at T = 3/2
        let mut p = CoeffPoly::monomial(q("2"), 3);
        p += &CoeffPoly::monomial(q("-1"), 1);
        p += &CoeffPoly::constant(q("1/2"));
        assert_eq!(p.eval(&q("3/2")).unwrap(), q("23/4"));
    }

    #[test]
    fn eval_laurent() {
        // T^-2 + T at T = 1/2 -> 4 + 1/2
        let mut p = CoeffPoly::monomial(q("1"), -2);
        p += &CoeffPoly::var();
        assert_eq!(p.eval(&q("1/2")).unwrap(), q("9/2"));
        assert!(matches!(p.eval(&Rational::zero()), Err(Error::LaurentAtZero)));
        // polynomials evaluate fine at zero
        assert_eq!(t2m1().eval(&Rational::zero()).unwrap(), q("-1"));
    }

    #[test]
    fn polynomiality_predicate() {
        assert!(t2m1().is_polynomial());
        assert!(CoeffPoly::new().is_polynomial());
        assert!(!CoeffPoly::var_inv().is_polynomial());
    }
}
