//! Degree-two jets at T = 1.
//!
//! `Jet3` is the quotient ring Q[eps]/(eps^3) with eps = T - 1. Running the
//! generating-function assembly over this ring propagates the value and the
//! first two derivatives at T = 1 without ever materializing the full
//! coefficient polynomials, which is how the large-n means and variances are
//! extracted.

use std::fmt;
use std::ops::{AddAssign, SubAssign};

use super::rational::Rational;
use super::ring::Ring;

#[derive(Clone, PartialEq)]
pub struct Jet3 {
    pub a0: Rational,
    pub a1: Rational,
    pub a2: Rational,
}

impl Jet3 {
    pub fn new(a0: Rational, a1: Rational, a2: Rational) -> Self {
        Jet3 { a0, a1, a2 }
    }

    pub fn constant(a0: Rational) -> Self {
        Jet3 { a0, a1: Rational::zero(), a2: Rational::zero() }
    }

    /// T = 1 + eps.
    pub fn var() -> Self {
        Jet3::new(Rational::one(), Rational::one(), Rational::zero())
    }

    /// 1/T = 1 - eps + eps^2.
    pub fn var_inv() -> Self {
        Jet3::new(Rational::one(), Rational::from(-1), Rational::one())
    }
}

impl fmt::Debug for Jet3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}*eps + {}*eps^2)", self.a0, self.a1, self.a2)
    }
}

impl AddAssign<&Jet3> for Jet3 {
    fn add_assign(&mut self, rhs: &Jet3) {
        self.a0 += &rhs.a0;
        self.a1 += &rhs.a1;
        self.a2 += &rhs.a2;
    }
}

impl SubAssign<&Jet3> for Jet3 {
    fn sub_assign(&mut self, rhs: &Jet3) {
        self.a0 -= &rhs.a0;
        self.a1 -= &rhs.a1;
        self.a2 -= &rhs.a2;
    }
}

impl Ring for Jet3 {
    fn zero() -> Self {
        Jet3::constant(Rational::zero())
    }

    fn one() -> Self {
        Jet3::constant(Rational::one())
    }

    fn from_int(v: i64) -> Self {
        Jet3::constant(Rational::from(v))
    }

    fn from_bigint(v: &num_bigint::BigInt) -> Self {
        Jet3::constant(Rational::from_integer(v.clone()))
    }

    fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero() && self.a2.is_zero()
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = Jet3::zero();
        out.add_mul_assign(self, rhs);
        out
    }

    fn neg_assign(&mut self) {
        self.a0 = -std::mem::replace(&mut self.a0, Rational::zero());
        self.a1 = -std::mem::replace(&mut self.a1, Rational::zero());
        self.a2 = -std::mem::replace(&mut self.a2, Rational::zero());
    }

    /// Invertible iff the value part is nonzero:
    /// 1/(a0 + u) = (1 - u/a0 + (u/a0)^2) / a0 truncated at eps^3.
    fn inverse(&self) -> Option<Self> {
        let inv0 = self.a0.recip()?;
        let v1 = &self.a1 * &inv0;
        let v2 = &self.a2 * &inv0;
        let b1 = -&v1;
        let b2 = &(&v1 * &v1) - &v2;
        Some(Jet3::new(inv0.clone(), &b1 * &inv0, &b2 * &inv0))
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.a0.add_product(&a.a0, &b.a0);
        self.a1.add_product(&a.a0, &b.a1);
        self.a1.add_product(&a.a1, &b.a0);
        self.a2.add_product(&a.a0, &b.a2);
        self.a2.add_product(&a.a1, &b.a1);
        self.a2.add_product(&a.a2, &b.a0);
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        self.a0.sub_product(&a.a0, &b.a0);
        self.a1.sub_product(&a.a0, &b.a1);
        self.a1.sub_product(&a.a1, &b.a0);
        self.a2.sub_product(&a.a0, &b.a2);
        self.a2.sub_product(&a.a1, &b.a1);
        self.a2.sub_product(&a.a2, &b.a0);
    }
}
