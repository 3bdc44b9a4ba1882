//! The coefficient-ring abstraction used by [`QSeries`](super::QSeries).
//!
//! Series code is generic over any commutative ring with exact arithmetic.
//! Three rings are provided: [`Rational`] scalars, Laurent polynomials in the
//! hook-marking variable ([`CoeffPoly`](super::CoeffPoly)), and degree-two
//! jets at T = 1 ([`Jet3`](super::Jet3)).

use std::fmt::Debug;
use std::ops::{AddAssign, SubAssign};

use num_bigint::BigInt;

use super::rational::Rational;

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + 'static
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn from_bigint(v: &BigInt) -> Self;
    fn is_zero(&self) -> bool;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_assign(&mut self);

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self>;

    /// `self += a * b`. Hot path of every convolution; rings override it to
    /// avoid temporaries.
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self += &a.mul_ref(b);
        }
    }

    /// `self -= a * b`.
    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self -= &a.mul_ref(b);
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn one() -> Self {
        Rational::one()
    }

    fn from_int(v: i64) -> Self {
        Rational::from(v)
    }

    fn from_bigint(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn neg_assign(&mut self) {
        *self = -std::mem::replace(self, Rational::zero());
    }

    fn inverse(&self) -> Option<Self> {
        self.recip()
    }

    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        self.add_product(a, b);
    }

    fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        self.sub_product(a, b);
    }
}
