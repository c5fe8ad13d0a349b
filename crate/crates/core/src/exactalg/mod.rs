//! Exact scalar arithmetic and fraction-free linear algebra.
//!
//! The [`Ring`] trait is the common interface used by generating functions,
//! transfer-matrix sweeps and determinants. Method names avoid the `std::ops`
//! names so generic code never has to disambiguate.

mod cyclotomic;
mod eisenstein;
mod laurent;
mod matrix;
mod poly;
mod scalar;

pub use cyclotomic::{Cyclotomic, Cyclotomic16, Cyclotomic8, GaussianRational};
pub use eisenstein::Eisenstein;
pub use laurent::{laurent_is_zero, LaurentMulti};
pub use matrix::ExactMatrix;
pub use poly::{int_poly, PolyUni};
pub use scalar::{ring_arith, ArithOp, ArithOutcome, Scalar, ToScalar};

use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// Commutative ring with identity and exact arithmetic.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn from_bigint(v: &BigInt) -> Self;

    fn from_int(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Exact quotient `self / d` when it exists in the ring.
    fn div_exact(&self, d: &Self) -> Option<Self>;

    /// Multiplicative inverse, if `self` is a unit.
    fn inverse(&self) -> Option<Self> {
        Self::one().div_exact(self)
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.times(&base);
            }
        }
        acc
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.plus(rhs);
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_bigint(v: &BigInt) -> Self {
        v.clone()
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(d) {
            return None;
        }
        let (q, r) = num_integer::Integer::div_rem(self, d);
        num_traits::Zero::is_zero(&r).then_some(q)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negate(&self) -> Self {
        -self
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if num_traits::Zero::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        *self += rhs;
    }
}

/// Parse "p" or "p/q" into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<BigRational> {
    let bad = || crate::Error::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&q) {
                return Err(crate::Error::DivisionByZero);
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Format a rational as "p" or "p/q".
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_add_and_format() {
        let s = rat(1, 2).plus(&rat(1, 3));
        assert_eq!(format_rational(&s), "5/6");
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
        assert_eq!(parse_rational("-7").unwrap(), rat(-7, 1));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn bigint_exact_division() {
        let a = BigInt::from(12);
        assert_eq!(a.div_exact(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(a.div_exact(&BigInt::from(5)), None);
        assert_eq!(BigInt::from(3).pow(4), BigInt::from(81));
    }
}
