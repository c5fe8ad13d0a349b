//! Sparse multivariate Laurent polynomials with signed exponents.

use super::Ring;
use crate::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, PartialEq)]
pub struct LaurentMulti<R> {
    vars: Arc<[String]>,
    terms: BTreeMap<Vec<i32>, R>,
}

impl<R: Ring> LaurentMulti<R> {
    pub fn zero(vars: &[&str]) -> Self {
        Self { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    fn empty_like(&self) -> Self {
        Self { vars: self.vars.clone(), terms: BTreeMap::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn constant_like(&self, c: R) -> Self {
        let mut out = self.empty_like();
        out.insert(vec![0; self.vars.len()], c);
        out
    }

    /// c · Π vars^exps.
    pub fn monomial_like(&self, exps: Vec<i32>, c: R) -> Result<Self> {
        if exps.len() != self.vars.len() {
            return Err(Error::RingMismatch("exponent vector length".into()));
        }
        let mut out = self.empty_like();
        out.insert(exps, c);
        Ok(out)
    }

    /// The named variable as a polynomial in the same ring.
    pub fn var_like(&self, name: &str) -> Result<Self> {
        let k = self
            .vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::RingMismatch(format!("unknown variable {name}")))?;
        let mut e = vec![0; self.vars.len()];
        e[k] = 1;
        self.monomial_like(e, R::one())
    }

    fn insert(&mut self, e: Vec<i32>, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                *x = x.plus(&c);
                if x.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.vars != rhs.vars {
            return Err(Error::RingMismatch(format!(
                "variables {:?} vs {:?}",
                self.vars, rhs.vars
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negate())).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = self.empty_like();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea
                    .iter()
                    .zip(eb)
                    .map(|(x, y)| x.checked_add(*y).ok_or(Error::ExponentOverflow))
                    .collect::<Result<Vec<i32>>>()?;
                out.insert(e, ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = self.constant_like(R::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiply by a monomial (possibly with negative exponents).
    pub fn shift(&self, exps: &[i32]) -> Result<Self> {
        self.mul(&self.monomial_like(exps.to_vec(), R::one())?)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &R)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
}

/// True iff every coefficient vanishes.
pub fn laurent_is_zero<R: Ring>(e: &LaurentMulti<R>) -> bool {
    e.is_zero()
}

impl<R: Ring + fmt::Display> fmt::Display for LaurentMulti<R> {
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
            write!(f, "({c})")?;
            for (v, k) in self.vars.iter().zip(e) {
                match k {
                    0 => {}
                    1 => write!(f, "*{v}")?,
                    k => write!(f, "*{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for LaurentMulti<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type L = LaurentMulti<BigInt>;

    #[test]
    fn cancellation_and_inverse_powers() {
        let z = L::zero(&["q", "t"]);
        assert!(z.is_zero());
        let q = z.var_like("q").unwrap();
        assert!(laurent_is_zero(&q.sub(&q).unwrap()));
        let qinv = z.monomial_like(vec![-1, 0], BigInt::from(1)).unwrap();
        assert_eq!(q.mul(&qinv).unwrap(), z.constant_like(BigInt::from(1)));
        assert_eq!(q.pow(3).unwrap().num_terms(), 1);
    }

    #[test]
    fn mismatch_and_overflow() {
        let a = L::zero(&["x"]).var_like("x").unwrap();
        let b = L::zero(&["y"]).var_like("y").unwrap();
        assert!(matches!(a.add(&b), Err(Error::RingMismatch(_))));
        let big = a.monomial_like(vec![i32::MAX], BigInt::from(1)).unwrap();
        assert!(matches!(big.mul(&a), Err(Error::ExponentOverflow)));
    }
}
