//! Dense univariate polynomials, constant term first.

use super::Ring;
use num_bigint::BigInt;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyUni<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> PolyUni<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_coeffs(vec![R::zero(), R::one()])
    }

    /// c·x^k.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::from_coeffs(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        let mut acc = R::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(x).plus(c);
        }
        acc
    }

    /// self(p(x)).
    pub fn compose(&self, p: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.times(p).plus(&Self::constant(c.clone()));
        }
        acc
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> PolyUni<S> {
        PolyUni::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.times(c)).collect())
    }

    /// Quotient and remainder by a divisor whose leading coefficient divides
    /// every intermediate leading coefficient. None if that fails.
    pub fn div_rem(&self, d: &Self) -> Option<(Self, Self)> {
        let dl = d.leading()?;
        let dd = d.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Self::zero(), self.clone()));
        }
        let mut quot = vec![R::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top.div_exact(dl)?;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].minus(&q.times(c));
            }
            quot[k] = q;
        }
        Some((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }
}

impl<R: Ring> Ring for PolyUni<R> {
    fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn plus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k).plus(&rhs.coeff(k))).collect())
    }
    fn minus(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs((0..n).map(|k| self.coeff(k).minus(&rhs.coeff(k))).collect())
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].add_assign_ref(&a.times(b));
            }
        }
        Self::from_coeffs(out)
    }
    fn negate(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c.negate()).collect() }
    }
    fn from_bigint(v: &BigInt) -> Self {
        Self::constant(R::from_bigint(v))
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(d)?;
        r.is_zero().then_some(q)
    }
}

impl<R: Ring + fmt::Display> PolyUni<R> {
    /// Render as "3 + 14τ + 6τ^2" with the given variable name.
    pub fn to_string_var(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let cs = if cs.contains(' ') { format!("({cs})") } else { cs };
            let term = match k {
                0 => cs,
                _ => {
                    let pw = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                    if c.is_one() {
                        pw
                    } else {
                        format!("{cs}{pw}")
                    }
                }
            };
            parts.push(term);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl<R: Ring + fmt::Display> fmt::Display for PolyUni<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("τ"))
    }
}

impl<R: Ring> fmt::Debug for PolyUni<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.coeffs).finish()
    }
}

macro_rules! poly_binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl<R: Ring> $tr for PolyUni<R> {
            type Output = PolyUni<R>;
            fn $m(self, rhs: Self) -> Self::Output {
                self.$via(&rhs)
            }
        }
        impl<'a, R: Ring> $tr<&'a PolyUni<R>> for &'a PolyUni<R> {
            type Output = PolyUni<R>;
            fn $m(self, rhs: Self) -> Self::Output {
                self.$via(rhs)
            }
        }
    };
}
poly_binop!(Add, add, plus);
poly_binop!(Sub, sub, minus);
poly_binop!(Mul, mul, times);

impl<R: Ring> Neg for PolyUni<R> {
    type Output = Self;
    fn neg(self) -> Self {
        self.negate()
    }
}

/// Integer polynomial from i64 coefficients.
pub fn int_poly(c: &[i64]) -> PolyUni<BigInt> {
    PolyUni::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let p = int_poly(&[1, 2]);
        let q = int_poly(&[3, 0, 1]);
        assert_eq!(p.times(&q), int_poly(&[3, 6, 1, 2]));
        assert_eq!(int_poly(&[3, 14, 6]).to_string(), "3 + 14τ + 6τ^2");
        assert_eq!(int_poly(&[0, -1]).to_string(), "-1τ");
        assert_eq!(p.eval(&BigInt::from(2)), BigInt::from(5));
        assert_eq!(q.compose(&p), int_poly(&[4, 4, 4]));
        assert_eq!(int_poly(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn exact_division() {
        let p = int_poly(&[1, 2]);
        let q = int_poly(&[3, 0, 1]);
        assert_eq!(p.times(&q).div_exact(&q), Some(p.clone()));
        assert_eq!(q.div_exact(&p), None);
        assert_eq!(int_poly(&[2, 4]).div_exact(&int_poly(&[2])), Some(p));
    }
}
