//! Rational cyclotomic fields Q(ζ) with ζ a primitive 2^(K+1)-th root of unity.
//!
//! Elements are stored as 2^K rational coefficients modulo ζ^(2^K) + 1.

use super::{format_rational, Ring};
use num_bigint::BigInt;
use num_rational::BigRational;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic<const K: u32> {
    coeffs: Vec<BigRational>,
}

/// Q(i).
pub type GaussianRational = Cyclotomic<1>;
/// Q(ζ8), containing i and √2.
pub type Cyclotomic8 = Cyclotomic<2>;
/// Q(ζ16), containing q = e^(iπ/8).
pub type Cyclotomic16 = Cyclotomic<3>;

/// Product modulo x^N + 1 of two coefficient vectors of length N.
pub(crate) fn negacyclic_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len();
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let p = x * y;
            let k = i + j;
            if k < n {
                out[k] += p;
            } else {
                out[k - n] -= p;
            }
        }
    }
    out
}

/// Inverse modulo x^N + 1 by solving the multiplication system.
pub(crate) fn negacyclic_inverse(a: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    if a.iter().all(|c| c.is_zero()) {
        return None;
    }
    // column j of the system is a * x^j
    let mut m = vec![vec![BigRational::zero(); n + 1]; n];
    for j in 0..n {
        for (i, c) in a.iter().enumerate() {
            let k = i + j;
            if k < n {
                m[k][j] = c.clone();
            } else {
                m[k - n][j] = -c.clone();
            }
        }
    }
    m[0][n] = BigRational::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for c in col..=n {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let t = &m[col][c] * &f;
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

impl<const K: u32> Cyclotomic<K> {
    pub const DEGREE: usize = 1 << K;

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> crate::Result<Self> {
        if coeffs.len() != Self::DEGREE {
            return Err(crate::Error::RingMismatch(format!(
                "expected {} coefficients, got {}",
                Self::DEGREE,
                coeffs.len()
            )));
        }
        Ok(Self { coeffs })
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn from_rational(q: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); Self::DEGREE];
        coeffs[0] = q;
        Self { coeffs }
    }

    /// ζ^e for any integer exponent.
    pub fn zeta_pow(e: i64) -> Self {
        let n = Self::DEGREE as i64;
        let e = e.rem_euclid(2 * n);
        let mut coeffs = vec![BigRational::zero(); Self::DEGREE];
        if e < n {
            coeffs[e as usize] = BigRational::one();
        } else {
            coeffs[(e - n) as usize] = -BigRational::one();
        }
        Self { coeffs }
    }

    pub fn zeta() -> Self {
        Self::zeta_pow(1)
    }

    /// The imaginary unit ζ^(2^(K-1)).
    pub fn i() -> Self {
        Self::zeta_pow((Self::DEGREE / 2) as i64)
    }

    /// √2 = ζ8 + ζ8⁻¹; needs K ≥ 2.
    pub fn sqrt2() -> Self {
        assert!(K >= 2, "sqrt2 requires K >= 2");
        let q = (Self::DEGREE / 4) as i64;
        Self::zeta_pow(q).plus(&Self::zeta_pow(-q))
    }

    pub fn gaussian(re: BigRational, im: BigRational) -> Self {
        Self::from_rational(re).plus(&Self::i().times(&Self::from_rational(im)))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    /// Complex conjugation ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        let n = Self::DEGREE;
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[0] = self.coeffs[0].clone();
        for j in 1..n {
            coeffs[n - j] = -self.coeffs[j].clone();
        }
        Self { coeffs }
    }

    pub fn try_inverse(&self) -> crate::Result<Self> {
        negacyclic_inverse(&self.coeffs)
            .map(|coeffs| Self { coeffs })
            .ok_or(crate::Error::DivisionByZero)
    }

    /// Image in a larger field Q(ζ_L), L ≥ K.
    pub fn embed<const L: u32>(&self) -> Cyclotomic<L> {
        assert!(L >= K, "can only embed into a larger field");
        let step = 1usize << (L - K);
        let mut coeffs = vec![BigRational::zero(); 1 << L];
        for (j, c) in self.coeffs.iter().enumerate() {
            coeffs[j * step] = c.clone();
        }
        Cyclotomic { coeffs }
    }

    /// Preimage in a smaller field Q(ζ_L), if the element lies there.
    pub fn restrict<const L: u32>(&self) -> Option<Cyclotomic<L>> {
        assert!(L <= K);
        let step = 1usize << (K - L);
        let mut coeffs = Vec::with_capacity(1 << L);
        for (j, c) in self.coeffs.iter().enumerate() {
            if j % step == 0 {
                coeffs.push(c.clone());
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(Cyclotomic { coeffs })
    }

    /// The rational value, if the element is rational.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..].iter().all(|c| c.is_zero()).then(|| self.coeffs[0].clone())
    }

    /// The integer value, if the element is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.denom().is_one()).map(|q| q.numer().clone())
    }
}

impl GaussianRational {
    pub fn re(&self) -> &BigRational {
        &self.coeffs[0]
    }
    pub fn im(&self) -> &BigRational {
        &self.coeffs[1]
    }
    /// |x|² as a rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.coeffs[0] * &self.coeffs[0] + &self.coeffs[1] * &self.coeffs[1]
    }
}

impl<const K: u32> Ring for Cyclotomic<K> {
    fn zero() -> Self {
        Self { coeffs: vec![BigRational::zero(); Self::DEGREE] }
    }
    fn one() -> Self {
        Self::from_rational(BigRational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn plus(&self, rhs: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect() }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Self { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect() }
    }
    fn times(&self, rhs: &Self) -> Self {
        Self { coeffs: negacyclic_mul(&self.coeffs, &rhs.coeffs) }
    }
    fn negate(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn from_bigint(v: &BigInt) -> Self {
        Self::from_rational(BigRational::from_integer(v.clone()))
    }
    fn div_exact(&self, d: &Self) -> Option<Self> {
        d.try_inverse().ok().map(|inv| self.times(&inv))
    }
}

impl<const K: u32> fmt::Debug for Cyclotomic<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const K: u32> fmt::Display for Cyclotomic<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "({})*z", format_rational(c))?,
                _ => write!(f, "({})*z^{}", format_rational(c), j)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! cyclo_binop {
    ($tr:ident, $m:ident, $via:ident) => {
        impl<const K: u32> $tr for Cyclotomic<K> {
            type Output = Cyclotomic<K>;
            fn $m(self, rhs: Self) -> Self::Output {
                self.$via(&rhs)
            }
        }
        impl<'a, const K: u32> $tr<&'a Cyclotomic<K>> for &'a Cyclotomic<K> {
            type Output = Cyclotomic<K>;
            fn $m(self, rhs: Self) -> Self::Output {
                self.$via(rhs)
            }
        }
    };
}
cyclo_binop!(Add, add, plus);
cyclo_binop!(Sub, sub, minus);
cyclo_binop!(Mul, mul, times);

impl<const K: u32> Neg for Cyclotomic<K> {
    type Output = Self;
    fn neg(self) -> Self {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    #[test]
    fn defining_relations() {
        let s2 = Cyclotomic8::sqrt2();
        assert_eq!(s2.times(&s2), Cyclotomic8::from_int(2));
        let z = Cyclotomic8::zeta();
        assert_eq!(s2, z.minus(&z.pow(3)));
        let i = Cyclotomic8::i();
        assert_eq!(i.times(&i), Cyclotomic8::from_int(-1));
        let q = Cyclotomic16::zeta();
        assert_eq!(q.pow(8), Cyclotomic16::from_int(-1));
        let q4 = q.pow(4);
        assert_eq!(q4.times(&q4), Cyclotomic16::from_int(-1));
        assert_eq!(Cyclotomic16::sqrt2().pow(2), Cyclotomic16::from_int(2));
        // √2 = q² + q⁻² in Q(ζ16)
        assert_eq!(Cyclotomic16::sqrt2(), q.pow(2).plus(&Cyclotomic16::zeta_pow(-2)));
    }

    #[test]
    fn inverses() {
        let one_plus_i = GaussianRational::gaussian(rat(1, 1), rat(1, 1));
        let inv = one_plus_i.try_inverse().unwrap();
        assert_eq!(inv, GaussianRational::gaussian(rat(1, 2), rat(-1, 2)));
        let s2 = Cyclotomic8::sqrt2();
        assert_eq!(s2.try_inverse().unwrap(), s2.scale(&rat(1, 2)));
        let x = Cyclotomic8::one()
            .plus(&Cyclotomic8::i())
            .plus(&Cyclotomic8::i().times(&s2).scale(&rat(3, 7)));
        assert!(x.times(&x.try_inverse().unwrap()).is_one());
        assert!(matches!(Cyclotomic8::zero().try_inverse(), Err(crate::Error::DivisionByZero)));
    }

    #[test]
    fn embedding_and_conjugation() {
        let i1 = GaussianRational::i();
        assert_eq!(i1.embed::<3>(), Cyclotomic16::i());
        assert_eq!(Cyclotomic8::sqrt2().embed::<3>(), Cyclotomic16::sqrt2());
        assert_eq!(Cyclotomic16::i().restrict::<1>(), Some(i1.clone()));
        assert_eq!(Cyclotomic8::sqrt2().restrict::<1>(), None);
        assert_eq!(i1.conj(), i1.negate());
        let z = Cyclotomic16::zeta();
        assert!(z.times(&z.conj()).is_one());
    }
}
