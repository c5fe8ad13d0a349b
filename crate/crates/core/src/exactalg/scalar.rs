//! Dynamically typed scalars: the JSON encoding and ring-checked arithmetic
//! used at the command-line boundary.

use super::cyclotomic::{negacyclic_inverse, negacyclic_mul};
use super::{format_rational, parse_rational, Cyclotomic, Eisenstein, ExactMatrix, PolyUni, Ring};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;

use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic { k: u32, coeffs: Vec<BigRational> },
    Eisenstein(Eisenstein),
    Poly(Vec<Scalar>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Neg,
    Eq,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ArithOutcome {
    Value(Scalar),
    Bool(bool),
}

impl Scalar {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Scalar::Rational(BigRational::from_integer(v.into()))
    }

    fn ring_tag(&self) -> String {
        match self {
            Scalar::Rational(_) => "Q".into(),
            Scalar::Cyclotomic { k, .. } => format!("Q(zeta_2^{})", k + 1),
            Scalar::Eisenstein(_) => "Z[w]".into(),
            Scalar::Poly(c) => format!("{}[t]", c.first().map_or("?".into(), |x| x.ring_tag())),
        }
    }

    fn zero_like(&self) -> Scalar {
        match self {
            Scalar::Rational(_) => Scalar::Rational(BigRational::zero()),
            Scalar::Cyclotomic { k, .. } => {
                Scalar::Cyclotomic { k: *k, coeffs: vec![BigRational::zero(); 1 << k] }
            }
            Scalar::Eisenstein(_) => Scalar::Eisenstein(Eisenstein::ZERO),
            Scalar::Poly(_) => Scalar::Poly(Vec::new()),
        }
    }

    fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Cyclotomic { coeffs, .. } => coeffs.iter().all(|c| c.is_zero()),
            Scalar::Eisenstein(e) => e.is_zero(),
            Scalar::Poly(c) => c.iter().all(|x| x.is_zero()),
        }
    }

    fn mismatch(a: &Scalar, b: &Scalar) -> Error {
        Error::RingMismatch(format!("{} vs {}", a.ring_tag(), b.ring_tag()))
    }

    fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Cyclotomic { k, coeffs } => {
                Scalar::Cyclotomic { k: *k, coeffs: coeffs.iter().map(|c| -c).collect() }
            }
            Scalar::Eisenstein(e) => Scalar::Eisenstein(-*e),
            Scalar::Poly(c) => Scalar::Poly(c.iter().map(|x| x.neg()).collect()),
        }
    }

    fn add(&self, b: &Scalar) -> Result<Scalar> {
        Ok(match (self, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x + y),
            (Scalar::Cyclotomic { k, coeffs: x }, Scalar::Cyclotomic { k: k2, coeffs: y }) if k == k2 => {
                Scalar::Cyclotomic { k: *k, coeffs: x.iter().zip(y).map(|(a, b)| a + b).collect() }
            }
            (Scalar::Eisenstein(x), Scalar::Eisenstein(y)) => Scalar::Eisenstein(*x + *y),
            (Scalar::Poly(x), Scalar::Poly(y)) => {
                let n = x.len().max(y.len());
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    out.push(match (x.get(i), y.get(i)) {
                        (Some(a), Some(b)) => a.add(b)?,
                        (Some(a), None) => a.clone(),
                        (None, Some(b)) => b.clone(),
                        (None, None) => unreachable!(),
                    });
                }
                Scalar::Poly(trim(out))
            }
            _ => return Err(Self::mismatch(self, b)),
        })
    }

    fn mul(&self, b: &Scalar) -> Result<Scalar> {
        Ok(match (self, b) {
            (Scalar::Rational(x), Scalar::Rational(y)) => Scalar::Rational(x * y),
            (Scalar::Cyclotomic { k, coeffs: x }, Scalar::Cyclotomic { k: k2, coeffs: y }) if k == k2 => {
                Scalar::Cyclotomic { k: *k, coeffs: negacyclic_mul(x, y) }
            }
            (Scalar::Eisenstein(x), Scalar::Eisenstein(y)) => Scalar::Eisenstein(*x * *y),
            (Scalar::Poly(x), Scalar::Poly(y)) => {
                if x.is_empty() || y.is_empty() {
                    return Ok(Scalar::Poly(Vec::new()));
                }
                let z = x[0].zero_like();
                let mut out = vec![z; x.len() + y.len() - 1];
                for (i, a) in x.iter().enumerate() {
                    for (j, c) in y.iter().enumerate() {
                        out[i + j] = out[i + j].add(&a.mul(c)?)?;
                    }
                }
                Scalar::Poly(trim(out))
            }
            _ => return Err(Self::mismatch(self, b)),
        })
    }

    /// Multiplicative inverse of a nonzero rational or cyclotomic scalar.
    pub fn inverse(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(q) if !q.is_zero() => Ok(Scalar::Rational(q.recip())),
            Scalar::Cyclotomic { k, coeffs } => negacyclic_inverse(coeffs)
                .map(|c| Scalar::Cyclotomic { k: *k, coeffs: c })
                .ok_or(Error::DivisionByZero),
            Scalar::Rational(_) => Err(Error::DivisionByZero),
            _ => Err(Error::RingMismatch(format!("{} is not a field", self.ring_tag()))),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Scalar::Rational(q) => Value::String(format_rational(q)),
            Scalar::Cyclotomic { k, coeffs } => json!({
                "k": k,
                "coeffs": coeffs.iter().map(format_rational).collect::<Vec<_>>(),
            }),
            Scalar::Eisenstein(e) => json!({ "eisenstein": [e.a.to_string(), e.b.to_string()] }),
            Scalar::Poly(c) => Value::Array(c.iter().map(|x| x.to_json()).collect()),
        }
    }

    pub fn from_json(v: &Value) -> Result<Scalar> {
        let bad = || Error::Parse(format!("not a scalar: {v}"));
        match v {
            Value::String(s) => Ok(Scalar::Rational(parse_rational(s)?)),
            Value::Number(n) => Ok(Scalar::Rational(parse_rational(&n.to_string())?)),
            Value::Array(items) => {
                Ok(Scalar::Poly(items.iter().map(Scalar::from_json).collect::<Result<_>>()?))
            }
            Value::Object(m) => {
                if let Some(e) = m.get("eisenstein") {
                    let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(bad)?;
                    let parse = |x: &Value| -> Result<i64> {
                        x.as_str().and_then(|s| s.parse().ok()).ok_or_else(bad)
                    };
                    return Ok(Scalar::Eisenstein(Eisenstein::new(parse(&pair[0])?, parse(&pair[1])?)));
                }
                let k = m.get("k").and_then(Value::as_u64).ok_or_else(bad)? as u32;
                let coeffs = m
                    .get("coeffs")
                    .and_then(Value::as_array)
                    .ok_or_else(bad)?
                    .iter()
                    .map(|c| c.as_str().ok_or_else(bad).and_then(parse_rational))
                    .collect::<Result<Vec<_>>>()?;
                if k == 0 || k > 16 || coeffs.len() != 1usize << k {
                    return Err(bad());
                }
                Ok(Scalar::Cyclotomic { k, coeffs })
            }
            _ => Err(bad()),
        }
    }
}

fn trim(mut v: Vec<Scalar>) -> Vec<Scalar> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    v
}

/// Exact arithmetic on two scalars of the same ring. `Neg` ignores `b`.
pub fn ring_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<ArithOutcome> {
    Ok(match op {
        ArithOp::Add => ArithOutcome::Value(a.add(b)?),
        ArithOp::Sub => ArithOutcome::Value(a.add(&b.neg())?),
        ArithOp::Mul => ArithOutcome::Value(a.mul(b)?),
        ArithOp::Neg => ArithOutcome::Value(a.neg()),
        ArithOp::Eq => ArithOutcome::Bool(a.add(&b.neg())?.is_zero()),
    })
}

/// Conversion of typed values into the dynamic encoding.
pub trait ToScalar {
    fn to_scalar(&self) -> Scalar;
}

impl ToScalar for BigInt {
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(BigRational::from_integer(self.clone()))
    }
}

impl ToScalar for BigRational {
    fn to_scalar(&self) -> Scalar {
        Scalar::Rational(self.clone())
    }
}

impl<const K: u32> ToScalar for Cyclotomic<K> {
    fn to_scalar(&self) -> Scalar {
        Scalar::Cyclotomic { k: K, coeffs: self.coeffs().to_vec() }
    }
}

impl ToScalar for Eisenstein {
    fn to_scalar(&self) -> Scalar {
        Scalar::Eisenstein(*self)
    }
}

impl<R: Ring + ToScalar> ToScalar for PolyUni<R> {
    fn to_scalar(&self) -> Scalar {
        Scalar::Poly(self.coeffs().iter().map(|c| c.to_scalar()).collect())
    }
}

impl<R: Ring + ToScalar> ExactMatrix<R> {
    /// Rows of JSON-encoded scalars.
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows())
                .map(|i| Value::Array(self.row(i).iter().map(|x| x.to_scalar().to_json()).collect()))
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Cyclotomic16, Cyclotomic8};

    fn val(o: ArithOutcome) -> Scalar {
        match o {
            ArithOutcome::Value(s) => s,
            ArithOutcome::Bool(_) => panic!("expected a value"),
        }
    }

    #[test]
    fn arithmetic_examples() {
        let a = Scalar::Rational(rat(1, 2));
        let b = Scalar::Rational(rat(1, 3));
        assert_eq!(val(ring_arith(&a, &b, ArithOp::Add).unwrap()), Scalar::Rational(rat(5, 6)));
        let s2 = Cyclotomic8::sqrt2().to_scalar();
        assert_eq!(val(ring_arith(&s2, &s2, ArithOp::Mul).unwrap()), Cyclotomic8::from_int(2).to_scalar());
        let q4 = Cyclotomic16::zeta_pow(4).to_scalar();
        assert_eq!(val(ring_arith(&q4, &q4, ArithOp::Mul).unwrap()), Cyclotomic16::from_int(-1).to_scalar());
        assert!(matches!(ring_arith(&a, &s2, ArithOp::Add), Err(Error::RingMismatch(_))));
        assert_eq!(ring_arith(&s2, &s2, ArithOp::Eq).unwrap(), ArithOutcome::Bool(true));
    }

    #[test]
    fn json_round_trip() {
        let items = vec![
            Scalar::Rational(rat(-7, 3)),
            Cyclotomic8::sqrt2().to_scalar(),
            Scalar::Eisenstein(Eisenstein::new(2, -1)),
            crate::exactalg::int_poly(&[3, 14, 6]).to_scalar(),
        ];
        for s in items {
            let text = serde_json::to_string(&s.to_json()).unwrap();
            let back = Scalar::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
            assert_eq!(back, s);
        }
        assert_eq!(Scalar::Rational(rat(5, 6)).to_json(), Value::String("5/6".into()));
    }
}
