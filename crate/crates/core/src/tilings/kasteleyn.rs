//! Closed-form count of domino tilings of the 2n × 2n square,
//! Π_{i,j=1..n} (4cos²(iπ/(2n+1)) + 4cos²(jπ/(2n+1))), in 512-bit floats.

use crate::{Error, Result};
use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

const PRECISION: usize = 512;

#[derive(Clone, Debug, PartialEq)]
pub struct KasteleynValue {
    pub value: BigInt,
    /// |product - value| / value
    pub residue: f64,
}

/// Nearest integer to a positive float, with the relative rounding residue.
fn round_positive(x: &BigFloat) -> Option<(BigInt, f64)> {
    let (words, _, sign, exp, _) = x.as_raw_parts()?;
    if sign != Sign::Pos {
        return None;
    }
    let mut m = BigUint::zero();
    for w in words.iter().rev() {
        m = (m << Word::BITS) + BigUint::from(*w);
    }
    // x = m · 2^(exp - bits(words))
    let shift = exp as i64 - (words.len() as i64 * Word::BITS as i64);
    if shift >= 0 {
        return Some((BigInt::from(m << shift as usize), 0.0));
    }
    let s = (-shift) as usize;
    let half = BigUint::from(1u8) << (s - 1);
    let rounded = (&m + &half) >> s;
    let back = &rounded << s;
    let diff = if back > m { &back - &m } else { &m - &back };
    let residue = diff.to_f64()? / m.to_f64()?;
    Some((BigInt::from(rounded), residue))
}

pub fn kasteleyn_square(n: usize) -> Result<KasteleynValue> {
    if n > 12 {
        return Err(Error::TooLarge { what: "Kasteleyn product size", limit: 12 });
    }
    let rm = RoundingMode::ToEven;
    let p = PRECISION;
    let mut cc = Consts::new().map_err(|e| Error::InvalidParameter(format!("float constants: {e:?}")))?;
    let pi = cc.pi(p, rm);
    let denom = BigFloat::from_u64(2 * n as u64 + 1, p);
    let four = BigFloat::from_u64(4, p);
    let terms: Vec<BigFloat> = (1..=n as u64)
        .map(|i| {
            let c = pi.mul(&BigFloat::from_u64(i, p), p, rm).div(&denom, p, rm).cos(p, rm, &mut cc);
            four.mul(&c.mul(&c, p, rm), p, rm)
        })
        .collect();
    let mut prod = BigFloat::from_u64(1, p);
    for a in &terms {
        for b in &terms {
            prod = prod.mul(&a.add(b, p, rm), p, rm);
        }
    }
    let (value, residue) =
        round_positive(&prod).ok_or_else(|| Error::Mismatch("Kasteleyn product is not a positive number".into()))?;
    if residue > 1e-6 {
        return Err(Error::Mismatch(format!("Kasteleyn product {value} has rounding residue {residue:e}")));
    }
    Ok(KasteleynValue { value, residue })
}
