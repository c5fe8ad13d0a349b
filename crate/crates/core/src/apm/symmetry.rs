use super::ApmMatrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symmetry {
    /// A*_{n+1-j, n+1-i} = A_{i,j}
    Sapm,
    /// A*_{j,i} = A_{i,j}
    Tcapm,
    /// A_{n+1-i, n+1-j} = -A_{i,j}
    Htapm,
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Symmetry::Sapm => "SAPM",
            Symmetry::Tcapm => "TCAPM",
            Symmetry::Htapm => "HTAPM",
        })
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "SAPM" => Ok(Symmetry::Sapm),
            "TCAPM" => Ok(Symmetry::Tcapm),
            "HTAPM" => Ok(Symmetry::Htapm),
            _ => Err(Error::Parse(format!("unknown symmetry {s:?}"))),
        }
    }
}

pub fn symmetry_class(apm: &ApmMatrix) -> BTreeSet<Symmetry> {
    let n = apm.n();
    let all = |f: &dyn Fn(usize, usize) -> bool| (0..n).all(|i| (0..n).all(|j| f(i, j)));
    let mut out = BTreeSet::new();
    if all(&|i, j| apm.value(n - 1 - j, n - 1 - i).conj() == apm.value(i, j)) {
        out.insert(Symmetry::Sapm);
    }
    if all(&|i, j| apm.value(j, i).conj() == apm.value(i, j)) {
        out.insert(Symmetry::Tcapm);
    }
    if all(&|i, j| apm.value(n - 1 - i, n - 1 - j) == -apm.value(i, j)) {
        out.insert(Symmetry::Htapm);
    }
    out
}

/// q-binomial rows up to n via the q-Pascal rule.
fn q_binomials(n: usize, q: &BigInt) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::from(1)]];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let mut row = vec![BigInt::from(1); m + 1];
        let mut qk = BigInt::from(1);
        for k in 1..m {
            qk *= q;
            row[k] = &prev[k - 1] + &qk * &prev[k];
        }
        rows.push(row);
    }
    rows
}

/// B_{m+1}(q) = Σ_k [m choose k]_q B_k(q), B_0 = 1.
pub fn q_bell(n: usize, q: &BigInt) -> BigInt {
    let binoms = q_binomials(n.saturating_sub(1), q);
    let mut b = vec![BigInt::from(1)];
    for m in 0..n {
        let next = (0..=m).map(|k| &binoms[m][k] * &b[k]).sum();
        b.push(next);
    }
    b.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_bell_values() {
        let two = BigInt::from(2);
        let v: Vec<BigInt> = (0..=5).map(|n| q_bell(n, &two)).collect();
        assert_eq!(v, [1, 1, 2, 6, 28, 204].map(BigInt::from));
        let one = BigInt::from(1);
        assert_eq!(q_bell(5, &one), BigInt::from(52));
        assert_eq!(q_binomials(4, &two)[4], [1, 15, 35, 15, 1].map(BigInt::from));
    }

    #[test]
    fn zero_is_fully_symmetric() {
        assert_eq!(symmetry_class(&ApmMatrix::zero(3)).len(), 3);
    }
}
