//! Dense matrices over exact rings with fraction-free determinants.

use super::Ring;
use crate::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> ExactMatrix<R> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidParameter(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::InvalidParameter("ragged rows".into()));
        }
        Ok(Self { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn plus(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::InvalidParameter("shape mismatch".into()));
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(self.rows)
    }

    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> Result<R> {
        let n = self.require_square()?;
        if n == 0 {
            return Ok(R::one());
        }
        let mut a: Vec<Vec<R>> = (0..n).map(|i| self.row(i).to_vec()).collect();
        let mut negate = false;
        let mut prev = R::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&p| !a[p][k].is_zero()) {
                    Some(p) => {
                        a.swap(k, p);
                        negate = !negate;
                    }
                    None => return Ok(R::zero()),
                }
            }
            let (top, bottom) = a.split_at_mut(k + 1);
            let pivot_row = &top[k];
            for row in bottom.iter_mut() {
                let lead = row[k].clone();
                for j in k + 1..n {
                    let t = row[j].times(&pivot_row[k]).minus(&lead.times(&pivot_row[j]));
                    row[j] = t
                        .div_exact(&prev)
                        .expect("Bareiss quotient must be exact in an integral domain");
                }
                row[k] = R::zero();
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        Ok(if negate { d.negate() } else { d })
    }

    /// Determinant by Laplace expansion along the first row; oracle for small n.
    pub fn det_cofactor(&self) -> Result<R> {
        let n = self.require_square()?;
        if n > 9 {
            return Err(Error::TooLarge { what: "cofactor expansion size", limit: 9 });
        }
        let idx: Vec<usize> = (0..n).collect();
        Ok(cofactor(self, &idx, &idx))
    }

    /// Σ over all index subsets S of det(M[S,S]), the empty subset giving 1.
    pub fn sum_principal_minors(&self) -> Result<R> {
        let n = self.require_square()?;
        if n > 12 {
            return Err(Error::TooLarge { what: "principal-minor subset size", limit: 12 });
        }
        let mut total = R::zero();
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            total.add_assign_ref(&self.submatrix(&s, &s).det()?);
        }
        Ok(total)
    }
}

fn cofactor<R: Ring>(m: &ExactMatrix<R>, rows: &[usize], cols: &[usize]) -> R {
    if rows.is_empty() {
        return R::one();
    }
    let r0 = rows[0];
    let rest = &rows[1..];
    let mut acc = R::zero();
    for (k, &c) in cols.iter().enumerate() {
        let e = m.get(r0, c);
        if e.is_zero() {
            continue;
        }
        let sub: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let t = e.times(&cofactor(m, rest, &sub));
        acc = if k % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
    }
    acc
}

impl<R: Ring> fmt::Debug for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[R]> = (0..self.rows).map(|i| self.row(i)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<R: Ring + fmt::Display> fmt::Display for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(","))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn int_matrix(rows: &[&[i64]]) -> ExactMatrix<BigInt> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(int_matrix(&[&[1, 0], &[2, 3]]).det().unwrap(), BigInt::from(3));
        let m3 = int_matrix(&[&[1, 0, 0], &[2, 3, 2], &[4, 8, 13]]);
        assert_eq!(m3.det().unwrap(), BigInt::from(23));
        // needs a row swap
        let p = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(p.det().unwrap(), BigInt::from(-1));
        assert!(matches!(
            int_matrix(&[&[1, 2, 3]]).det(),
            Err(Error::NotSquare { rows: 1, cols: 3 })
        ));
    }

    #[test]
    fn principal_minor_sums() {
        let m2 = int_matrix(&[&[0, 0], &[2, 2]]);
        assert_eq!(m2.sum_principal_minors().unwrap(), BigInt::from(3));
        assert_eq!(ExactMatrix::<BigInt>::zeros(3, 3).sum_principal_minors().unwrap(), BigInt::from(1));
        let m3 = int_matrix(&[&[0, 0, 0], &[2, 2, 2], &[4, 8, 12]]);
        assert_eq!(m3.sum_principal_minors().unwrap(), BigInt::from(23));
    }
}
