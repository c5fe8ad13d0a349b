//! Schroder paths.
//!
//! Restricted paths run from (i, 0) to (0, j) with steps left (-1,0),
//! up (0,1) and diagonal (-1,1), the last step not up. Strip paths run
//! from (0, a) to (M, b) with steps (1,1), (1,-1), (2,0) and stay in
//! 0 ≤ y ≤ L.

use crate::exactalg::{ExactMatrix, PolyUni, Ring};
use crate::genfun::{build_refined_t4_matrix, build_t4_matrix, RefinedType};
use crate::{Error, Result};
use num_bigint::BigInt;
use rustc_hash::FxHashMap;

/// Number of restricted Schroder paths from (i, 0) to (0, j). The empty
/// path has no last step and is not counted.
pub fn restricted_schroder(i: usize, j: usize) -> BigInt {
    // paths from (i, 0) to (x, y), split by whether the last step was up
    let mut up = vec![vec![BigInt::from(0); j + 1]; i + 1];
    let mut other = vec![vec![BigInt::from(0); j + 1]; i + 1];
    for x in (0..=i).rev() {
        for y in 0..=j {
            if x == i && y == 0 {
                continue;
            }
            let reach = |xx: usize, yy: usize| -> BigInt {
                if xx == i && yy == 0 {
                    BigInt::from(1)
                } else {
                    &up[xx][yy] + &other[xx][yy]
                }
            };
            let u = if y > 0 { reach(x, y - 1) } else { BigInt::from(0) };
            let mut o = BigInt::from(0);
            if x < i {
                o += reach(x + 1, y);
                if y > 0 {
                    o += reach(x + 1, y - 1);
                }
            }
            up[x][y] = u;
            other[x][y] = o;
        }
    }
    other[0][j].clone()
}

/// Memo of S^{(L)}_{a,b}(M) for one strip height L, filled by the
/// recursion on the starting height.
#[derive(Clone, Debug)]
pub struct StripSchroderTable {
    l: usize,
    /// per end height b: levels[M][a]
    memo: FxHashMap<usize, Vec<Vec<BigInt>>>,
}

impl StripSchroderTable {
    pub fn new(l: usize) -> Self {
        Self { l, memo: FxHashMap::default() }
    }

    pub fn height(&self) -> usize {
        self.l
    }

    pub fn get(&mut self, a: i64, b: i64, m: usize) -> BigInt {
        let l = self.l as i64;
        if a < 0 || a > l || b < 0 || b > l {
            return BigInt::from(0);
        }
        let width = self.l + 1;
        let levels = self.memo.entry(b as usize).or_insert_with(|| {
            let mut first = vec![BigInt::from(0); width];
            first[b as usize] = BigInt::from(1);
            vec![first]
        });
        while levels.len() <= m {
            let mm = levels.len();
            let row: Vec<BigInt> = (0..width)
                .map(|a| {
                    let mut s = BigInt::from(0);
                    if mm >= 2 {
                        s += &levels[mm - 2][a];
                    }
                    if a >= 1 {
                        s += &levels[mm - 1][a - 1];
                    }
                    if a < width - 1 {
                        s += &levels[mm - 1][a + 1];
                    }
                    s
                })
                .collect();
            levels.push(row);
        }
        levels[m][a as usize].clone()
    }
}

pub fn strip_schroder(a: i64, b: i64, l: usize, m: usize) -> BigInt {
    StripSchroderTable::new(l).get(a, b, m)
}

fn lgv_matrix(n: usize, l: usize, entry: impl Fn(usize, usize) -> (i64, i64, usize)) -> ExactMatrix<BigInt> {
    let mut t = StripSchroderTable::new(l);
    ExactMatrix::from_fn(n, n, |i, j| {
        let (a, b, len) = entry(i, j);
        t.get(a, b, len)
    })
}

/// LGV matrix of the (extended) triangle: S^{(2n-1+k)}_{2i,2j}(2j) for
/// the even form, S^{(2n-1+k)}_{2i,2j+1}(2j+1) for the odd form.
pub fn triangle_lgv_matrix(n: usize, k: usize, odd_form: bool) -> ExactMatrix<BigInt> {
    let l = (2 * n + k).saturating_sub(1);
    let e = odd_form as usize;
    lgv_matrix(n, l, |i, j| (2 * i as i64, (2 * j + e) as i64, 2 * j + e))
}

/// Both LGV forms of the triangle count.
pub fn triangle_forms(n: usize) -> (BigInt, BigInt) {
    let b = triangle_lgv_matrix(n, 0, false).det().expect("square");
    let c = triangle_lgv_matrix(n, 0, true).det().expect("square");
    (b, c)
}

/// Domino tilings of the triangle T_n; errors if the two forms disagree.
pub fn triangle_count(n: usize) -> Result<BigInt> {
    let (b, c) = triangle_forms(n);
    if b != c {
        return Err(Error::Mismatch(format!("triangle forms disagree at n={n}: {b} vs {c}")));
    }
    Ok(b)
}

/// Tilings of the triangle with its strip raised by k.
pub fn extended_triangle_count(n: usize, k: usize) -> BigInt {
    triangle_lgv_matrix(n, k, true).det().expect("square")
}

/// Single-path values S^{(b+1)}_{1,b}(2a+b+1) for c = 1 and
/// S^{(b)}_{0,b}(2c+b) for a = 0.
pub fn conjectured_nabc(a: usize, b: usize, c: usize) -> Option<BigInt> {
    if c == 1 {
        Some(strip_schroder(1, b as i64, b + 1, 2 * a + b + 1))
    } else if a == 0 {
        Some(strip_schroder(0, b as i64, b, 2 * c + b))
    } else {
        None
    }
}

/// det(I_n + θ·M_n).
pub fn t4_count<R: Ring>(n: usize, theta: &R) -> R {
    build_t4_matrix(n, Some(theta)).det().expect("square")
}

/// Σ over subsets S of det(M_n[S, S]): the non-intersecting path families
/// with symmetric endpoints, summed.
pub fn t4_by_principal_minors(n: usize) -> Result<BigInt> {
    let m = build_t4_matrix::<BigInt>(n, Some(&BigInt::from(0)));
    let full = build_t4_matrix::<BigInt>(n, None);
    let bare = ExactMatrix::from_fn(n, n, |i, j| full.get(i, j) - m.get(i, j));
    bare.sum_principal_minors()
}

pub fn t4_refined(n: usize, kind: RefinedType) -> PolyUni<BigInt> {
    build_refined_t4_matrix(n, kind).det().expect("square")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn restricted_values() {
        for j in 1..5 {
            assert_eq!(restricted_schroder(0, j), BigInt::from(0));
            assert_eq!(restricted_schroder(1, j), BigInt::from(2));
        }
        for i in 0..6 {
            assert_eq!(restricted_schroder(i, 1), BigInt::from(2 * i));
        }
    }

    #[test]
    fn strip_values() {
        assert_eq!(strip_schroder(2, 2, 3, 0), BigInt::from(1));
        assert_eq!(strip_schroder(2, 3, 3, 3), BigInt::from(4));
        assert_eq!(strip_schroder(0, 1, 1, 7), BigInt::from(21));
        assert_eq!(strip_schroder(-1, 0, 3, 2), BigInt::from(0));
    }

    #[test]
    fn triangle_small() {
        let v: Vec<BigInt> = (1..=4).map(|n| triangle_count(n).unwrap()).collect();
        assert_eq!(v, [1, 3, 29, 901].map(BigInt::from));
    }

    #[test]
    fn t4_small() {
        assert_eq!(t4_count(3, &BigInt::from(1)), BigInt::from(23));
        assert_eq!(t4_count(4, &BigInt::from(0)), BigInt::from(1));
        assert_eq!(t4_by_principal_minors(3).unwrap(), BigInt::from(23));
    }
}
