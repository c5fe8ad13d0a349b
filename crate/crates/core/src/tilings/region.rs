//! Finite regions of the square grid and their domino tilings.

use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;
use rustc_hash::FxHashMap;
use serde_json::{json, Value};
use std::fmt;

/// Cells of a bitmap, row 0 at the top. Cell (r, c) is black when r + c is
/// even.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl Region {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut cells = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                cells.push(f(r, c));
            }
        }
        Self { rows, cols, cells }
    }

    /// '#' marks a cell, '.' (or space) an empty square; one row per line.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text.lines().map(|l| l.trim_end()).filter(|l| !l.is_empty()).collect();
        let cols = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let mut cells = vec![false; lines.len() * cols];
        for (r, l) in lines.iter().enumerate() {
            for (c, ch) in l.chars().enumerate() {
                match ch {
                    '#' => cells[r * cols + c] = true,
                    '.' | ' ' => {}
                    _ => return Err(Error::Parse(format!("unexpected {ch:?} in region bitmap"))),
                }
            }
        }
        Ok(Self { rows: lines.len(), cols, cells })
    }

    /// The 2n × 2n square.
    pub fn square(n: usize) -> Self {
        Self::from_fn(2 * n, 2 * n, |_, _| true)
    }

    /// Inverted staircase: left-aligned rows of lengths 1, 1, 3, 3, ...,
    /// 2n-1, 2n-1 from the top.
    pub fn triangle(n: usize) -> Self {
        Self::from_fn(2 * n, (2 * n).saturating_sub(1), |r, c| c < 2 * (r / 2) + 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        r < self.rows && c < self.cols && self.cells[r * self.cols + c]
    }

    pub fn cell_count(&self) -> usize {
        self.cells.iter().filter(|&&b| b).count()
    }

    pub fn is_black(r: usize, c: usize) -> bool {
        (r + c) % 2 == 0
    }

    pub fn to_json(&self) -> Value {
        json!({ "region": self.to_string().lines().collect::<Vec<_>>() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let rows = v
            .get("region")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("expected {\"region\": [rows]}".into()))?;
        let text: Vec<&str> = rows
            .iter()
            .map(|r| r.as_str().ok_or_else(|| Error::Parse("region rows must be strings".into())))
            .collect::<Result<_>>()?;
        Self::parse(&text.join("\n"))
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let line: String = (0..self.cols).map(|c| if self.contains(r, c) { '#' } else { '.' }).collect();
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Number of domino tilings by a row-major broken-profile sweep: bit c of
/// the profile says the cell in column c of the current row is already
/// covered from above or from the left.
pub fn domino_matchings(region: &Region) -> Result<BigInt> {
    if region.cols > 32 {
        return Err(Error::TooLarge { what: "region width", limit: 32 });
    }
    if region.cell_count() % 2 == 1 {
        return Ok(BigInt::zero());
    }
    let w = region.cols;
    let mut cur: FxHashMap<u32, BigInt> = FxHashMap::default();
    cur.insert(0, BigInt::from(1));
    for r in 0..region.rows {
        for c in 0..w {
            let bit = 1u32 << c;
            let mut next: FxHashMap<u32, BigInt> = FxHashMap::default();
            let mut add = |m: u32, v: &BigInt| *next.entry(m).or_insert_with(BigInt::zero) += v;
            for (&mask, v) in &cur {
                if !region.contains(r, c) {
                    if mask & bit == 0 {
                        add(mask, v);
                    }
                } else if mask & bit != 0 {
                    add(mask & !bit, v);
                } else {
                    if region.contains(r + 1, c) {
                        add(mask | bit, v);
                    }
                    if region.contains(r, c + 1) && mask & (bit << 1) == 0 {
                        add(mask | (bit << 1), v);
                    }
                }
            }
            cur = next;
        }
    }
    Ok(cur.remove(&0).unwrap_or_default())
}

/// Top-left cell of a domino and its direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub r: usize,
    pub c: usize,
    pub horizontal: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TilingList {
    pub tilings: Vec<Vec<Domino>>,
    pub truncated: bool,
}

/// Tilings in a fixed order: the first uncovered cell (row-major) is
/// covered horizontally before vertically.
pub fn enumerate_tilings(region: &Region, limit: Option<usize>) -> TilingList {
    fn go(
        region: &Region,
        covered: &mut Vec<bool>,
        cur: &mut Vec<Domino>,
        out: &mut Vec<Vec<Domino>>,
        limit: Option<usize>,
    ) -> bool {
        let Some(idx) = (0..covered.len()).find(|&i| !covered[i]) else {
            if limit.is_some_and(|l| out.len() >= l) {
                return false;
            }
            out.push(cur.clone());
            return true;
        };
        let (r, c) = (idx / region.cols, idx % region.cols);
        let w = region.cols;
        if c + 1 < w && !covered[idx + 1] {
            covered[idx] = true;
            covered[idx + 1] = true;
            cur.push(Domino { r, c, horizontal: true });
            let ok = go(region, covered, cur, out, limit);
            cur.pop();
            covered[idx] = false;
            covered[idx + 1] = false;
            if !ok {
                return false;
            }
        }
        if r + 1 < region.rows && !covered[idx + w] {
            covered[idx] = true;
            covered[idx + w] = true;
            cur.push(Domino { r, c, horizontal: false });
            let ok = go(region, covered, cur, out, limit);
            cur.pop();
            covered[idx] = false;
            covered[idx + w] = false;
            if !ok {
                return false;
            }
        }
        true
    }
    // cells outside the region start covered
    let mut covered: Vec<bool> = region.cells.iter().map(|&b| !b).collect();
    let mut out = Vec::new();
    let complete = go(region, &mut covered, &mut Vec::new(), &mut out, limit);
    TilingList { tilings: out, truncated: !complete }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_regions() {
        assert_eq!(domino_matchings(&Region::square(1)).unwrap(), BigInt::from(2));
        assert_eq!(domino_matchings(&Region::square(2)).unwrap(), BigInt::from(36));
        assert_eq!(domino_matchings(&Region::square(4)).unwrap(), BigInt::from(12988816));
        assert_eq!(domino_matchings(&Region::triangle(2)).unwrap(), BigInt::from(3));
        assert_eq!(domino_matchings(&Region::parse("###").unwrap()).unwrap(), BigInt::zero());
    }

    #[test]
    fn listing_matches_count() {
        let t = Region::triangle(2);
        let l = enumerate_tilings(&t, None);
        assert_eq!(l.tilings.len(), 3);
        assert!(!l.truncated);
        let l = enumerate_tilings(&Region::square(2), Some(5));
        assert_eq!(l.tilings.len(), 5);
        assert!(l.truncated);
    }

    #[test]
    fn parse_round_trip() {
        let t = Region::triangle(3);
        assert_eq!(Region::parse(&t.to_string()).unwrap(), t);
        assert_eq!(Region::from_json(&t.to_json()).unwrap(), t);
    }
}
