//! Alternating phase matrices: the (h, v, d) reflection data of a
//! configuration, one triple per vertex.
//!
//! Matrix index (i, j) is 1-based with i the row counted from the top, so
//! vertex (x, y) of an n × n grid sits at i = n + 1 - y, j = x. Diagonal
//! ℓ = j - i runs from 1-n to n-1; its entries are read top to bottom.

mod symmetry;
mod turning;

pub use symmetry::{q_bell, symmetry_class, Symmetry};
pub use turning::{turning_profile, EdgeRef, PathTrace, TurningProfile};

use crate::exactalg::Eisenstein;
use crate::icemodel::{BoundaryKind, BoundarySpec, LatticeConfig};
use crate::{Error, Result};
use serde_json::Value;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ApmMatrix {
    n: usize,
    triples: Vec<(i8, i8, i8)>,
    values: Vec<Eisenstein>,
}

/// -ω·h + ω²·v = -v + d·ω.
pub fn triple_value(t: (i8, i8, i8)) -> Eisenstein {
    Eisenstein::new(-(t.1 as i64), t.2 as i64)
}

/// Inverse of [`triple_value`] on 0 and the sixth roots of unity.
pub fn value_triple(e: Eisenstein) -> Option<(i8, i8, i8)> {
    e.unit_label()?;
    let v = -e.a;
    let d = e.b;
    let h = -v - d;
    if h.abs() > 1 {
        return None;
    }
    Some((h as i8, v as i8, d as i8))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ApmType {
    One,
    Two,
    Three,
    Four,
}

impl ApmType {
    pub fn from_index(t: u32) -> Result<Self> {
        Ok(match t {
            1 => ApmType::One,
            2 => ApmType::Two,
            3 => ApmType::Three,
            4 => ApmType::Four,
            _ => return Err(Error::InvalidParameter(format!("APM type must be 1..4, got {t}"))),
        })
    }

    pub fn for_kind(kind: &BoundaryKind) -> Option<Self> {
        match kind {
            BoundaryKind::Dwbc1 => Some(ApmType::One),
            BoundaryKind::Dwbc2 => Some(ApmType::Two),
            BoundaryKind::Dwbc3 => Some(ApmType::Three),
            BoundaryKind::Dwbc4 => Some(ApmType::Four),
            _ => None,
        }
    }

    pub fn boundary_kind(self) -> BoundaryKind {
        match self {
            ApmType::One => BoundaryKind::Dwbc1,
            ApmType::Two => BoundaryKind::Dwbc2,
            ApmType::Three => BoundaryKind::Dwbc3,
            ApmType::Four => BoundaryKind::Dwbc4,
        }
    }
}

impl ApmMatrix {
    pub fn zero(n: usize) -> Self {
        Self { n, triples: vec![(0, 0, 0); n * n], values: vec![Eisenstein::ZERO; n * n] }
    }

    pub fn from_triples(n: usize, triples: Vec<(i8, i8, i8)>) -> Result<Self> {
        if triples.len() != n * n {
            return Err(Error::InvalidParameter("triple count must be n*n".into()));
        }
        for &(h, v, d) in &triples {
            if h + v + d != 0 || h.abs() > 1 || v.abs() > 1 || d.abs() > 1 {
                return Err(Error::InvalidParameter(format!("bad triple ({h},{v},{d})")));
            }
        }
        let values = triples.iter().map(|&t| triple_value(t)).collect();
        Ok(Self { n, triples, values })
    }

    pub fn from_values(n: usize, values: Vec<Eisenstein>) -> Result<Self> {
        let triples = values
            .iter()
            .map(|&e| value_triple(e).ok_or_else(|| Error::InvalidParameter(format!("bad entry {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_triples(n, triples)
    }

    /// Parse rows of labels "0", "1", "-1", "w", "-w", "w2", "-w2".
    pub fn from_labels(rows: &[&[&str]]) -> Result<Self> {
        let n = rows.len();
        let mut values = Vec::with_capacity(n * n);
        for r in rows {
            if r.len() != n {
                return Err(Error::InvalidParameter("matrix must be square".into()));
            }
            for s in r.iter() {
                values.push(
                    Eisenstein::from_unit_label(s)
                        .ok_or_else(|| Error::Parse(format!("bad APM entry {s:?}")))?,
                );
            }
        }
        Self::from_values(n, values)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Triple at 0-based (row, col).
    pub fn triple(&self, i: usize, j: usize) -> (i8, i8, i8) {
        self.triples[i * self.n + j]
    }

    /// Value at 0-based (row, col).
    pub fn value(&self, i: usize, j: usize) -> Eisenstein {
        self.values[i * self.n + j]
    }

    pub fn values(&self) -> &[Eisenstein] {
        &self.values
    }

    /// Rotation by 180° without conjugation.
    pub fn rotate180(&self) -> Self {
        let n = self.n;
        let mut t = self.triples.clone();
        for i in 0..n {
            for j in 0..n {
                t[i * n + j] = self.triple(n - 1 - i, n - 1 - j);
            }
        }
        Self::from_triples(n, t).expect("rotation keeps triples valid")
    }

    pub fn labels(&self) -> Vec<Vec<&'static str>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.value(i, j).unit_label().expect("unit entry")).collect())
            .collect()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.labels()
                .into_iter()
                .map(|r| Value::Array(r.into_iter().map(|s| Value::String(s.into())).collect()))
                .collect(),
        )
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("APM JSON must be a square array of labels".into());
        let rows = v.as_array().ok_or_else(bad)?;
        let owned: Vec<Vec<&str>> = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_str().ok_or_else(bad))
                    .collect::<Result<Vec<&str>>>()
            })
            .collect::<Result<_>>()?;
        let refs: Vec<&[&str]> = owned.iter().map(|r| r.as_slice()).collect();
        Self::from_labels(&refs)
    }

    fn row_seq(&self, i: usize, f: impl Fn((i8, i8, i8)) -> i8) -> Vec<i8> {
        (0..self.n).map(|j| f(self.triple(i, j))).filter(|&x| x != 0).collect()
    }

    fn col_seq(&self, j: usize, f: impl Fn((i8, i8, i8)) -> i8) -> Vec<i8> {
        (0..self.n).map(|i| f(self.triple(i, j))).filter(|&x| x != 0).collect()
    }

    /// 0-based (row, col) cells of diagonal ℓ = j - i, top to bottom.
    pub fn diagonal_cells(&self, l: i64) -> Vec<(usize, usize)> {
        let n = self.n as i64;
        let lo = 1.max(1 - l);
        let hi = n.min(n - l);
        (lo..=hi).map(|i| ((i - 1) as usize, (i - 1 + l) as usize)).collect()
    }

    fn diag_seq(&self, l: i64) -> Vec<i8> {
        self.diagonal_cells(l)
            .into_iter()
            .map(|(i, j)| self.triple(i, j).2)
            .filter(|&x| x != 0)
            .collect()
    }
}

impl fmt::Display for ApmMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.labels() {
            writeln!(f, "{}", r.iter().map(|s| format!("{s:>3}")).collect::<String>())?;
        }
        Ok(())
    }
}

/// The APM image of a configuration on a square grid.
pub fn to_apm(config: &LatticeConfig) -> Result<ApmMatrix> {
    let n = config.rows();
    if config.cols() != n {
        return Err(Error::InvalidConfig("APMs need a square grid".into()));
    }
    match BoundarySpec::for_config(config) {
        Ok(spec) => config.validate(&spec)?,
        Err(_) => {
            for x in 1..=n {
                for y in 1..=n {
                    if !config.env(x, y).is_valid() {
                        return Err(Error::InvalidConfig(format!("ice rule fails at ({x},{y})")));
                    }
                }
            }
        }
    }
    let mut triples = vec![(0, 0, 0); n * n];
    for x in 1..=n {
        for y in 1..=n {
            triples[(n - y) * n + (x - 1)] = config.env(x, y).triple();
        }
    }
    ApmMatrix::from_triples(n, triples)
}

/// Rebuild the configuration whose APM image is `apm`, propagating edge
/// occupancies from the boundary along rows, columns and diagonals.
pub fn from_apm(apm: &ApmMatrix, spec: &BoundarySpec) -> Result<LatticeConfig> {
    let n = apm.n();
    if spec.rows() != n || spec.cols() != n {
        return Err(Error::Incompatible("APM size differs from the grid".into()));
    }
    let mut c = spec.template().clone();
    let step = |prev: bool, delta: i8, what: &str| -> Result<bool> {
        match prev as i8 - delta {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::InvalidConfig(format!("{what} occupancy leaves {{0,1}}"))),
        }
    };
    for x in 1..=n {
        for y in (1..=n).rev() {
            let (h, v, d) = apm.triple(n - y, x - 1);
            let e = step(c.h(x - 1, y), h, "row")?;
            let s = step(c.v(x, y), v, "column")?;
            let se = step(c.d(x - 1, y), d, "diagonal")?;
            let t = spec.template();
            if (x == n && e != t.h(x, y))
                || (y == 1 && s != t.v(x, 0))
                || ((x == n || y == 1) && se != t.d(x, y - 1))
            {
                return Err(Error::InvalidConfig(format!("boundary mismatch at ({x},{y})")));
            }
            c.set_h(x, y, e);
            c.set_v(x, y - 1, s);
            c.set_d(x, y - 1, se);
        }
    }
    c.validate(spec)?;
    Ok(c)
}

fn alternates(seq: &[i8], first: i8, last: i8) -> bool {
    if seq.is_empty() {
        return first != last;
    }
    seq[0] == first && *seq.last().unwrap() == last && seq.windows(2).all(|w| w[0] == -w[1])
}

/// Row, column and diagonal alternation conditions of the given type.
pub fn validate(apm: &ApmMatrix, kind: ApmType) -> bool {
    let n = apm.n() as i64;
    let (row, col) = match kind {
        ApmType::Four => ((1, -1), (1, -1)),
        _ => ((1, 1), (-1, -1)),
    };
    for i in 0..apm.n() {
        if !alternates(&apm.row_seq(i, |t| t.0), row.0, row.1) {
            return false;
        }
        if !alternates(&apm.col_seq(i, |t| t.1), col.0, col.1) {
            return false;
        }
    }
    for l in 1 - n..=n - 1 {
        let from_west = match kind {
            ApmType::One => l <= 0,
            ApmType::Two => l < 0,
            ApmType::Three | ApmType::Four => false,
        };
        let (a, b) = if from_west { (1, -1) } else { (-1, 1) };
        if !alternates(&apm.diag_seq(l), a, b) {
            return false;
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq)]
pub struct SumRuleReport {
    pub total: Eisenstein,
    pub row_sums: Vec<Eisenstein>,
    pub col_sums: Vec<Eisenstein>,
    /// Indexed by ℓ + n - 1.
    pub diag_sums: Vec<Eisenstein>,
    pub violations: Vec<String>,
}

impl SumRuleReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Total n for types 1–3; total 0 plus row sums in ω²ℤ, column sums in ωℤ
/// and diagonal sums in ℤ for type 4.
pub fn check_sum_rules(apm: &ApmMatrix, kind: ApmType) -> SumRuleReport {
    let n = apm.n();
    let row_sums: Vec<Eisenstein> = (0..n).map(|i| (0..n).map(|j| apm.value(i, j)).sum()).collect();
    let col_sums: Vec<Eisenstein> = (0..n).map(|j| (0..n).map(|i| apm.value(i, j)).sum()).collect();
    let ni = n as i64;
    let diag_sums: Vec<Eisenstein> = (1 - ni..=ni - 1)
        .map(|l| apm.diagonal_cells(l).into_iter().map(|(i, j)| apm.value(i, j)).sum())
        .collect();
    let total: Eisenstein = apm.values().iter().copied().sum();
    let mut violations = Vec::new();
    match kind {
        ApmType::Four => {
            if !total.is_zero() {
                violations.push(format!("total {total} != 0"));
            }
            for (i, s) in row_sums.iter().enumerate() {
                if s.omega2_multiple().is_none() {
                    violations.push(format!("row {} sum {s} not in w2*Z", i + 1));
                }
            }
            for (j, s) in col_sums.iter().enumerate() {
                if s.omega_multiple().is_none() {
                    violations.push(format!("column {} sum {s} not in w*Z", j + 1));
                }
            }
            for (k, s) in diag_sums.iter().enumerate() {
                if s.integer().is_none() {
                    violations.push(format!("diagonal {} sum {s} not in Z", k as i64 + 1 - ni));
                }
            }
        }
        _ => {
            if total != Eisenstein::new(ni, 0) {
                violations.push(format!("total {total} != {n}"));
            }
        }
    }
    SumRuleReport { total, row_sums, col_sums, diag_sums, violations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_dictionary() {
        let cases = [
            ((1, 0, -1), "-w"),
            ((-1, 0, 1), "w"),
            ((1, -1, 0), "1"),
            ((-1, 1, 0), "-1"),
            ((0, 1, -1), "w2"),
            ((0, -1, 1), "-w2"),
            ((0, 0, 0), "0"),
        ];
        for (t, l) in cases {
            assert_eq!(triple_value(t).unit_label(), Some(l), "{t:?}");
            assert_eq!(value_triple(triple_value(t)), Some(t));
        }
    }

    #[test]
    fn zero_matrix_types() {
        let z = ApmMatrix::zero(3);
        assert!(validate(&z, ApmType::Four));
        for t in [ApmType::One, ApmType::Two, ApmType::Three] {
            assert!(!validate(&z, t));
        }
    }
}
