//! Boundary prescriptions: which external edges carry a path.

use super::config::LatticeConfig;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// External-edge pattern of a staggered six-vertex grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StaggeredKind {
    /// Alternating West and South boundaries.
    Ws,
    /// Alternating on all four sides.
    Wsen,
    /// Ordinary domain walls: all West and South edges occupied.
    DomainWall,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BoundaryKind {
    Dwbc1,
    Dwbc2,
    Dwbc3,
    Dwbc4,
    Pentagon { n: usize, k: usize },
    Rect4 { a: usize, b: usize, c: usize },
    Square6v,
    Staggered(StaggeredKind),
    /// Arbitrary template; only produced by transformations.
    Custom,
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryKind::Dwbc1 => write!(f, "DWBC1"),
            BoundaryKind::Dwbc2 => write!(f, "DWBC2"),
            BoundaryKind::Dwbc3 => write!(f, "DWBC3"),
            BoundaryKind::Dwbc4 => write!(f, "DWBC4"),
            BoundaryKind::Pentagon { n, k } => write!(f, "PENTAGON({n},{k})"),
            BoundaryKind::Rect4 { a, b, c } => write!(f, "RECT4({a},{b},{c})"),
            BoundaryKind::Square6v => write!(f, "SQUARE6V"),
            BoundaryKind::Staggered(StaggeredKind::Ws) => write!(f, "STAGGERED_WS"),
            BoundaryKind::Staggered(StaggeredKind::Wsen) => write!(f, "STAGGERED_WSEN"),
            BoundaryKind::Staggered(StaggeredKind::DomainWall) => write!(f, "STAGGERED_DW"),
            BoundaryKind::Custom => write!(f, "CUSTOM"),
        }
    }
}

impl FromStr for BoundaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown boundary kind {s:?}"));
        let args = |inner: &str| -> Result<Vec<usize>> {
            inner.split(',').map(|x| x.trim().parse::<usize>().map_err(|_| bad())).collect()
        };
        let up = s.trim().to_ascii_uppercase();
        Ok(match up.as_str() {
            "DWBC1" => BoundaryKind::Dwbc1,
            "DWBC2" => BoundaryKind::Dwbc2,
            "DWBC3" => BoundaryKind::Dwbc3,
            "DWBC4" => BoundaryKind::Dwbc4,
            "SQUARE6V" => BoundaryKind::Square6v,
            "STAGGERED_WS" => BoundaryKind::Staggered(StaggeredKind::Ws),
            "STAGGERED_WSEN" => BoundaryKind::Staggered(StaggeredKind::Wsen),
            "STAGGERED_DW" => BoundaryKind::Staggered(StaggeredKind::DomainWall),
            "CUSTOM" => BoundaryKind::Custom,
            _ => {
                if let Some(inner) = up.strip_prefix("PENTAGON(").and_then(|r| r.strip_suffix(')')) {
                    match args(inner)?.as_slice() {
                        [n, k] => BoundaryKind::Pentagon { n: *n, k: *k },
                        _ => return Err(bad()),
                    }
                } else if let Some(inner) = up.strip_prefix("RECT4(").and_then(|r| r.strip_suffix(')')) {
                    match args(inner)?.as_slice() {
                        [a, b, c] => BoundaryKind::Rect4 { a: *a, b: *b, c: *c },
                        _ => return Err(bad()),
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

/// A boundary kind together with its grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoundarySpec {
    kind: BoundaryKind,
    rows: usize,
    cols: usize,
    template: LatticeConfig,
    diagonals: bool,
}

impl BoundarySpec {
    fn build(kind: BoundaryKind, rows: usize, cols: usize) -> Self {
        let template = boundary_template(&kind, rows, cols);
        let diagonals = !matches!(kind, BoundaryKind::Square6v | BoundaryKind::Staggered(_));
        Self { kind, rows, cols, template, diagonals }
    }

    pub fn dwbc1(n: usize) -> Self {
        Self::build(BoundaryKind::Dwbc1, n, n)
    }

    pub fn dwbc2(n: usize) -> Self {
        Self::build(BoundaryKind::Dwbc2, n, n)
    }

    pub fn dwbc3(n: usize) -> Self {
        Self::build(BoundaryKind::Dwbc3, n, n)
    }

    pub fn dwbc4(n: usize) -> Self {
        Self::build(BoundaryKind::Dwbc4, n, n)
    }

    /// (n+k) × n grid; the top n West edges carry paths, the bottom k do not.
    pub fn pentagon(n: usize, k: usize) -> Self {
        Self::build(BoundaryKind::Pentagon { n, k }, n + k, n)
    }

    /// (a+b+1) × (b+c+1) grid with every vertical external edge occupied,
    /// the top a+1 West and bottom a+1 East horizontal edges occupied.
    pub fn rect4(a: usize, b: usize, c: usize) -> Self {
        Self::build(BoundaryKind::Rect4 { a, b, c }, a + b + 1, b + c + 1)
    }

    /// n × n square-lattice grid with domain walls (no diagonal edges).
    pub fn square6v(n: usize) -> Self {
        Self::build(BoundaryKind::Square6v, n, n)
    }

    /// 2n × 2n staggered six-vertex grid.
    pub fn staggered(n: usize, kind: StaggeredKind) -> Self {
        Self::build(BoundaryKind::Staggered(kind), 2 * n, 2 * n)
    }

    /// Spec for one of the square kinds at size n.
    pub fn square(kind: &BoundaryKind, n: usize) -> Result<Self> {
        match kind {
            BoundaryKind::Dwbc1 => Ok(Self::dwbc1(n)),
            BoundaryKind::Dwbc2 => Ok(Self::dwbc2(n)),
            BoundaryKind::Dwbc3 => Ok(Self::dwbc3(n)),
            BoundaryKind::Dwbc4 => Ok(Self::dwbc4(n)),
            BoundaryKind::Square6v => Ok(Self::square6v(n)),
            BoundaryKind::Staggered(s) if n % 2 == 0 => Ok(Self::staggered(n / 2, *s)),
            BoundaryKind::Pentagon { n: pn, k } => Ok(Self::pentagon(*pn, *k)),
            BoundaryKind::Rect4 { a, b, c } => Ok(Self::rect4(*a, *b, *c)),
            _ => Err(Error::InvalidParameter(format!("no square grid for {kind}"))),
        }
    }

    /// Spec matching a configuration's own kind and grid.
    pub fn for_config(c: &LatticeConfig) -> Result<Self> {
        let s = match c.kind() {
            BoundaryKind::Pentagon { n, k } => Self::pentagon(*n, *k),
            BoundaryKind::Rect4 { a, b, c: cc } => Self::rect4(*a, *b, *cc),
            k if c.rows() == c.cols() => Self::square(k, c.rows())?,
            k => return Err(Error::InvalidConfig(format!("{k} on a non-square grid"))),
        };
        if (s.rows, s.cols) != (c.rows(), c.cols()) {
            return Err(Error::InvalidConfig("grid size does not match boundary kind".into()));
        }
        Ok(s)
    }

    /// A spec with an explicit template (used for transformed boundaries).
    pub fn from_template(template: LatticeConfig, diagonals: bool) -> Self {
        Self {
            kind: template.kind().clone(),
            rows: template.rows(),
            cols: template.cols(),
            template,
            diagonals,
        }
    }

    pub fn kind(&self) -> &BoundaryKind {
        &self.kind
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// False for six-vertex grids, where every diagonal edge is absent.
    pub fn has_diagonals(&self) -> bool {
        self.diagonals
    }

    /// Configuration holding the boundary edges; internal edges are empty.
    pub fn template(&self) -> &LatticeConfig {
        &self.template
    }

    /// The reflected-and-complemented boundary on the transposed grid.
    pub fn transposed(&self) -> Self {
        let mut t = self.template.transpose_complement(BoundaryKind::Custom);
        // interior edges of a template carry no meaning; keep them empty
        clear_interior(&mut t);
        if !self.diagonals {
            for x in 0..=t.cols() {
                for y in 0..=t.rows() {
                    t.set_d(x, y, false);
                }
            }
        }
        Self {
            kind: BoundaryKind::Custom,
            rows: self.cols,
            cols: self.rows,
            template: t,
            diagonals: self.diagonals,
        }
    }
}

fn clear_interior(t: &mut LatticeConfig) {
    for y in 1..=t.rows() {
        for x in 1..t.cols() {
            t.set_h(x, y, false);
        }
    }
    for x in 1..=t.cols() {
        for y in 1..t.rows() {
            t.set_v(x, y, false);
        }
    }
    for x in 1..t.cols() {
        for y in 1..t.rows() {
            t.set_d(x, y, false);
        }
    }
}

fn boundary_template(kind: &BoundaryKind, rows: usize, cols: usize) -> LatticeConfig {
    let mut t = LatticeConfig::empty(rows, cols, kind.clone());
    let (r, c) = (rows, cols);
    match kind {
        BoundaryKind::Dwbc1 | BoundaryKind::Dwbc2 => {
            for y in 1..=r {
                t.set_h(0, y, true);
            }
            for x in 1..=c {
                t.set_v(x, 0, true);
            }
            // West diagonals into (1, y) for y < n, South diagonals out of (x, 1) for x < n
            for y in 1..r {
                t.set_d(0, y, true);
            }
            for x in 1..c {
                t.set_d(x, 0, true);
            }
            let corners = *kind == BoundaryKind::Dwbc1;
            t.set_d(0, r, corners);
            t.set_d(c, 0, corners);
        }
        BoundaryKind::Dwbc3 | BoundaryKind::Square6v => {
            for y in 1..=r {
                t.set_h(0, y, true);
            }
            for x in 1..=c {
                t.set_v(x, 0, true);
            }
        }
        BoundaryKind::Dwbc4 => {
            for y in 1..=r {
                t.set_h(0, y, true);
                t.set_h(c, y, true);
            }
            for x in 1..=c {
                t.set_v(x, 0, true);
                t.set_v(x, r, true);
            }
        }
        BoundaryKind::Pentagon { k, .. } => {
            for y in k + 1..=r {
                t.set_h(0, y, true);
            }
            for x in 1..=c {
                t.set_v(x, 0, true);
            }
        }
        BoundaryKind::Rect4 { a, b, .. } => {
            for x in 1..=c {
                t.set_v(x, 0, true);
                t.set_v(x, r, true);
            }
            for y in b + 1..=r {
                t.set_h(0, y, true);
            }
            for y in 1..=a + 1 {
                t.set_h(c, y, true);
            }
        }
        BoundaryKind::Staggered(s) => {
            // rows: odd y carry original horizontal lines, even y the
            // diagonal lines; columns: odd x original verticals, even x
            // the diagonal lines
            for y in 1..=r {
                let line = y % 2 == 1;
                let west = match s {
                    StaggeredKind::DomainWall => true,
                    _ => line,
                };
                t.set_h(0, y, west);
                if *s == StaggeredKind::Wsen {
                    t.set_h(c, y, line);
                }
            }
            for x in 1..=c {
                let line = x % 2 == 1;
                let south = match s {
                    StaggeredKind::DomainWall => true,
                    _ => line,
                };
                t.set_v(x, 0, south);
                if *s == StaggeredKind::Wsen {
                    t.set_v(x, r, line);
                }
            }
        }
        BoundaryKind::Custom => {}
    }
    t
}
