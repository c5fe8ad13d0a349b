//! Edge-occupancy configurations on a rows × cols triangular-lattice grid.
//!
//! Vertices are (x, y) with column x = 1..cols and row y = 1..rows counted
//! from the bottom. Edges and their natural orientation:
//!
//! * horizontal h(x, y), x = 0..cols: (x, y) → (x+1, y), West to East
//! * vertical v(x, y), y = 0..rows: (x, y+1) → (x, y), North to South
//! * diagonal d(x, y), x = 0..cols, y = 0..rows: (x, y+1) → (x+1, y)
//!
//! An edge is occupied by a path iff its arrow follows the natural
//! orientation. Edges with an endpoint outside the grid are boundary edges.

use super::boundary::{BoundaryKind, BoundarySpec};
use super::vertex::VertexEnvironment;
use crate::{Error, Result};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeConfig {
    rows: usize,
    cols: usize,
    kind: BoundaryKind,
    h: Vec<bool>,
    v: Vec<bool>,
    d: Vec<bool>,
}

impl LatticeConfig {
    /// All edges empty.
    pub fn empty(rows: usize, cols: usize, kind: BoundaryKind) -> Self {
        Self {
            rows,
            cols,
            kind,
            h: vec![false; rows * (cols + 1)],
            v: vec![false; (rows + 1) * cols],
            d: vec![false; (rows + 1) * (cols + 1)],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn kind(&self) -> &BoundaryKind {
        &self.kind
    }

    fn hi(&self, x: usize, y: usize) -> usize {
        debug_assert!(x <= self.cols && (1..=self.rows).contains(&y));
        (y - 1) * (self.cols + 1) + x
    }

    fn vi(&self, x: usize, y: usize) -> usize {
        debug_assert!((1..=self.cols).contains(&x) && y <= self.rows);
        y * self.cols + (x - 1)
    }

    fn di(&self, x: usize, y: usize) -> usize {
        debug_assert!(x <= self.cols && y <= self.rows);
        y * (self.cols + 1) + x
    }

    pub fn h(&self, x: usize, y: usize) -> bool {
        self.h[self.hi(x, y)]
    }

    pub fn v(&self, x: usize, y: usize) -> bool {
        self.v[self.vi(x, y)]
    }

    pub fn d(&self, x: usize, y: usize) -> bool {
        self.d[self.di(x, y)]
    }

    pub fn set_h(&mut self, x: usize, y: usize, b: bool) {
        let i = self.hi(x, y);
        self.h[i] = b;
    }

    pub fn set_v(&mut self, x: usize, y: usize, b: bool) {
        let i = self.vi(x, y);
        self.v[i] = b;
    }

    pub fn set_d(&mut self, x: usize, y: usize, b: bool) {
        let i = self.di(x, y);
        self.d[i] = b;
    }

    /// Environment of vertex (x, y).
    pub fn env(&self, x: usize, y: usize) -> VertexEnvironment {
        VertexEnvironment::from_edges(
            self.h(x - 1, y),
            self.v(x, y),
            self.d(x - 1, y),
            self.h(x, y),
            self.v(x, y - 1),
            self.d(x, y - 1),
        )
    }

    /// Set the three outgoing edges of vertex (x, y) from an environment.
    pub fn set_outputs(&mut self, x: usize, y: usize, env: VertexEnvironment) {
        self.set_h(x, y, env.e());
        self.set_v(x, y - 1, env.s());
        self.set_d(x, y - 1, env.se());
    }

    pub fn is_boundary_h(&self, x: usize, _y: usize) -> bool {
        x == 0 || x == self.cols
    }

    pub fn is_boundary_v(&self, _x: usize, y: usize) -> bool {
        y == 0 || y == self.rows
    }

    pub fn is_boundary_d(&self, x: usize, y: usize) -> bool {
        x == 0 || y == 0 || x == self.cols || y == self.rows
    }

    /// Check boundary agreement with `spec` and the ice rule at every vertex.
    pub fn validate(&self, spec: &BoundarySpec) -> Result<()> {
        let t = spec.template();
        if (self.rows, self.cols) != (t.rows, t.cols) {
            return Err(Error::InvalidConfig(format!(
                "grid {}x{} does not match {}x{}",
                self.rows, self.cols, t.rows, t.cols
            )));
        }
        for y in 1..=self.rows {
            for x in [0, self.cols] {
                if self.h(x, y) != t.h(x, y) {
                    return Err(Error::InvalidConfig(format!("boundary edge h({x},{y})")));
                }
            }
        }
        for x in 1..=self.cols {
            for y in [0, self.rows] {
                if self.v(x, y) != t.v(x, y) {
                    return Err(Error::InvalidConfig(format!("boundary edge v({x},{y})")));
                }
            }
        }
        for x in 0..=self.cols {
            for y in 0..=self.rows {
                let b = self.d(x, y);
                if (!spec.has_diagonals() && b) || (self.is_boundary_d(x, y) && b != t.d(x, y))
                {
                    return Err(Error::InvalidConfig(format!("diagonal edge d({x},{y})")));
                }
            }
        }
        for x in 1..=self.cols {
            for y in 1..=self.rows {
                if !self.env(x, y).is_valid() {
                    return Err(Error::InvalidConfig(format!("ice rule fails at ({x},{y})")));
                }
            }
        }
        Ok(())
    }

    /// Rotate by 180° and complement every edge that meets a vertex.
    pub fn rotate180_complement(&self, kind: BoundaryKind) -> Self {
        let (r, c) = (self.rows, self.cols);
        let mut out = Self::empty(r, c, kind);
        for y in 1..=r {
            for x in 0..=c {
                out.set_h(c - x, r + 1 - y, !self.h(x, y));
            }
        }
        for y in 0..=r {
            for x in 1..=c {
                out.set_v(c + 1 - x, r - y, !self.v(x, y));
            }
        }
        for y in 0..=r {
            for x in 0..=c {
                out.set_d(c - x, r - y, !self.d(x, y));
            }
        }
        // the two corner diagonals touch no vertex and stay empty
        out.set_d(0, 0, false);
        out.set_d(c, r, false);
        out
    }

    /// Reflect through the main diagonal (x, y) ↦ (y, x) and complement
    /// every edge; rows and columns swap.
    pub fn transpose_complement(&self, kind: BoundaryKind) -> Self {
        let (r, c) = (self.rows, self.cols);
        let mut out = Self::empty(c, r, kind);
        for y in 1..=r {
            for x in 0..=c {
                out.set_v(y, x, !self.h(x, y));
            }
        }
        for y in 0..=r {
            for x in 1..=c {
                out.set_h(y, x, !self.v(x, y));
            }
        }
        for y in 0..=r {
            for x in 0..=c {
                out.set_d(y, x, !self.d(x, y));
            }
        }
        out
    }

    /// Number of occupied edges.
    pub fn occupied_edges(&self) -> usize {
        self.h.iter().chain(&self.v).chain(&self.d).filter(|&&b| b).count()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "boundary": self.kind.to_string(),
            "h_bits": pack(&self.h),
            "v_bits": pack(&self.v),
            "d_bits": pack(&self.d),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("lattice config: {what}"));
        let rows = v.get("rows").and_then(Value::as_u64).ok_or_else(|| bad("rows"))? as usize;
        let cols = v.get("cols").and_then(Value::as_u64).ok_or_else(|| bad("cols"))? as usize;
        let kind: BoundaryKind = v
            .get("boundary")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("boundary"))?
            .parse()?;
        let mut c = Self::empty(rows, cols, kind);
        let field = |name: &str, len: usize| -> Result<Vec<bool>> {
            let s = v.get(name).and_then(Value::as_str).ok_or_else(|| bad(name))?;
            unpack(s, len).ok_or_else(|| bad(name))
        };
        c.h = field("h_bits", c.h.len())?;
        c.v = field("v_bits", c.v.len())?;
        c.d = field("d_bits", c.d.len())?;
        Ok(c)
    }
}

/// Bits packed little-endian into bytes, hex encoded.
fn pack(bits: &[bool]) -> String {
    let mut bytes = vec![0u8; bits.len().div_ceil(8)];
    for (i, &b) in bits.iter().enumerate() {
        if b {
            bytes[i / 8] |= 1 << (i % 8);
        }
    }
    hex::encode(bytes)
}

fn unpack(s: &str, len: usize) -> Option<Vec<bool>> {
    let bytes = hex::decode(s).ok()?;
    if bytes.len() != len.div_ceil(8) {
        return None;
    }
    let bits: Vec<bool> = (0..len).map(|i| bytes[i / 8] >> (i % 8) & 1 == 1).collect();
    // padding bits must be clear
    let extra = (len..bytes.len() * 8).any(|i| bytes[i / 8] >> (i % 8) & 1 == 1);
    (!extra).then_some(bits)
}
