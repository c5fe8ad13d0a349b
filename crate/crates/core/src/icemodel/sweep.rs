//! Column-sweep transfer-matrix dynamic programming.
//!
//! Columns are processed left to right and, inside a column, vertices top
//! to bottom. The frontier state packs, for a grid with R rows:
//!
//! * bits 0..R: horizontal edge entering row y of the current column,
//! * bits R..2R: diagonal slot y (diagonal entering (x, y) before the
//!   vertex is processed, the one entering (x+1, y-1) afterwards),
//! * bit 2R: the vertical edge entering the next vertex from above.

use super::boundary::BoundarySpec;
use super::config::LatticeConfig;
use super::vertex::VertexEnvironment;
use crate::exactalg::Ring;
use num_bigint::BigInt;
use rustc_hash::FxHashMap;

/// Weight of one vertex environment.
#[derive(Clone, Debug)]
pub enum VertexWeight<W> {
    Forbidden,
    One,
    Factor(W),
}

/// Accumulator algebra for the sweep: addition over alternatives,
/// multiplication along a configuration.
pub trait Semiring: Clone + Send + Sync {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn accumulate(&mut self, other: &Self);
    fn combine(&self, other: &Self) -> Self;
}

impl<R: Ring> Semiring for R {
    fn nil() -> Self {
        R::zero()
    }
    fn unit() -> Self {
        R::one()
    }
    fn is_nil(&self) -> bool {
        self.is_zero()
    }
    fn accumulate(&mut self, other: &Self) {
        self.add_assign_ref(other);
    }
    fn combine(&self, other: &Self) -> Self {
        self.times(other)
    }
}

/// Machine-word count; `None` records an overflow and absorbs everything.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckedCount(pub Option<u128>);

impl Semiring for CheckedCount {
    fn nil() -> Self {
        CheckedCount(Some(0))
    }
    fn unit() -> Self {
        CheckedCount(Some(1))
    }
    fn is_nil(&self) -> bool {
        self.0 == Some(0)
    }
    fn accumulate(&mut self, other: &Self) {
        self.0 = match (self.0, other.0) {
            (Some(a), Some(b)) => a.checked_add(b),
            _ => None,
        };
    }
    fn combine(&self, other: &Self) -> Self {
        CheckedCount(match (self.0, other.0) {
            (Some(a), Some(b)) => a.checked_mul(b),
            _ => None,
        })
    }
}

/// Frontier geometry of one boundary spec.
pub(crate) struct Frontier<'a> {
    t: &'a LatticeConfig,
    rows: usize,
    cols: usize,
    diagonals: bool,
}

/// Vertex (x, y) processed at a given step.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Site {
    pub x: usize,
    pub y: usize,
}

impl<'a> Frontier<'a> {
    pub fn new(spec: &'a BoundarySpec) -> Self {
        assert!(spec.rows() <= 31, "frontier state must fit in 64 bits");
        Self { t: spec.template(), rows: spec.rows(), cols: spec.cols(), diagonals: spec.has_diagonals() }
    }

    pub fn steps(&self) -> usize {
        self.rows * self.cols
    }

    pub fn site(&self, step: usize) -> Site {
        Site { x: step / self.rows + 1, y: self.rows - step % self.rows }
    }

    pub fn initial(&self) -> u64 {
        let r = self.rows;
        let mut s = 0u64;
        for y in 1..=r {
            if self.t.h(0, y) {
                s |= 1 << (y - 1);
            }
            if self.diagonals && self.t.d(0, y) {
                s |= 1 << (r + y - 1);
            }
        }
        if self.cols > 0 && self.t.v(1, r) {
            s |= 1 << (2 * r);
        }
        s
    }

    /// Successor states of `state` at `step`, with the vertex environment,
    /// in increasing (E, S, SE) order.
    pub fn successors(&self, step: usize, state: u64, out: &mut Vec<(VertexEnvironment, u64)>) {
        out.clear();
        let r = self.rows;
        let Site { x, y } = self.site(step);
        let w = state >> (y - 1) & 1 == 1;
        let nw = state >> (r + y - 1) & 1 == 1;
        let n = state >> (2 * r) & 1 == 1;
        let need = w as u32 + nw as u32 + n as u32;
        let e_opts: &[bool] = if x == self.cols { opt(self.t.h(x, y)) } else { &[false, true] };
        let s_opts: &[bool] = if y == 1 { opt(self.t.v(x, 0)) } else { &[false, true] };
        let se_opts: &[bool] = if !self.diagonals {
            &[false]
        } else if x == self.cols || y == 1 {
            opt(self.t.d(x, y - 1))
        } else {
            &[false, true]
        };
        for &e in e_opts {
            for &s in s_opts {
                for &se in se_opts {
                    if e as u32 + s as u32 + se as u32 != need {
                        continue;
                    }
                    let env = VertexEnvironment::from_edges(w, n, nw, e, s, se);
                    out.push((env, self.advance(x, y, state, e, s, se)));
                }
            }
        }
    }

    fn advance(&self, x: usize, y: usize, state: u64, e: bool, s: bool, se: bool) -> u64 {
        let r = self.rows;
        let mut st = state;
        set_bit(&mut st, y - 1, e);
        set_bit(&mut st, r + y - 1, se);
        set_bit(&mut st, 2 * r, s);
        if y > 1 {
            return st;
        }
        if x == self.cols {
            return 0;
        }
        // shift the diagonal slots down one row and load the next column's
        // North boundary
        let hmask = (1u64 << r) - 1;
        let slots = (st >> r) & hmask;
        let mut next = (st & hmask) | ((slots >> 1) << r);
        if self.diagonals && self.t.d(x, r) {
            next |= 1 << (2 * r - 1);
        }
        if self.t.v(x + 1, r) {
            next |= 1 << (2 * r);
        }
        next
    }
}

fn opt(b: bool) -> &'static [bool] {
    if b {
        &[true]
    } else {
        &[false]
    }
}

fn set_bit(s: &mut u64, i: usize, b: bool) {
    if b {
        *s |= 1 << i;
    } else {
        *s &= !(1 << i);
    }
}

/// Σ over configurations of the product of vertex weights.
pub fn sweep_sum<W: Semiring>(
    spec: &BoundarySpec,
    mut weight: impl FnMut(usize, usize, VertexEnvironment) -> VertexWeight<W>,
) -> W {
    let f = Frontier::new(spec);
    if f.steps() == 0 {
        return W::unit();
    }
    let mut cur: FxHashMap<u64, W> = FxHashMap::default();
    cur.insert(f.initial(), W::unit());
    let mut succ = Vec::with_capacity(4);
    for step in 0..f.steps() {
        let Site { x, y } = f.site(step);
        let mut next: FxHashMap<u64, W> = FxHashMap::default();
        for (state, val) in &cur {
            f.successors(step, *state, &mut succ);
            for &(env, ns) in &succ {
                let contrib = match weight(x, y, env) {
                    VertexWeight::Forbidden => continue,
                    VertexWeight::One => val.clone(),
                    VertexWeight::Factor(wt) => val.combine(&wt),
                };
                if contrib.is_nil() {
                    continue;
                }
                match next.get_mut(&ns) {
                    Some(acc) => acc.accumulate(&contrib),
                    None => {
                        next.insert(ns, contrib);
                    }
                }
            }
        }
        cur = next;
    }
    cur.remove(&0).unwrap_or_else(W::nil)
}

/// Number of configurations; machine words first, big integers on overflow.
pub fn count_configs(spec: &BoundarySpec) -> BigInt {
    // sweep along the shorter side
    let transposed;
    let spec = if spec.rows() > spec.cols() {
        transposed = spec.transposed();
        &transposed
    } else {
        spec
    };
    match sweep_sum::<CheckedCount>(spec, |_, _, _| VertexWeight::One).0 {
        Some(c) => BigInt::from(c),
        None => sweep_sum::<BigInt>(spec, |_, _, _| VertexWeight::One),
    }
}
