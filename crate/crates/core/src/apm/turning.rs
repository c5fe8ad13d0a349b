//! Decomposition into osculating paths and their turning weights.
//!
//! η(horizontal) = ω, η(vertical) = -ω², η(diagonal) = 0; a step from edge
//! p to edge p' turns by η(p') - η(p). At a vertex the occupied incoming
//! edges, taken in the order W, NW, N, are joined to the occupied outgoing
//! edges in the order S, SE, E: the unique non-crossing pairing.

use crate::exactalg::Eisenstein;
use crate::icemodel::LatticeConfig;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeRef {
    H(usize, usize),
    V(usize, usize),
    D(usize, usize),
}

impl EdgeRef {
    pub fn eta(self) -> Eisenstein {
        match self {
            EdgeRef::H(..) => Eisenstein::OMEGA,
            EdgeRef::V(..) => -Eisenstein::OMEGA2,
            EdgeRef::D(..) => Eisenstein::ZERO,
        }
    }

    /// Vertex this edge points into, if inside a rows × cols grid.
    fn head(self, rows: usize, cols: usize) -> Option<(usize, usize)> {
        let (x, y) = match self {
            EdgeRef::H(x, y) => (x + 1, y),
            EdgeRef::V(x, y) => (x, y),
            EdgeRef::D(x, y) => (x + 1, y),
        };
        (x >= 1 && x <= cols && y >= 1 && y <= rows).then_some((x, y))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PathTrace {
    pub edges: Vec<EdgeRef>,
    /// Turning weight at each visited vertex.
    pub turns: Vec<Eisenstein>,
    pub total: Eisenstein,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TurningProfile {
    pub paths: Vec<PathTrace>,
    /// Row-major, row 0 at the top, same layout as the APM.
    pub per_vertex: Vec<Eisenstein>,
    pub rows: usize,
    pub cols: usize,
}

impl TurningProfile {
    pub fn vertex(&self, i: usize, j: usize) -> Eisenstein {
        self.per_vertex[i * self.cols + j]
    }
}

fn entry_edges(c: &LatticeConfig) -> Vec<EdgeRef> {
    let (r, n) = (c.rows(), c.cols());
    let mut out = Vec::new();
    for y in (1..=r).rev() {
        if c.h(0, y) {
            out.push(EdgeRef::H(0, y));
        }
        if c.d(0, y) {
            out.push(EdgeRef::D(0, y));
        }
    }
    for x in 1..=n {
        if c.v(x, r) {
            out.push(EdgeRef::V(x, r));
        }
        if x < n && c.d(x, r) {
            out.push(EdgeRef::D(x, r));
        }
    }
    out
}

pub fn turning_profile(c: &LatticeConfig) -> Result<TurningProfile> {
    let (rows, cols) = (c.rows(), c.cols());
    for x in 1..=cols {
        for y in 1..=rows {
            if !c.env(x, y).is_valid() {
                return Err(Error::InvalidConfig(format!("ice rule fails at ({x},{y})")));
            }
        }
    }
    let mut per_vertex = vec![Eisenstein::ZERO; rows * cols];
    let mut paths = Vec::new();
    for start in entry_edges(c) {
        let mut edges = vec![start];
        let mut turns = Vec::new();
        let mut cur = start;
        while let Some((x, y)) = cur.head(rows, cols) {
            let ins = [EdgeRef::H(x - 1, y), EdgeRef::D(x - 1, y), EdgeRef::V(x, y)];
            let outs = [EdgeRef::V(x, y - 1), EdgeRef::D(x, y - 1), EdgeRef::H(x, y)];
            let occupied = |e: &&EdgeRef| match **e {
                EdgeRef::H(a, b) => c.h(a, b),
                EdgeRef::V(a, b) => c.v(a, b),
                EdgeRef::D(a, b) => c.d(a, b),
            };
            let rank = ins.iter().filter(occupied).position(|&e| e == cur).expect("path edge occupied");
            let next = *outs.iter().filter(occupied).nth(rank).expect("ice rule pairs every input");
            let t = next.eta() - cur.eta();
            per_vertex[(rows - y) * cols + (x - 1)] += t;
            turns.push(t);
            edges.push(next);
            cur = next;
        }
        let total = turns.iter().copied().sum();
        paths.push(PathTrace { edges, turns, total });
    }
    Ok(TurningProfile { paths, per_vertex, rows, cols })
}
