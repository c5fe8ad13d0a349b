//! Explicit listing of configurations in lexicographic order.
//!
//! A forward pass records the reachable frontier states at every step, a
//! backward pass keeps only those that can still complete, and a depth-first
//! walk through the surviving states emits each configuration once.

use super::boundary::BoundarySpec;
use super::config::LatticeConfig;
use super::sweep::Frontier;
use super::vertex::VertexEnvironment;
use rustc_hash::FxHashSet;
use std::ops::ControlFlow;

/// Call `visit` on every configuration; stop early on `Break`.
pub fn for_each_config(
    spec: &BoundarySpec,
    mut visit: impl FnMut(&LatticeConfig) -> ControlFlow<()>,
) {
    let f = Frontier::new(spec);
    let steps = f.steps();
    let mut config = spec.template().clone();
    if steps == 0 {
        let _ = visit(&config);
        return;
    }
    let mut reach: Vec<FxHashSet<u64>> = Vec::with_capacity(steps + 1);
    let mut first = FxHashSet::default();
    first.insert(f.initial());
    reach.push(first);
    let mut succ = Vec::with_capacity(4);
    for step in 0..steps {
        let mut next = FxHashSet::default();
        for &s in &reach[step] {
            f.successors(step, s, &mut succ);
            next.extend(succ.iter().map(|&(_, ns)| ns));
        }
        reach.push(next);
    }
    // only the completed state survives at the end
    reach[steps].retain(|&s| s == 0);
    for step in (0..steps).rev() {
        let (head, tail) = reach.split_at_mut(step + 1);
        let live_next = &tail[0];
        head[step].retain(|&s| {
            f.successors(step, s, &mut succ);
            succ.iter().any(|(_, ns)| live_next.contains(ns))
        });
    }
    if reach[0].is_empty() {
        return;
    }
    let mut walker = Walker { f: &f, live: &reach, config: &mut config, visit: &mut visit };
    let _ = walker.dfs(0, f.initial());
}

struct Walker<'a, F> {
    f: &'a Frontier<'a>,
    live: &'a [FxHashSet<u64>],
    config: &'a mut LatticeConfig,
    visit: &'a mut F,
}

impl<F: FnMut(&LatticeConfig) -> ControlFlow<()>> Walker<'_, F> {
    fn dfs(&mut self, step: usize, state: u64) -> ControlFlow<()> {
        if step == self.f.steps() {
            return (self.visit)(self.config);
        }
        let mut succ: Vec<(VertexEnvironment, u64)> = Vec::with_capacity(4);
        self.f.successors(step, state, &mut succ);
        let site = self.f.site(step);
        for (env, ns) in succ {
            if !self.live[step + 1].contains(&ns) {
                continue;
            }
            self.config.set_outputs(site.x, site.y, env);
            self.dfs(step + 1, ns)?;
        }
        ControlFlow::Continue(())
    }
}

/// Result of a bounded enumeration.
#[derive(Clone, Debug)]
pub struct ConfigList {
    pub configs: Vec<LatticeConfig>,
    /// True when more than `limit` configurations exist.
    pub truncated: bool,
}

/// Up to `limit` configurations in lexicographic order (None = all).
pub fn enumerate_configs(spec: &BoundarySpec, limit: Option<usize>) -> ConfigList {
    let mut configs = Vec::new();
    let mut truncated = false;
    for_each_config(spec, |c| {
        if limit.is_some_and(|l| configs.len() >= l) {
            truncated = true;
            return ControlFlow::Break(());
        }
        configs.push(c.clone());
        ControlFlow::Continue(())
    });
    ConfigList { configs, truncated }
}

/// Naive depth-first count: tries every output choice vertex by vertex
/// with no state merging. Oracle for the sweep on small grids.
pub fn naive_count(spec: &BoundarySpec) -> u64 {
    fn go(spec: &BoundarySpec, c: &mut LatticeConfig, k: usize) -> u64 {
        let (r, cols) = (spec.rows(), spec.cols());
        if k == r * cols {
            return 1;
        }
        let x = k / r + 1;
        let y = r - k % r;
        let t = spec.template();
        let mut total = 0;
        for bits in 0u8..8 {
            let (e, s, se) = (bits & 1 == 1, bits & 2 == 2, bits & 4 == 4);
            if x == cols && e != t.h(x, y) {
                continue;
            }
            if y == 1 && s != t.v(x, 0) {
                continue;
            }
            if se && !spec.has_diagonals() {
                continue;
            }
            if (x == cols || y == 1) && spec.has_diagonals() && se != t.d(x, y - 1) {
                continue;
            }
            let env = VertexEnvironment::from_edges(
                c.h(x - 1, y),
                c.v(x, y),
                c.d(x - 1, y),
                e,
                s,
                se,
            );
            if !env.is_valid() {
                continue;
            }
            c.set_outputs(x, y, env);
            total += go(spec, c, k + 1);
        }
        total
    }
    let mut c = spec.template().clone();
    go(spec, &mut c, 0)
}
