//! Staggered six-vertex model on a 2n × 2n grid.
//!
//! Odd rows (from the bottom) carry the original horizontal lines, even rows
//! the diagonal lines; odd columns carry the original verticals, even
//! columns the diagonal lines. The four sublattices get weights
//! (1, √2, 1), (√2, 1, 1), (√2, 1, 1) and (1, 0, 1).

use super::boundary::{BoundaryKind, BoundarySpec, StaggeredKind};
use super::sweep::{count_configs, sweep_sum, VertexWeight};
use super::vertex::SixVertexType;
use crate::exactalg::{Cyclotomic8, Ring};
use crate::report::{Check, Report};
use num_bigint::BigInt;
use num_rational::BigRational;

fn weights(x: usize, y: usize) -> (Cyclotomic8, Cyclotomic8, Cyclotomic8) {
    let one = Cyclotomic8::one();
    let r2 = Cyclotomic8::sqrt2();
    match (y % 2 == 1, x % 2 == 1) {
        (true, true) => (one.clone(), r2, one),
        (true, false) | (false, true) => (r2, one.clone(), one),
        (false, false) => (one, Cyclotomic8::zero(), Cyclotomic8::one()),
    }
}

/// Weighted sum over the 2n × 2n staggered grid.
pub fn count_staggered_6v(n: usize, kind: StaggeredKind) -> Cyclotomic8 {
    let spec = BoundarySpec::staggered(n, kind);
    sweep_sum::<Cyclotomic8>(&spec, |x, y, env| {
        let (a, b, c) = weights(x, y);
        let w = match env.six_vertex_type() {
            None => return VertexWeight::Forbidden,
            Some(SixVertexType::A) => a,
            Some(SixVertexType::B) => b,
            Some(SixVertexType::C) => c,
        };
        VertexWeight::Factor(w)
    })
}

/// Compare each staggered variant with 2^{n²} times the matching 20V count.
pub fn staggered_check(n: usize) -> Report {
    let mut report = Report::default();
    let scale = BigInt::from(1) << (n * n);
    for (kind, twenty) in [
        (StaggeredKind::Ws, BoundaryKind::Dwbc3),
        (StaggeredKind::Wsen, BoundaryKind::Dwbc4),
        (StaggeredKind::DomainWall, BoundaryKind::Dwbc1),
    ] {
        let z = count_configs(&BoundarySpec::square(&twenty, n).expect("square kind"));
        let expected = Cyclotomic8::from_rational(BigRational::from_integer(&scale * z));
        let actual = count_staggered_6v(n, kind);
        report.push(Check::new(
            format!("staggered {} n={n} vs 2^(n^2)*{twenty}", BoundaryKind::Staggered(kind)),
            expected,
            actual,
        ));
    }
    report
}
