//! Counts and weighted sums built on the sweep.

use super::boundary::{BoundaryKind, BoundarySpec};
use super::enumerate::{enumerate_configs, for_each_config};
use super::sweep::{count_configs, sweep_sum, VertexWeight};
use super::vertex::{SixVertexType, VertexEnvironment};
use crate::apm::{symmetry_class, to_apm, Symmetry};
use crate::exactalg::{rat, Cyclotomic8, PolyUni, Ring};
use crate::report::{Check, Report};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use rustc_hash::FxHashSet;
use std::ops::ControlFlow;

/// Number of ice configurations of a square boundary kind at size n.
pub fn count_20v(kind: &BoundaryKind, n: usize) -> Result<BigInt> {
    Ok(count_configs(&BoundarySpec::square(kind, n)?))
}

/// Σ_ℓ Z_ℓ τ^{ℓ-1}, where ℓ-1 is the number of occupied inner vertical
/// edges of the last column.
pub fn count_20v_refined(kind: &BoundaryKind, n: usize) -> Result<PolyUni<BigInt>> {
    if !matches!(kind, BoundaryKind::Dwbc1 | BoundaryKind::Dwbc2) {
        return Err(Error::InvalidParameter(format!("refined count needs DWBC1 or DWBC2, got {kind}")));
    }
    let spec = BoundarySpec::square(kind, n)?;
    Ok(last_column_sum(&spec, PolyUni::var(), |_| VertexWeight::One))
}

fn last_column_sum<R: Ring>(
    spec: &BoundarySpec,
    tau: PolyUni<R>,
    base: impl Fn(VertexEnvironment) -> VertexWeight<R>,
) -> PolyUni<R> {
    let n = spec.cols();
    sweep_sum::<PolyUni<R>>(spec, |x, y, env| {
        let w = match base(env) {
            VertexWeight::Forbidden => return VertexWeight::Forbidden,
            VertexWeight::One => None,
            VertexWeight::Factor(r) => Some(PolyUni::constant(r)),
        };
        let marked = x == n && y >= 2 && env.s();
        match (w, marked) {
            (None, false) => VertexWeight::One,
            (None, true) => VertexWeight::Factor(tau.clone()),
            (Some(p), false) => VertexWeight::Factor(p),
            (Some(p), true) => VertexWeight::Factor(p.times(&tau)),
        }
    })
}

fn six_vertex_weight<R: Ring>(env: VertexEnvironment, abc: &(R, R, R)) -> VertexWeight<R> {
    match env.six_vertex_type() {
        None => VertexWeight::Forbidden,
        Some(SixVertexType::A) => VertexWeight::Factor(abc.0.clone()),
        Some(SixVertexType::B) => VertexWeight::Factor(abc.1.clone()),
        Some(SixVertexType::C) => VertexWeight::Factor(abc.2.clone()),
    }
}

/// Domain-wall six-vertex partition function with weights (a, b, c).
pub fn count_6v<R: Ring>(n: usize, a: &R, b: &R, c: &R) -> R {
    let abc = (a.clone(), b.clone(), c.clone());
    sweep_sum::<R>(&BoundarySpec::square6v(n), |_, _, env| six_vertex_weight(env, &abc))
}

/// Refined six-vertex partition function Σ_ℓ Z_{;ℓ} σ^{ℓ-1}.
pub fn count_6v_refined<R: Ring>(n: usize, a: &R, b: &R, c: &R) -> PolyUni<R> {
    let abc = (a.clone(), b.clone(), c.clone());
    last_column_sum(&BoundarySpec::square6v(n), PolyUni::var(), |env| six_vertex_weight(env, &abc))
}

pub fn count_pentagon(n: usize, k: usize) -> BigInt {
    count_configs(&BoundarySpec::pentagon(n, k))
}

pub fn count_rect_dwbc4(a: usize, b: usize, c: usize) -> BigInt {
    count_configs(&BoundarySpec::rect4(a, b, c))
}

fn lift(p: &PolyUni<BigInt>) -> PolyUni<Cyclotomic8> {
    p.map(|c| Cyclotomic8::from_rational(BigRational::from_integer(c.clone())))
}

fn coeff_check(report: &mut Report, id: String, expected: &Cyclotomic8, actual: &Cyclotomic8) {
    report.push(Check::new(id, expected, actual));
}

/// Exact check of the 20V ↔ 6V refinement relations at size n.
pub fn verify_refinement_theorem(n: usize) -> Report {
    let mut report = Report::default();
    let bc1 = lift(&count_20v_refined(&BoundaryKind::Dwbc1, n).expect("square kind"));
    let bc2 = lift(&count_20v_refined(&BoundaryKind::Dwbc2, n).expect("square kind"));
    let one = Cyclotomic8::one();
    let z6 = count_6v_refined(n, &one, &Cyclotomic8::sqrt2(), &one);
    let tau = PolyUni::<Cyclotomic8>::var();
    let half = Cyclotomic8::from_rational(rat(1, 2));
    let shift = PolyUni::from_coeffs(vec![half.clone(), half.clone()]);

    // BC2(τ) = Z6((1+τ)/2)
    let composed = z6.compose(&shift);
    for k in 0..n {
        coeff_check(&mut report, format!("bc2-vs-6v tau^{k}"), &composed.coeff(k), &bc2.coeff(k));
    }

    // coefficient-wise binomial relations
    let z6c = |m: usize| z6.coeff(m - 1);
    for l in 1..=n {
        let bc1_expected = if l == 1 {
            z6c(1)
        } else {
            let mut s = Cyclotomic8::zero();
            for m in l..=n {
                let w = BigRational::new(binomial(BigInt::from(m - 2), BigInt::from(l - 2)), BigInt::from(1) << (m - 2));
                s = s + z6c(m).scale(&w);
            }
            s
        };
        coeff_check(&mut report, format!("bc1 Z_{l}"), &bc1_expected, &bc1.coeff(l - 1));
        let mut s = Cyclotomic8::zero();
        for m in l..=n {
            let w = BigRational::new(binomial(BigInt::from(m - 1), BigInt::from(l - 1)), BigInt::from(1) << (m - 1));
            s = s + z6c(m).scale(&w);
        }
        coeff_check(&mut report, format!("bc2 Z_{l}"), &s, &bc2.coeff(l - 1));
    }

    // 2τ BC2(τ) = 2τ BC1(0) + (1+τ)(BC1(τ) - BC1(0))
    let two = PolyUni::constant(Cyclotomic8::from_rational(rat(2, 1)));
    let bc1_0 = PolyUni::constant(bc1.coeff(0));
    let one_plus = PolyUni::from_coeffs(vec![one.clone(), one.clone()]);
    let lhs = two.times(&tau).times(&bc2);
    let rhs = two.times(&tau).times(&bc1_0).plus(&one_plus.times(&bc1.minus(&bc1_0)));
    report.push(Check::new("bc2 from bc1", &rhs, &lhs));

    // (1+τ) BC1(τ) = 2τ Z6((1+τ)/2) + (1-τ) Z6(0)
    let one_minus = PolyUni::from_coeffs(vec![one.clone(), one.negate()]);
    let lhs = one_plus.times(&bc1);
    let rhs = two.times(&tau).times(&composed).plus(&one_minus.times(&PolyUni::constant(z6.coeff(0))));
    report.push(Check::new("bc1 from 6v", &rhs, &lhs));
    report
}

/// Number of configurations whose APM image has the given symmetry.
pub fn count_symmetry(kind: &BoundaryKind, n: usize, sym: Symmetry) -> Result<u64> {
    let ok = match sym {
        Symmetry::Sapm => matches!(
            kind,
            BoundaryKind::Dwbc1 | BoundaryKind::Dwbc2 | BoundaryKind::Dwbc3 | BoundaryKind::Dwbc4
        ),
        Symmetry::Tcapm => matches!(kind, BoundaryKind::Dwbc1 | BoundaryKind::Dwbc2),
        Symmetry::Htapm => matches!(kind, BoundaryKind::Dwbc4),
    };
    if !ok {
        return Err(Error::Incompatible(format!("{sym} is not defined for {kind}")));
    }
    let spec = BoundarySpec::square(kind, n)?;
    let mut count = 0u64;
    let mut err = None;
    for_each_config(&spec, |c| match to_apm(c) {
        Ok(a) => {
            if symmetry_class(&a).contains(&sym) {
                count += 1;
            }
            ControlFlow::Continue(())
        }
        Err(e) => {
            err = Some(e);
            ControlFlow::Break(())
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// Complement-and-rotate maps the DWBC1 set onto the DWBC2 set.
pub fn bijection_check(n: usize) -> Report {
    let mut report = Report::default();
    let one = enumerate_configs(&BoundarySpec::dwbc1(n), None).configs;
    let two = enumerate_configs(&BoundarySpec::dwbc2(n), None).configs;
    let spec2 = BoundarySpec::dwbc2(n);
    let targets: FxHashSet<_> = two.iter().collect();
    let images: Vec<_> = one.iter().map(|c| c.rotate180_complement(BoundaryKind::Dwbc2)).collect();
    let valid = images.iter().filter(|c| c.validate(&spec2).is_ok()).count();
    let hit: FxHashSet<_> = images.iter().filter(|c| targets.contains(c)).collect();
    report.push(Check::new("dwbc1 size vs dwbc2 size", two.len(), one.len()));
    report.push(Check::new("images valid", one.len(), valid));
    report.push(Check::new("distinct images in dwbc2", two.len(), hit.len()));
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int_poly;
    use crate::icemodel::naive_count;

    #[test]
    fn small_counts() {
        let a: Vec<u64> = (1..=5)
            .map(|n| count_20v(&BoundaryKind::Dwbc1, n).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(a, [1, 3, 23, 433, 19705]);
        let b: Vec<u64> = (1..=4)
            .map(|n| count_20v(&BoundaryKind::Dwbc3, n).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(b, [1, 3, 29, 901]);
    }

    #[test]
    fn sweep_matches_naive() {
        for n in 1..=3 {
            for kind in [BoundaryKind::Dwbc1, BoundaryKind::Dwbc2, BoundaryKind::Dwbc3, BoundaryKind::Dwbc4] {
                let spec = BoundarySpec::square(&kind, n).unwrap();
                assert_eq!(count_configs(&spec), BigInt::from(naive_count(&spec)), "{kind} {n}");
            }
        }
        let spec = BoundarySpec::rect4(1, 1, 0);
        assert_eq!(count_configs(&spec), BigInt::from(naive_count(&spec)));
    }

    #[test]
    fn refined_small() {
        assert_eq!(count_20v_refined(&BoundaryKind::Dwbc1, 3).unwrap(), int_poly(&[3, 14, 6]));
        assert_eq!(count_20v_refined(&BoundaryKind::Dwbc2, 2).unwrap(), int_poly(&[2, 1]));
    }

    #[test]
    fn asm_numbers() {
        let one = BigInt::from(1);
        let v: Vec<BigInt> = (1..=5).map(|n| count_6v(n, &one, &one, &one)).collect();
        assert_eq!(v, [1, 2, 7, 42, 429].map(BigInt::from));
    }

    #[test]
    fn refinement_small() {
        for n in 1..=3 {
            let r = verify_refinement_theorem(n);
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }
}
