//! Kagome weight relations and Yang-Baxter identities.

use crate::exactalg::{Cyclotomic16, Cyclotomic8, LaurentMulti, Ring};
use crate::report::{Check, Report};
use num_bigint::BigInt;
use num_rational::BigRational;

/// Weights (a_i, b_i, c_i) of the three sublattices.
type Triple<R> = [(R, R, R); 3];

#[derive(Clone, Debug)]
pub struct KagomeReport {
    pub checks: Report,
    /// Relations involving the perturbed weight b1; every one should fail.
    pub negative_control: Report,
}

impl KagomeReport {
    pub fn passed(&self) -> bool {
        self.checks.passed() && self.negative_control.checks.iter().all(|c| !c.pass)
    }
}

fn ten_relations<R: Ring>(w: &Triple<R>) -> Vec<(&'static str, R)> {
    let [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3)] = w;
    let p = |x: &R, y: &R, z: &R| x.times(y).times(z);
    vec![
        ("a1a2a3", p(a1, a2, a3)),
        ("b1a2b3", p(b1, a2, b3)),
        ("b1a2c3", p(b1, a2, c3)),
        ("c1a2a3", p(c1, a2, a3)),
        ("b1c2a3", p(b1, c2, a3)),
        ("b1b2a3", p(b1, b2, a3)),
        ("a1b2c3+c1c2b3", p(a1, b2, c3).plus(&p(c1, c2, b3))),
        ("a1b2b3+c1c2c3", p(a1, b2, b3).plus(&p(c1, c2, c3))),
        ("c1b2b3+a1c2c3", p(c1, b2, b3).plus(&p(a1, c2, c3))),
        ("c1b2c3+a1c2b3", p(c1, b2, c3).plus(&p(a1, c2, b3))),
    ]
}

fn yang_baxter<R: Ring>(w: &Triple<R>) -> Vec<(&'static str, R)> {
    let [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3)] = w;
    vec![
        ("(a1b2-b1a2)c3+c1c2b3", a1.times(b2).minus(&b1.times(a2)).times(c3).plus(&c1.times(c2).times(b3))),
        ("(a1b3-b1a3)c2+c1c3b2", a1.times(b3).minus(&b1.times(a3)).times(c2).plus(&c1.times(c3).times(b2))),
        ("(b2b3-a2a3)c1+c2c3a1", b2.times(b3).minus(&a2.times(a3)).times(c1).plus(&c2.times(c3).times(a1))),
    ]
}

/// The homogeneous solution without its cube-root scale: every triple
/// product then equals 2 instead of 1.
fn homogeneous() -> Triple<Cyclotomic8> {
    let one = Cyclotomic8::one();
    let r2 = Cyclotomic8::sqrt2();
    [
        (one.clone(), r2.clone(), one.clone()),
        (r2.clone(), one.clone(), one.clone()),
        (r2, one.clone(), one),
    ]
}

fn numeric_checks(w: &Triple<Cyclotomic8>, tag: &str) -> Report {
    let mut r = Report::default();
    let half = Cyclotomic8::from_rational(BigRational::new(1.into(), 2.into()));
    for (name, v) in ten_relations(w) {
        r.push(Check::new(format!("{tag}relation {name}"), Cyclotomic8::one(), v.times(&half)));
    }
    for (name, v) in yang_baxter(w) {
        r.push(Check::new(format!("{tag}yang-baxter {name}"), Cyclotomic8::zero(), v));
    }
    r
}

type Laurent = LaurentMulti<BigInt>;

/// Integrable weights in variables Z, W, T, q with z = Z², w = W², t = T²,
/// so that every square root is a monomial.
fn integrable_symbolic() -> Triple<Laurent> {
    let zero = Laurent::zero(&["Z", "W", "T", "q"]);
    let mono = |c: i64, e: [i32; 4]| zero.monomial_like(e.to_vec(), BigInt::from(c)).expect("four exponents");
    let sum = |ts: &[(i64, [i32; 4])]| {
        ts.iter().fold(zero.clone(), |acc, &(c, e)| acc.add(&mono(c, e)).expect("same vars"))
    };
    // A(u,v) = u - v, B(u,v) = q^-2 u - q^2 v, C(u,v) = (q^2 - q^-2) sqrt(uv)
    let a1 = sum(&[(1, [2, 0, 0, 0]), (-1, [0, 2, 0, 0])]);
    let b1 = sum(&[(1, [2, 0, 0, -2]), (-1, [0, 2, 0, 2])]);
    let c1 = sum(&[(1, [1, 1, 0, 2]), (-1, [1, 1, 0, -2])]);
    // u = qz, v = t/q
    let a2 = sum(&[(1, [2, 0, 0, 1]), (-1, [0, 0, 2, -1])]);
    let b2 = sum(&[(1, [2, 0, 0, -1]), (-1, [0, 0, 2, 1])]);
    let c2 = sum(&[(1, [1, 0, 1, 2]), (-1, [1, 0, 1, -2])]);
    // u = qt, v = w/q
    let a3 = sum(&[(1, [0, 0, 2, 1]), (-1, [0, 2, 0, -1])]);
    let b3 = sum(&[(1, [0, 0, 2, -1]), (-1, [0, 2, 0, 1])]);
    let c3 = sum(&[(1, [0, 1, 1, 2]), (-1, [0, 1, 1, -2])]);
    [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3)]
}

fn symbolic_yang_baxter(w: &Triple<Laurent>) -> Vec<(&'static str, Laurent)> {
    let [(a1, b1, c1), (a2, b2, c2), (a3, b3, c3)] = w;
    let m = |x: &Laurent, y: &Laurent| x.mul(y).expect("same vars");
    let s = |x: &Laurent, y: &Laurent| x.sub(y).expect("same vars");
    let p = |x: &Laurent, y: &Laurent| x.add(y).expect("same vars");
    vec![
        ("(a1b2-b1a2)c3+c1c2b3", p(&m(&s(&m(a1, b2), &m(b1, a2)), c3), &m(&m(c1, c2), b3))),
        ("(a1b3-b1a3)c2+c1c3b2", p(&m(&s(&m(a1, b3), &m(b1, a3)), c2), &m(&m(c1, c3), b2))),
        ("(b2b3-a2a3)c1+c2c3a1", p(&m(&s(&m(b2, b3), &m(a2, a3)), c1), &m(&m(c2, c3), a1))),
    ]
}

/// At q = e^{iπ/8} and t = 1 the homogeneous integrable weights are
/// proportional to (1,√2,1), (√2,1,1), (√2,1,1) with factors
/// (q²-q⁻²), q³(q²-q⁻²), q⁻³(q²-q⁻²).
fn specialization_checks() -> Report {
    let mut r = Report::default();
    let q = |e: i64| Cyclotomic16::zeta_pow(e);
    let diff = |a: i64, b: i64| q(a).minus(&q(b));
    let base = diff(2, -2);
    let r2 = Cyclotomic8::sqrt2().embed::<3>();
    let one = Cyclotomic16::one();
    let got = [
        ("a1", diff(6, -6), base.clone()),
        ("b1", diff(4, -4), base.times(&r2)),
        ("c1", diff(2, -2), base.clone()),
        ("a2", diff(7, -1), q(3).times(&base).times(&r2)),
        ("b2", diff(5, 1), q(3).times(&base).times(&one)),
        ("c2", diff(5, 1), q(3).times(&base)),
        ("a3", diff(1, -7), q(-3).times(&base).times(&r2)),
        ("b3", diff(-1, -5), q(-3).times(&base)),
        ("c3", diff(-1, -5), q(-3).times(&base)),
    ];
    for (name, actual, expected) in got {
        r.push(Check::new(format!("q=e^(i pi/8) {name}"), expected, actual));
    }
    r
}

/// Exact checks of the weight system; `negative_control` perturbs b1 by 1.
pub fn verify_kagome() -> KagomeReport {
    let mut checks = numeric_checks(&homogeneous(), "");
    for (name, v) in symbolic_yang_baxter(&integrable_symbolic()) {
        checks.push(Check::with_pass(format!("symbolic yang-baxter {name}"), "0", &v, v.is_zero()));
    }
    checks.extend(specialization_checks());

    let mut broken = homogeneous();
    broken[0].1 = broken[0].1.plus(&Cyclotomic8::one());
    let all = numeric_checks(&broken, "perturbed ");
    let negative_control = Report {
        checks: all.checks.into_iter().filter(|c| c.id.contains("b1")).collect(),
    };
    KagomeReport { checks, negative_control }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kagome_passes_and_control_fails() {
        let r = verify_kagome();
        assert!(r.checks.passed(), "{:?}", r.checks.failures().collect::<Vec<_>>());
        assert!(!r.negative_control.checks.is_empty());
        assert!(r.passed());
    }
}
