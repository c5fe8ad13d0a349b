//! Determinant builders against values derived from enumeration.

use ice20v_core::exactalg::{Cyclotomic8, GaussianRational, Ring};
use ice20v_core::genfun::{build_ik_matrix, build_ik_refined_matrix};
use ice20v_core::icemodel::count_6v_refined;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Σ_ℓ Z_{;ℓ} ((1+u)/2)^(ℓ-1) √u ((u+i)(1-i)/2)^(n-ℓ) with the refined
/// counts taken from enumeration at weights (1, √2, 1).
fn refined_six_vertex_sum(n: usize, v: &BigRational) -> Cyclotomic8 {
    let one = Cyclotomic8::one();
    let z = count_6v_refined(n, &one, &Cyclotomic8::sqrt2(), &one);
    let gu = GaussianRational::from_rational(v * v);
    let half = q(1, 2);
    let i = GaussianRational::i();
    let a = GaussianRational::one().plus(&gu).scale(&half).embed::<2>();
    let b = gu.plus(&i).times(&GaussianRational::one().minus(&i)).scale(&half).embed::<2>();
    let sqrt_u = Cyclotomic8::from_rational(v.clone());
    (1..=n).fold(Cyclotomic8::zero(), |acc, l| {
        acc.plus(&z.coeff(l - 1).times(&a.pow(l as u32 - 1)).times(&sqrt_u).times(&b.pow((n - l) as u32)))
    })
}

#[test]
fn refined_ik_matches_enumeration() {
    let one = Cyclotomic8::one();
    let z2 = count_6v_refined(2, &one, &Cyclotomic8::sqrt2(), &one);
    assert_eq!(z2.coeffs().to_vec(), vec![Cyclotomic8::from_int(1), Cyclotomic8::from_int(2)]);
    for n in 1..=5 {
        for (p, d) in [(2, 1), (1, 2), (3, 1), (2, 3), (-3, 4)] {
            let v = q(p, d);
            let got = build_ik_refined_matrix(n, &v).unwrap().value().unwrap();
            assert_eq!(got, refined_six_vertex_sum(n, &v), "n={n} v={v}");
        }
    }
}

#[test]
fn refined_ik_approaches_unrefined_value() {
    let eps = q(1, 1_000_000);
    let v = q(1, 1) + eps;
    for n in 1..=5 {
        let refined = build_ik_refined_matrix(n, &v).unwrap().value().unwrap();
        let plain = build_ik_matrix(n).value().unwrap().to_rational().unwrap();
        let c = refined.coeffs();
        let re = c[0].to_f64().unwrap();
        let im = c[2].to_f64().unwrap();
        // ζ8 and ζ8³ parts vanish: the value lies in Q(i)
        assert!(c[1] == BigRational::from_integer(0.into()) && c[3] == BigRational::from_integer(0.into()));
        let z = plain.to_f64().unwrap();
        let delta = ((re - z).powi(2) + im.powi(2)).sqrt();
        assert!(delta < 1e-3 * z, "n={n}: {re}+{im}i vs {z}");
    }
}
