//! Bivariate rational generating functions in (r, s), coefficient
//! extraction by exact series division, and the determinant matrices built
//! from them.
//!
//! All matrix builders use 0-based indices: entry (i, j) is the coefficient
//! of r^i s^j. Formulas written with r^(i-1) s^(j-1) and 1-based indices
//! are shifted accordingly.

use crate::exactalg::{
    Cyclotomic16, Cyclotomic8, ExactMatrix, GaussianRational, PolyUni, Ring,
};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::collections::BTreeMap;

/// Sparse polynomial in r and s; key (i, j) is the exponent of r^i s^j.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariatePoly<R> {
    terms: BTreeMap<(usize, usize), R>,
}

impl<R: Ring> BivariatePoly<R> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, usize, R)>) -> Self {
        let mut p = Self::zero();
        for (i, j, c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    /// Integer-coefficient shorthand.
    pub fn from_int_terms(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| (i, j, R::from_int(c))))
    }

    pub fn constant(c: R) -> Self {
        Self::from_terms([(0, 0, c)])
    }

    fn add_term(&mut self, i: usize, j: usize, c: R) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((i, j)).or_insert_with(R::zero);
        *e = e.plus(&c);
        if e.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> R {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(R::zero)
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn times(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &rhs.terms {
                out.add_term(i + k, j + l, a.times(b));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(R::one()), |acc, _| acc.times(self))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> BivariatePoly<S> {
        BivariatePoly::from_terms(self.terms.iter().map(|(&(i, j), c)| (i, j, f(c))))
    }
}

/// numerator / denominator as a double power series in r and s.
#[derive(Clone, Debug)]
pub struct BivariateRationalGF<R> {
    num: BivariatePoly<R>,
    den: BivariatePoly<R>,
    inv_den0: R,
}

impl<R: Ring> BivariateRationalGF<R> {
    pub fn new(num: BivariatePoly<R>, den: BivariatePoly<R>) -> Result<Self> {
        let inv_den0 = den.coeff(0, 0).inverse().ok_or(Error::NonInvertibleConstant)?;
        Ok(Self { num, den, inv_den0 })
    }

    pub fn numerator(&self) -> &BivariatePoly<R> {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePoly<R> {
        &self.den
    }

    /// Sum of two generating functions over the common denominator.
    pub fn plus(&self, rhs: &Self) -> Result<Self> {
        Self::new(
            self.num.times(&rhs.den).plus(&rhs.num.times(&self.den)),
            self.den.times(&rhs.den),
        )
    }

    /// Multiply the numerator by a polynomial.
    pub fn times_poly(&self, p: &BivariatePoly<R>) -> Self {
        Self { num: self.num.times(p), den: self.den.clone(), inv_den0: self.inv_den0.clone() }
    }

    pub fn coeff_table(&self, max_i: usize, max_j: usize) -> CoeffTable<R> {
        let mut t = CoeffTable { max_i: 0, max_j: 0, values: vec![vec![]] };
        t.values.clear();
        t.grow(self, max_i, max_j);
        t
    }
}

/// Window of coefficients (i, j) for 0 ≤ i ≤ max_i, 0 ≤ j ≤ max_j.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTable<R> {
    max_i: usize,
    max_j: usize,
    values: Vec<Vec<R>>,
}

impl<R: Ring> CoeffTable<R> {
    pub fn max_i(&self) -> usize {
        self.max_i
    }

    pub fn max_j(&self) -> usize {
        self.max_j
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.values[i][j]
    }

    /// Enlarge the window, reusing every coefficient already computed.
    /// Entry (i, j) only depends on entries with smaller indices, so the
    /// recurrence D·F = N can be solved in place.
    pub fn grow(&mut self, gf: &BivariateRationalGF<R>, max_i: usize, max_j: usize) {
        let old_rows = self.values.len();
        let old_cols = self.values.first().map_or(0, |r| r.len());
        let max_i = max_i.max(old_rows.saturating_sub(1));
        let max_j = max_j.max(old_cols.saturating_sub(1));
        self.values.resize(max_i + 1, Vec::new());
        for i in 0..=max_i {
            let start = if i < old_rows { old_cols } else { 0 };
            for j in start..=max_j {
                let mut acc = gf.num.coeff(i, j);
                for (&(a, b), d) in &gf.den.terms {
                    if (a, b) == (0, 0) || a > i || b > j {
                        continue;
                    }
                    acc = acc.minus(&d.times(&self.values[i - a][j - b]));
                }
                let v = acc.times(&gf.inv_den0);
                self.values[i].push(v);
            }
        }
        self.max_i = max_i;
        self.max_j = max_j;
    }
}

fn ip<R: Ring>(terms: &[(usize, usize, i64)]) -> BivariatePoly<R> {
    BivariatePoly::from_int_terms(terms)
}

/// 1/(1 - r - s - rs): unrestricted Schröder paths.
pub fn schroder_gf<R: Ring>() -> BivariateRationalGF<R> {
    BivariateRationalGF::new(ip(&[(0, 0, 1)]), ip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]))
        .expect("unit constant term")
}

/// 1/(1 - rs).
pub fn diagonal_gf<R: Ring>() -> BivariateRationalGF<R> {
    BivariateRationalGF::new(ip(&[(0, 0, 1)]), ip(&[(0, 0, 1), (1, 1, -1)])).expect("unit constant term")
}

/// 2r/((1-r)(1-r-s-rs)); coefficient (i, j) counts restricted Schröder
/// paths from (i,0) to (0,j+1).
pub fn restricted_schroder_gf<R: Ring>() -> BivariateRationalGF<R> {
    let den = ip::<R>(&[(0, 0, 1), (1, 0, -1)])
        .times(&ip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]));
    BivariateRationalGF::new(ip(&[(1, 0, 2)]), den).expect("unit constant term")
}

/// 1/(1-rs) + 2r/((1-r)(1-r-s-rs)), the generating function of I + M.
pub fn t4_kernel<R: Ring>() -> BivariateRationalGF<R> {
    diagonal_gf().plus(&restricted_schroder_gf()).expect("unit constant term")
}

/// Which refined statistic to attach to the last path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RefinedType {
    /// τ per horizontal step at height n and for a diagonal step reaching it.
    One,
    /// τ per horizontal step at height n.
    Two,
}

impl RefinedType {
    pub fn from_index(m: u32) -> Result<Self> {
        match m {
            1 => Ok(RefinedType::One),
            2 => Ok(RefinedType::Two),
            _ => Err(Error::InvalidParameter(format!("refined type must be 1 or 2, got {m}"))),
        }
    }
}

/// I_n + θ·M_n with (M_n)_{i,j} = S̃_{i,j+1}, i, j = 0..n-1.
pub fn build_t4_matrix<R: Ring>(n: usize, theta: Option<&R>) -> ExactMatrix<R> {
    let table = restricted_schroder_gf::<BigInt>().coeff_table(n.saturating_sub(1), n.saturating_sub(1));
    let one = R::one();
    let theta = theta.unwrap_or(&one);
    ExactMatrix::from_fn(n, n, |i, j| {
        let m = R::from_bigint(table.get(i, j)).times(theta);
        if i == j {
            m.plus(&R::one())
        } else {
            m
        }
    })
}

type TauPoly = PolyUni<BigInt>;

fn tau_const(c: i64) -> TauPoly {
    TauPoly::constant(BigInt::from(c))
}

fn tau_lin(c0: i64, c1: i64) -> TauPoly {
    PolyUni::from_coeffs(vec![BigInt::from(c0), BigInt::from(c1)])
}

/// I + M^(m)(τ): columns 0..n-2 as in the unrefined matrix, the last column
/// taken from 1/(1-rs) + c(τ)·r/((1-τr)(1-r-s-rs)) at s^(n-1), where
/// c(τ) = 2τ (type 1) or 1+τ (type 2).
pub fn build_refined_t4_matrix(n: usize, kind: RefinedType) -> ExactMatrix<TauPoly> {
    if n == 0 {
        return ExactMatrix::identity(0);
    }
    let base = build_t4_matrix::<TauPoly>(n, None);
    let c = match kind {
        RefinedType::One => tau_lin(0, 2),
        RefinedType::Two => tau_lin(1, 1),
    };
    let num = BivariatePoly::from_terms([(1, 0, c)]);
    let den = BivariatePoly::from_terms([(0, 0, tau_const(1)), (1, 0, tau_lin(0, -1))])
        .times(&ip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]));
    let last = BivariateRationalGF::new(num, den)
        .and_then(|g| g.plus(&diagonal_gf()))
        .expect("unit constant term")
        .coeff_table(n - 1, n - 1);
    ExactMatrix::from_fn(n, n, |i, j| {
        if j + 1 == n {
            last.get(i, j).clone()
        } else {
            base.get(i, j).clone()
        }
    })
}

/// The same matrix from the compact generating function
/// kernel + s^(n-1)·r·c'(τ)/(1-τr)·(1+r)^e/(1-r)^(n+1), with
/// c' = 2(τ-1), e = n-1 (type 1) or c' = τ-1, e = n (type 2).
pub fn build_refined_t4_matrix_compact(n: usize, kind: RefinedType) -> ExactMatrix<TauPoly> {
    if n == 0 {
        return ExactMatrix::identity(0);
    }
    let (c, e) = match kind {
        RefinedType::One => (tau_lin(-2, 2), n - 1),
        RefinedType::Two => (tau_lin(-1, 1), n),
    };
    let one_plus_r = ip::<TauPoly>(&[(0, 0, 1), (1, 0, 1)]);
    let one_minus_r = ip::<TauPoly>(&[(0, 0, 1), (1, 0, -1)]);
    let num = BivariatePoly::from_terms([(1, n - 1, c)]).times(&one_plus_r.pow(e as u32));
    let den = BivariatePoly::from_terms([(0, 0, tau_const(1)), (1, 0, tau_lin(0, -1))])
        .times(&one_minus_r.pow(n as u32 + 1));
    let gf = t4_kernel::<TauPoly>()
        .plus(&BivariateRationalGF::new(num, den).expect("unit constant term"))
        .expect("unit constant term");
    let table = gf.coeff_table(n - 1, n - 1);
    ExactMatrix::from_fn(n, n, |i, j| table.get(i, j).clone())
}

/// Homogeneous Izergin–Korepin matrix at the combinatorial point, with its
/// prefactor kept separate.
#[derive(Clone, Debug)]
pub struct IkMatrix {
    pub matrix: ExactMatrix<GaussianRational>,
    pub prefactor: Cyclotomic8,
}

impl IkMatrix {
    /// prefactor × det.
    pub fn value(&self) -> Result<Cyclotomic8> {
        Ok(self.prefactor.times(&self.matrix.det()?.embed::<2>()))
    }
}

fn gauss(re: i64, im: i64) -> GaussianRational {
    GaussianRational::gaussian(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// Entries: coefficient of r^i s^j in 1/(1+r-s) - 1/(1+i+r-is); prefactor
/// (-1)^(n(n-1)/2) √2^(n²) / ((1+i)/√2)^n.
pub fn build_ik_matrix(n: usize) -> IkMatrix {
    let matrix = ik_base_table(n);
    IkMatrix { matrix, prefactor: ik_prefactor(n) }
}

fn ik_base_table(n: usize) -> ExactMatrix<GaussianRational> {
    let g1 = BivariateRationalGF::new(
        BivariatePoly::constant(gauss(1, 0)),
        BivariatePoly::from_terms([(0, 0, gauss(1, 0)), (1, 0, gauss(1, 0)), (0, 1, gauss(-1, 0))]),
    )
    .expect("unit constant term");
    let g2 = BivariateRationalGF::new(
        BivariatePoly::constant(gauss(-1, 0)),
        BivariatePoly::from_terms([(0, 0, gauss(1, 1)), (1, 0, gauss(1, 0)), (0, 1, gauss(0, -1))]),
    )
    .expect("invertible constant term");
    let gf = g1.plus(&g2).expect("invertible constant term");
    let m = n.saturating_sub(1);
    let t = gf.coeff_table(m, m);
    ExactMatrix::from_fn(n, n, |i, j| t.get(i, j).clone())
}

fn ik_prefactor(n: usize) -> Cyclotomic8 {
    let sign = if (n * (n.saturating_sub(1)) / 2) % 2 == 1 { -1 } else { 1 };
    let s2 = Cyclotomic8::sqrt2();
    // (1+i)/√2 = ζ8
    let zeta_n_inv = Cyclotomic8::zeta_pow(-(n as i64));
    s2.pow((n * n) as u32).times(&zeta_n_inv).times(&Cyclotomic8::from_int(sign))
}

/// The general prefactor
/// (-1)^(n(n-1)/2) c^n ((z-w)(q⁻²z - q²w))^(n²) q^(2n) / ((1-q⁴)^n w^n)
/// evaluated in Q(ζ16) at q = e^(iπ/8), z = 1/(1-q⁴), w = q⁴/(1-q⁴), with the
/// c-weight c = (q²-q⁻²)√(zw) normalized to 1.
pub fn ik_prefactor_general(n: usize) -> Cyclotomic16 {
    let q = Cyclotomic16::zeta();
    let qi = Cyclotomic16::zeta_pow(-1);
    let one = Cyclotomic16::one();
    let q4 = q.pow(4);
    let inv = one.minus(&q4).try_inverse().expect("1 - q^4 is nonzero");
    let z = inv.clone();
    let w = q4.times(&inv);
    let base = z.minus(&w).times(&qi.pow(2).times(&z).minus(&q.pow(2).times(&w)));
    let sign = if (n * n.saturating_sub(1) / 2) % 2 == 1 { -one.clone() } else { one.clone() };
    let denom = one.minus(&q4).times(&w).pow(n as u32);
    sign.times(&base.pow((n * n) as u32))
        .times(&q.pow(2 * n as u32))
        .times(&denom.try_inverse().expect("nonzero"))
}

/// det of (1-i)/(1-r-s-rs) + i/(1-rs): the same partition function with the
/// prefactor absorbed into the matrix.
pub fn build_ik_absorbed_matrix(n: usize) -> ExactMatrix<GaussianRational> {
    let a = BivariateRationalGF::new(
        BivariatePoly::constant(gauss(1, -1)),
        BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]),
    )
    .expect("unit constant term");
    let b = BivariateRationalGF::new(
        BivariatePoly::constant(gauss(0, 1)),
        BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 1, -1)]),
    )
    .expect("unit constant term");
    let m = n.saturating_sub(1);
    let t = a.plus(&b).expect("unit constant term").coeff_table(m, m);
    ExactMatrix::from_fn(n, n, |i, j| t.get(i, j).clone())
}

/// Check (1+ir)(1-s)·[(1-i)/(1-r-s-rs) + i/(1-rs)] = (1-r)(1-is)·T4-kernel as
/// coefficient tables up to the given order.
pub fn check_kernel_identity(order: usize) -> bool {
    let lhs_kernel = BivariateRationalGF::new(
        BivariatePoly::constant(gauss(1, -1)),
        BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]),
    )
    .and_then(|a| {
        a.plus(
            &BivariateRationalGF::new(
                BivariatePoly::constant(gauss(0, 1)),
                BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 1, -1)]),
            )
            .expect("unit"),
        )
    })
    .expect("unit");
    let lhs = lhs_kernel.times_poly(
        &BivariatePoly::from_terms([(0, 0, gauss(1, 0)), (1, 0, gauss(0, 1))])
            .times(&BivariatePoly::from_int_terms(&[(0, 0, 1), (0, 1, -1)])),
    );
    let rhs = t4_kernel::<GaussianRational>().times_poly(
        &BivariatePoly::from_int_terms(&[(0, 0, 1), (1, 0, -1)])
            .times(&BivariatePoly::from_terms([(0, 0, gauss(1, 0)), (0, 1, gauss(0, -1))])),
    );
    lhs.coeff_table(order, order) == rhs.coeff_table(order, order)
}

/// Izergin–Korepin matrix with a deformed last column, u = v².
#[derive(Clone, Debug)]
pub struct IkRefined {
    pub matrix: ExactMatrix<GaussianRational>,
    pub prefactor: Cyclotomic8,
}

impl IkRefined {
    pub fn value(&self) -> Result<Cyclotomic8> {
        Ok(self.prefactor.times(&self.matrix.det()?.embed::<2>()))
    }
}

/// Columns 0..n-2 as in [`build_ik_matrix`]; the last column holds the
/// coefficient of r^i in 1/(α + r) - 1/(β + r) with α = (1-iu)/(1-i),
/// β = (1+u)/(1-i). The prefactor is
/// (-1)^(n(n-1)/2) √2^(n²) / ((1+i)/√2)^n · (1/v) · ((1+u)/2 · (u+i)(1-i)/2)^n · ((1+i)/(1-u))^(n-1).
pub fn build_ik_refined_matrix(n: usize, v: &BigRational) -> Result<IkRefined> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    if Ring::is_zero(v) {
        return Err(Error::InvalidParameter("v = 0 gives u = 0".into()));
    }
    let u = v * v;
    if Ring::is_one(&u) {
        return Err(Error::InvalidParameter("u = 1: use the unrefined builder".into()));
    }
    let gu = GaussianRational::from_rational(u.clone());
    let i = GaussianRational::i();
    let one = GaussianRational::one();
    let inv_1mi = one.minus(&i).try_inverse()?;
    let alpha = one.minus(&i.times(&gu)).times(&inv_1mi);
    let beta = one.plus(&gu).times(&inv_1mi);
    let mk = |c: &GaussianRational, sign: i64| {
        BivariateRationalGF::new(
            BivariatePoly::constant(GaussianRational::from_int(sign)),
            BivariatePoly::from_terms([(0, 0, c.clone()), (1, 0, GaussianRational::one())]),
        )
    };
    let last = mk(&alpha, 1)?.plus(&mk(&beta, -1)?)?.coeff_table(n - 1, 0);
    let base = ik_base_table(n);
    let matrix = ExactMatrix::from_fn(n, n, |r, c| {
        if c + 1 == n {
            last.get(r, 0).clone()
        } else {
            base.get(r, c).clone()
        }
    });
    let half = BigRational::new(1.into(), 2.into());
    let a_u = gu.plus(&i).times(&one.minus(&i)).scale(&half);
    let b_u = one.plus(&gu).scale(&half);
    let tail = one.plus(&i).times(&one.minus(&gu).try_inverse()?);
    let g = GaussianRational::from_rational(v.recip())
        .times(&b_u.times(&a_u).pow(n as u32))
        .times(&tail.pow(n as u32 - 1));
    Ok(IkRefined { matrix, prefactor: ik_prefactor(n).times(&g.embed::<2>()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int_poly;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn coefficient_examples() {
        let t = diagonal_gf::<BigInt>().coeff_table(3, 3);
        for i in 0..=3 {
            for j in 0..=3 {
                assert_eq!(*t.get(i, j), bi((i == j) as i64));
            }
        }
        assert_eq!(*schroder_gf::<BigInt>().coeff_table(1, 1).get(1, 1), bi(3));
        let r = restricted_schroder_gf::<BigInt>().coeff_table(5, 0);
        for i in 0..=5 {
            assert_eq!(*r.get(i, 0), bi(2 * i as i64));
        }
    }

    #[test]
    fn window_growth_matches_fresh_table() {
        let gf = t4_kernel::<BigInt>();
        let mut t = gf.coeff_table(2, 3);
        t.grow(&gf, 6, 5);
        assert_eq!(t, gf.coeff_table(6, 5));
    }

    #[test]
    fn non_invertible_constant_rejected() {
        let r = BivariateRationalGF::<BigInt>::new(
            BivariatePoly::from_int_terms(&[(0, 0, 1)]),
            BivariatePoly::from_int_terms(&[(1, 0, 1)]),
        );
        assert!(matches!(r, Err(Error::NonInvertibleConstant)));
        // 2 is not a unit over the integers
        let r = BivariateRationalGF::<BigInt>::new(
            BivariatePoly::from_int_terms(&[(0, 0, 1)]),
            BivariatePoly::from_int_terms(&[(0, 0, 2)]),
        );
        assert!(r.is_err());
    }

    #[test]
    fn t4_matrices() {
        let m2 = build_t4_matrix::<BigInt>(2, None);
        assert_eq!(m2.entries(), &[bi(1), bi(0), bi(2), bi(3)]);
        let m3 = build_t4_matrix::<BigInt>(3, None);
        assert_eq!(m3.entries(), [1, 0, 0, 2, 3, 2, 4, 8, 13].map(bi).as_slice());
        assert_eq!(m3.det().unwrap(), bi(23));
        assert_eq!(build_t4_matrix::<BigInt>(1, None).entries(), &[bi(1)]);
        let zero = bi(0);
        assert!(build_t4_matrix::<BigInt>(4, Some(&zero)).det().unwrap().is_one());
    }

    #[test]
    fn refined_t4_examples() {
        let d1 = build_refined_t4_matrix(2, RefinedType::One).det().unwrap();
        assert_eq!(d1, int_poly(&[1, 2]));
        let d2 = build_refined_t4_matrix(3, RefinedType::Two).det().unwrap();
        assert_eq!(d2, int_poly(&[10, 10, 3]));
        for n in 1..=5 {
            for k in [RefinedType::One, RefinedType::Two] {
                assert_eq!(build_refined_t4_matrix(n, k), build_refined_t4_matrix_compact(n, k));
            }
        }
    }

    #[test]
    fn ik_small_values() {
        assert_eq!(build_ik_matrix(1).value().unwrap(), Cyclotomic8::one());
        assert_eq!(build_ik_matrix(2).value().unwrap(), Cyclotomic8::from_int(3));
        assert_eq!(build_ik_matrix(3).value().unwrap(), Cyclotomic8::from_int(23));
        for n in 1..=4 {
            assert_eq!(ik_prefactor_general(n), ik_prefactor(n).embed::<3>());
            let absorbed = build_ik_absorbed_matrix(n).det().unwrap();
            assert_eq!(absorbed.embed::<2>(), build_ik_matrix(n).value().unwrap());
        }
        assert!(check_kernel_identity(12));
    }

    #[test]
    fn ik_refined_single_vertex() {
        let v = BigRational::from_integer(bi(2));
        let r = build_ik_refined_matrix(1, &v).unwrap();
        assert_eq!(r.value().unwrap(), Cyclotomic8::from_int(2));
        assert!(build_ik_refined_matrix(2, &BigRational::from_integer(bi(0))).is_err());
        assert!(build_ik_refined_matrix(2, &BigRational::from_integer(bi(-1))).is_err());
    }
}
