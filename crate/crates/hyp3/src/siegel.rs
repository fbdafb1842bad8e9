//! The Siegel upper half-space, the symplectic group action and affine families
//! `τ(t) = t·E + C` of period matrices.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::Rng;

use crate::exact::matrix::standard_j;
use crate::exact::rational::to_f64;
use crate::exact::{Field, GaussianRational, Mat, Rational};
use crate::{Error, Result};

pub type CMat = DMatrix<Complex64>;

/// Absolute tolerance for the symmetry of numeric period matrices.
pub const SYMMETRY_TOL: f64 = 1e-12;

/// Smallest eigenvalue of a real symmetric matrix.
pub fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    if m.nrows() == 0 {
        return f64::INFINITY;
    }
    SymmetricEigen::new(m.clone()).eigenvalues.iter().cloned().fold(f64::INFINITY, f64::min)
}

pub fn imag_part(m: &CMat) -> DMatrix<f64> {
    m.map(|z| z.im)
}

/// Symmetric within [`SYMMETRY_TOL`] with positive-definite imaginary part.
pub fn is_siegel_point(m: &CMat) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.nrows();
    for i in 0..n {
        for j in 0..i {
            if (m[(i, j)] - m[(j, i)]).norm() > SYMMETRY_TOL {
                return false;
            }
        }
    }
    let y = imag_part(m);
    let y = (&y + y.transpose()) * 0.5;
    min_eigenvalue(&y) > 0.0
}

/// A validated point of the Siegel upper half-space ℍ_g.
#[derive(Clone, Debug, PartialEq)]
pub struct SiegelPoint {
    tau: CMat,
}

impl SiegelPoint {
    pub fn new(tau: CMat) -> Result<Self> {
        if !is_siegel_point(&tau) {
            return Err(Error::InvalidInput("not a Siegel point".into()));
        }
        // Remove sub-tolerance asymmetry so downstream sums see an exactly symmetric τ.
        let sym = (&tau + tau.transpose()) * Complex64::new(0.5, 0.0);
        Ok(Self { tau: sym })
    }

    pub fn from_rows(rows: &[&[Complex64]]) -> Result<Self> {
        let n = rows.len();
        Self::new(DMatrix::from_fn(n, n, |i, j| rows[i][j]))
    }

    pub fn diagonal(d: &[Complex64]) -> Result<Self> {
        Self::new(DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(d)))
    }

    /// A random point with `|Re τ_ij| ≤ 1/2` and `Im τ = y_min·I + AAᵀ`, `A` uniform in
    /// `[−1/2, 1/2]`; so `Im τ ≽ y_min·I`.
    pub fn random<R: Rng>(rng: &mut R, g: usize, y_min: f64) -> Self {
        let x = DMatrix::from_fn(g, g, |_, _| rng.gen_range(-0.5..0.5));
        let a = DMatrix::from_fn(g, g, |_, _| rng.gen_range(-0.5..0.5));
        let y = DMatrix::<f64>::identity(g, g) * y_min + &a * a.transpose();
        let tau = DMatrix::from_fn(g, g, |i, j| {
            let (p, q) = if i <= j { (i, j) } else { (j, i) };
            Complex64::new(x[(p, q)], y[(i, j)])
        });
        Self::new(tau).expect("positive definite by construction")
    }

    /// `diag(τ₁, τ₂)`.
    pub fn block_diag(a: &SiegelPoint, b: &SiegelPoint) -> SiegelPoint {
        let (g1, g2) = (a.genus(), b.genus());
        let m = DMatrix::from_fn(g1 + g2, g1 + g2, |i, j| match (i < g1, j < g1) {
            (true, true) => a.tau[(i, j)],
            (false, false) => b.tau[(i - g1, j - g1)],
            _ => Complex64::zero(),
        });
        SiegelPoint { tau: m }
    }

    pub fn genus(&self) -> usize {
        self.tau.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.tau
    }

    pub fn imag(&self) -> DMatrix<f64> {
        imag_part(&self.tau)
    }

    pub fn min_imag_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.imag())
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.tau[(i, j)]
    }

    /// Principal sub-block on the given index range.
    pub fn sub_block(&self, start: usize, len: usize) -> SiegelPoint {
        SiegelPoint { tau: self.tau.view((start, start), (len, len)).into_owned() }
    }
}

/// Exact test `γᵀ J γ = J`.
pub fn is_symplectic(m: &Mat<Rational>) -> bool {
    if m.rows() != m.cols() || m.rows() % 2 == 1 || m.rows() == 0 {
        return false;
    }
    let j: Mat<Rational> = standard_j(m.rows() / 2);
    m.transpose().mul(&j).mul(m) == j
}

/// Similitude factor `c` with `γᵀ J γ = c·J`, if any.
pub fn similitude_factor(m: &Mat<Rational>) -> Option<Rational> {
    if m.rows() != m.cols() || m.rows() % 2 == 1 {
        return None;
    }
    let g = m.rows() / 2;
    let j: Mat<Rational> = standard_j(g);
    let p = m.transpose().mul(&j).mul(m);
    let c = p[(0, g)].clone();
    (p == j.scale(&c) && !c.is_zero()).then_some(c)
}

/// A matrix in Sp(2g, ℚ) with blocks `[[A, B], [C, D]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymplecticMatrix {
    m: Mat<Rational>,
}

impl SymplecticMatrix {
    pub fn new(m: Mat<Rational>) -> Result<Self> {
        if !is_symplectic(&m) {
            return Err(Error::InvalidInput("matrix is not symplectic".into()));
        }
        Ok(Self { m })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(int_mat(rows))
    }

    pub fn genus(&self) -> usize {
        self.m.rows() / 2
    }

    pub fn matrix(&self) -> &Mat<Rational> {
        &self.m
    }

    pub fn blocks(&self) -> [Mat<Rational>; 4] {
        let g = self.genus();
        [self.m.block(0, 0, g, g), self.m.block(0, g, g, g), self.m.block(g, 0, g, g), self.m.block(g, g, g, g)]
    }

    /// Whether all entries are integers, i.e. γ ∈ Sp(2g, ℤ).
    pub fn is_integral(&self) -> bool {
        self.m.entries().iter().all(|x| x.is_integer())
    }

    pub fn compose(&self, o: &Self) -> Self {
        Self { m: self.m.mul(&o.m) }
    }

    /// `γ⁻¹ = −J γᵀ J`.
    pub fn inverse(&self) -> Self {
        let j: Mat<Rational> = standard_j(self.genus());
        Self { m: j.mul(&self.m.transpose()).mul(&j).scale(&-Rational::one()) }
    }

    pub fn identity(g: usize) -> Self {
        Self { m: Mat::identity(2 * g) }
    }

    pub fn j(g: usize) -> Self {
        Self { m: standard_j(g) }
    }

    /// `[[I, B], [0, I]]` for symmetric `B`.
    pub fn translation(b: &Mat<Rational>) -> Result<Self> {
        let g = b.rows();
        Self::new(Mat::from_blocks(&Mat::identity(g), b, &Mat::zeros(g, g), &Mat::identity(g)))
    }

    /// `[[A, 0], [0, A⁻ᵀ]]`.
    pub fn rotation(a: &Mat<Rational>) -> Result<Self> {
        let g = a.rows();
        let ai = a.inverse().ok_or(Error::SingularMatrix)?;
        Self::new(Mat::from_blocks(a, &Mat::zeros(g, g), &Mat::zeros(g, g), &ai.transpose()))
    }

    /// Inversion `τ_kk ↦ −1/τ_kk`-type element acting on the k-th coordinate only.
    pub fn partial_inversion(g: usize, k: usize) -> Self {
        let mut m: Mat<Rational> = Mat::identity(2 * g);
        m[(k, k)] = Rational::zero();
        m[(g + k, g + k)] = Rational::zero();
        m[(k, g + k)] = Rational::one();
        m[(g + k, k)] = -Rational::one();
        Self { m }
    }

    /// A random word of `len` elementary generators (translations, rotations, inversions).
    pub fn random_word<R: Rng>(rng: &mut R, g: usize, len: usize) -> Self {
        let mut acc = Self::identity(g);
        for _ in 0..len {
            let gen = match rng.gen_range(0..4) {
                0 => {
                    let (i, j) = (rng.gen_range(0..g), rng.gen_range(0..g));
                    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                    let mut b: Mat<Rational> = Mat::zeros(g, g);
                    b[(i, j)] = Rational::from_integer(s.into());
                    b[(j, i)] = Rational::from_integer(s.into());
                    Self::translation(&b).expect("symmetric translation")
                }
                1 if g > 1 => {
                    let i = rng.gen_range(0..g);
                    let j = (i + rng.gen_range(1..g)) % g;
                    let mut a: Mat<Rational> = Mat::identity(g);
                    a[(i, j)] = Rational::from_integer(if rng.gen_bool(0.5) { 1.into() } else { (-1).into() });
                    Self::rotation(&a).expect("unimodular")
                }
                2 => Self::partial_inversion(g, rng.gen_range(0..g)),
                _ => Self::j(g),
            };
            acc = acc.compose(&gen);
        }
        acc
    }
}

pub fn int_mat(rows: &[&[i64]]) -> Mat<Rational> {
    Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect())
}

pub fn to_cmat_rational(m: &Mat<Rational>) -> CMat {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| Complex64::new(to_f64(&m[(i, j)]), 0.0))
}

pub fn to_cmat_gaussian(m: &Mat<GaussianRational>) -> CMat {
    DMatrix::from_fn(m.rows(), m.cols(), |i, j| m[(i, j)].to_c64())
}

/// `(Aτ + B)(Cτ + D)⁻¹` for any 2g×2g rational matrix (no validation of γ).
pub fn fractional_action(m: &Mat<Rational>, tau: &CMat) -> Result<CMat> {
    let g = tau.nrows();
    let f = to_cmat_rational(m);
    let a = f.view((0, 0), (g, g));
    let b = f.view((0, g), (g, g));
    let c = f.view((g, 0), (g, g));
    let d = f.view((g, g), (g, g));
    let num = a * tau + b;
    let den = c * tau + d;
    let scale = den.iter().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    if den.determinant().norm() <= 1e-13 * scale.powi(g as i32) {
        return Err(Error::NonInvertibleDenominator);
    }
    let inv = den.try_inverse().ok_or(Error::NonInvertibleDenominator)?;
    Ok(num * inv)
}

/// `γ∘τ = (Aτ + B)(Cτ + D)⁻¹`.
pub fn siegel_action(gamma: &SymplecticMatrix, tau: &SiegelPoint) -> Result<SiegelPoint> {
    if gamma.genus() != tau.genus() {
        return Err(Error::InvalidInput("genus mismatch".into()));
    }
    let out = fractional_action(&gamma.m, &tau.tau)?;
    let asym = (&out - out.transpose()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let size = out.iter().map(|z| z.norm()).fold(1.0, f64::max);
    if asym > 1e-9 * size {
        return Err(Error::NonInvertibleDenominator);
    }
    let sym = (&out + out.transpose()) * Complex64::new(0.5, 0.0);
    SiegelPoint::new(sym).map_err(|_| Error::NonInvertibleDenominator)
}

/// `det(Cτ + D)`.
pub fn automorphy_determinant(gamma: &SymplecticMatrix, tau: &SiegelPoint) -> Complex64 {
    let g = tau.genus();
    let f = to_cmat_rational(&gamma.m);
    let c = f.view((g, 0), (g, g));
    let d = f.view((g, g), (g, g));
    (c * &tau.tau + d).determinant()
}

/// A one-parameter family `τ(t) = t·slope + offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffinePeriodFamily {
    pub genus: usize,
    pub slope: Mat<Rational>,
    pub offset: Mat<GaussianRational>,
    pub domain_bound: f64,
}

impl AffinePeriodFamily {
    /// Validates symmetry and integrality and computes the domain bound.
    pub fn new(slope: Mat<Rational>, offset: Mat<GaussianRational>) -> Result<Self> {
        let g = slope.rows();
        if slope.cols() != g || offset.rows() != g || offset.cols() != g {
            return Err(Error::InvalidInput("family blocks must be g×g".into()));
        }
        if !slope.is_symmetric() || !offset.is_symmetric() {
            return Err(Error::InvalidInput("slope and offset must be symmetric".into()));
        }
        if !slope.entries().iter().all(|x| x.is_integer()) {
            return Err(Error::InvalidInput("slope must be integral".into()));
        }
        let domain_bound = domain_bound(&slope, &offset)?;
        Ok(Self { genus: g, slope, offset, domain_bound })
    }

    /// `t·slope + offset` for an exact parameter.
    pub fn evaluate_exact(&self, t: &GaussianRational) -> Mat<GaussianRational> {
        Mat::from_fn(self.genus, self.genus, |i, j| {
            self.offset[(i, j)].clone() + t.clone() * GaussianRational::from_rational(&self.slope[(i, j)])
        })
    }

    pub fn evaluate(&self, t: Complex64) -> Result<SiegelPoint> {
        evaluate_family(self, t)
    }
}

/// Smallest β ≥ 0 with `Im(offset) + β'·slope` positive definite for all β' > β,
/// found by bisection on the smallest eigenvalue.
pub fn domain_bound(slope: &Mat<Rational>, offset: &Mat<GaussianRational>) -> Result<f64> {
    let g = slope.rows();
    let s = DMatrix::from_fn(g, g, |i, j| to_f64(&slope[(i, j)]));
    let y = DMatrix::from_fn(g, g, |i, j| to_f64(&offset[(i, j)].im));
    let f = |beta: f64| min_eigenvalue(&(&y + &s * beta));
    if f(0.0) > 0.0 {
        return Ok(0.0);
    }
    let mut hi = 1.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(Error::InvalidInput("imaginary part never becomes positive definite".into()));
        }
    }
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

pub fn evaluate_family(f: &AffinePeriodFamily, t: Complex64) -> Result<SiegelPoint> {
    if t.im <= f.domain_bound {
        return Err(Error::OutsideDomain { im_t: t.im, bound: f.domain_bound });
    }
    let m = DMatrix::from_fn(f.genus, f.genus, |i, j| f.offset[(i, j)].to_c64() + t * to_f64(&f.slope[(i, j)]));
    SiegelPoint::new(m).map_err(|_| Error::OutsideDomain { im_t: t.im, bound: f.domain_bound })
}

/// `((a², ab, a), (ab, b², b), (a, b, 1))`.
#[allow(non_snake_case)]
pub fn rank_one_K(a: &Rational, b: &Rational) -> Mat<Rational> {
    let v = [a.clone(), b.clone(), Rational::one()];
    Mat::from_fn(3, 3, |i, j| &v[i] * &v[j])
}

/// `φ(t) = [[E·t, 0], [0, 0]] + A·diag(0, Z)·Aᵀ + R`.
#[allow(non_snake_case)]
pub fn build_varphi(
    E: &Mat<Rational>,
    A: &Mat<Rational>,
    Z: &Mat<GaussianRational>,
    R: &Mat<Rational>,
) -> Result<AffinePeriodFamily> {
    let r = E.rows();
    let g = A.rows();
    if E.cols() != r || A.cols() != g || Z.rows() + r != g || Z.cols() != Z.rows() || R.rows() != g || R.cols() != g {
        return Err(Error::InvalidInput("inconsistent block sizes".into()));
    }
    if E.is_zero() || !E.is_symmetric() {
        return Err(Error::InvalidInput("E must be nonzero and symmetric".into()));
    }
    if A.inverse().is_none() {
        return Err(Error::InvalidInput("A is singular".into()));
    }
    if !R.is_symmetric() {
        return Err(Error::InvalidInput("R is not symmetric".into()));
    }
    let slope = Mat::from_fn(g, g, |i, j| if i < r && j < r { E[(i, j)].clone() } else { Rational::zero() });
    let ag = A.map(GaussianRational::from_rational);
    let inner = Mat::from_fn(g, g, |i, j| {
        if i >= r && j >= r {
            Z[(i - r, j - r)].clone()
        } else {
            GaussianRational::zero()
        }
    });
    let offset = ag.mul(&inner).mul(&ag.transpose()).add(&R.map(GaussianRational::from_rational));
    AffinePeriodFamily::new(slope, offset)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn siegel_point_predicate() {
        let it = DMatrix::from_diagonal_element(3, 3, c(0.0, 1.0));
        assert!(is_siegel_point(&it));
        let mut bad = it.clone();
        bad[(0, 1)] = c(0.1, 0.0);
        assert!(!is_siegel_point(&bad));
        assert!(!is_siegel_point(&(-it)));
    }

    #[test]
    fn symplectic_predicate() {
        assert!(is_symplectic(&standard_j(3)));
        let mut d: Mat<Rational> = Mat::identity(6);
        d[(0, 0)] = int(2);
        assert!(!is_symplectic(&d));
    }

    #[test]
    fn inversion_fixes_i() {
        let tau = SiegelPoint::diagonal(&[c(0.0, 1.0)]).unwrap();
        let out = siegel_action(&SymplecticMatrix::j(1), &tau).unwrap();
        assert!((out.entry(0, 0) - c(0.0, 1.0)).norm() < 1e-15);
    }

    #[test]
    fn rotation_acts_by_congruence() {
        // q'₁₃ = q₁₃q₂₃ for A = (1 1 0; 0 1 0; 0 0 1).
        let a = int_mat(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]);
        let gamma = SymplecticMatrix::rotation(&a).unwrap();
        let tau = SiegelPoint::from_rows(&[
            &[c(0.1, 2.0), c(0.2, 0.3), c(0.05, 0.1)],
            &[c(0.2, 0.3), c(-0.3, 1.5), c(0.4, 0.2)],
            &[c(0.05, 0.1), c(0.4, 0.2), c(0.0, 1.7)],
        ])
        .unwrap();
        let out = siegel_action(&gamma, &tau).unwrap();
        let q = |z: Complex64| (Complex64::i() * 2.0 * std::f64::consts::PI * z).exp();
        assert!((q(out.entry(0, 2)) - q(tau.entry(0, 2)) * q(tau.entry(1, 2))).norm() < 1e-12);
    }

    #[test]
    fn family_domain_and_errors() {
        let f = AffinePeriodFamily::new(
            Mat::zeros(3, 3),
            Mat::identity(3).scale(&GaussianRational::i()),
        )
        .unwrap();
        assert_eq!(f.domain_bound, 0.0);
        let p = f.evaluate(c(5.0, 0.5)).unwrap();
        assert!((p.entry(1, 1) - c(0.0, 1.0)).norm() < 1e-15);
        assert!(matches!(f.evaluate(c(0.0, -1.0)), Err(Error::OutsideDomain { .. })));
    }

    #[test]
    fn rank_one_k_examples() {
        let k = rank_one_K(&int(0), &int(0));
        assert_eq!(k[(2, 2)], int(1));
        assert_eq!(k.entries().iter().filter(|x| !x.is_zero()).count(), 1);
        let k = rank_one_K(&rat(1, 2), &rat(1, 2));
        assert_eq!(k.row(0), vec![rat(1, 4), rat(1, 4), rat(1, 2)]);
        assert_eq!(k.rank(), 1);
    }

    #[test]
    fn varphi_block_form() {
        let e: Mat<Rational> = Mat::identity(2);
        let z = Mat::from_rows(vec![vec![GaussianRational::i()]]);
        let f = build_varphi(&e, &Mat::identity(3), &z, &Mat::zeros(3, 3)).unwrap();
        let t = GaussianRational::new(rat(1, 3), int(2));
        let v = f.evaluate_exact(&t);
        assert_eq!(v[(0, 0)], t);
        assert_eq!(v[(1, 1)], t);
        assert_eq!(v[(2, 2)], GaussianRational::i());
        assert!(v[(0, 1)].is_zero() && v[(1, 2)].is_zero());
        let e3: Mat<Rational> = Mat::identity(3);
        let f3 = build_varphi(&e3, &Mat::identity(3), &Mat::zeros(0, 0), &Mat::zeros(3, 3)).unwrap();
        assert_eq!(f3.slope, Mat::identity(3));
        assert!(f3.offset.is_zero());
        assert!(build_varphi(&e, &Mat::zeros(3, 3), &z, &Mat::zeros(3, 3)).is_err());
    }
}
