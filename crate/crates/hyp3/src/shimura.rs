//! The families `Π_u(t)` of genus-3 period matrices in the hyperelliptic locus: their
//! construction, the vanishing of `θ[110;110]` along them (numerically and term group by
//! term group), the congruences behind the construction, and the fixed-part lattice.

use std::f64::consts::PI;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};

use crate::exact::{int, rat, GaussianRational, Mat, Rational};
use crate::lattice::{integer_kernel, rational_kernel, symplectic_pairing, IntVec};
use crate::siegel::{build_varphi, AffinePeriodFamily, SiegelPoint};
use crate::theta::{even_characteristics, theta, theta_constant, theta_relative, Characteristic};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// The characteristic that vanishes along every `Π_u`.
pub fn vanishing_characteristic() -> Characteristic {
    Characteristic::new(vec![1, 1, 0], vec![1, 1, 0]).expect("valid characteristic")
}

/// `u = a + bi` with rational `a, b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianParameter {
    pub a: Rational,
    pub b: Rational,
}

impl GaussianParameter {
    pub fn new(a: Rational, b: Rational) -> Self {
        GaussianParameter { a, b }
    }

    pub fn from_gaussian(u: &GaussianRational) -> Self {
        Self::new(u.re.clone(), u.im.clone())
    }

    /// `(1 + i)/n`.
    pub fn diagonal(n: i64) -> Self {
        Self::new(rat(1, n), rat(1, n))
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(Self::from_gaussian(&GaussianRational::parse(s)?))
    }

    pub fn u(&self) -> GaussianRational {
        GaussianRational::new(self.a.clone(), self.b.clone())
    }

    /// `u ∉ ℤ + iℤ`.
    pub fn is_admissible(&self) -> bool {
        !(self.a.is_integer() && self.b.is_integer())
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::DegenerateParameter(format!("u = {self} is a Gaussian integer")))
        }
    }
}

impl fmt::Display for GaussianParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.u())
    }
}

fn g(re: Rational, im: Rational) -> GaussianRational {
    GaussianRational::new(re, im)
}

/// `Π_u(t) = ((t + iu², u²/2, iu), (u²/2, t, u), (iu, u, i))`.
pub fn pi_u(u: &GaussianParameter) -> Result<AffinePeriodFamily> {
    u.require_admissible()?;
    let uu = u.u();
    let u2 = uu.clone() * uu.clone();
    let half = GaussianRational::real(rat(1, 2));
    let i = GaussianRational::i();
    let iu = i.clone() * uu.clone();
    let offset = Mat::from_rows(vec![
        vec![i.clone() * u2.clone(), u2.clone() * half.clone(), iu.clone()],
        vec![u2 * half, GaussianRational::zero(), uu.clone()],
        vec![iu, uu, i],
    ]);
    AffinePeriodFamily::new(Mat::diag(vec![int(1), int(1), int(0)]), offset)
}

/// `φ(t) = ((t + a²i, (a²−b²)/2 + abi, −b + ai), (…, t + 2ab + b²i, a + bi), (…, …, i))`,
/// assembled as `diag(t, t, 0) + A·diag(0, 0, i)·Aᵀ + R` with `A = ((1,0,a),(0,1,b),(0,0,1))`.
pub fn example_family(a: &Rational, b: &Rational) -> Result<AffinePeriodFamily> {
    if a.is_integer() && b.is_integer() {
        return Err(Error::DegenerateParameter(format!("(a, b) = ({a}, {b}) is integral")));
    }
    let (z, o) = (int(0), int(1));
    let amat = Mat::from_rows(vec![
        vec![o.clone(), z.clone(), a.clone()],
        vec![z.clone(), o.clone(), b.clone()],
        vec![z.clone(), z.clone(), o],
    ]);
    let r12 = (a * a - b * b) / int(2);
    let r = Mat::from_rows(vec![
        vec![z.clone(), r12.clone(), -b.clone()],
        vec![r12, int(2) * a * b, a.clone()],
        vec![-b.clone(), a.clone(), z],
    ]);
    build_varphi(&Mat::identity(2), &amat, &Mat::from_rows(vec![vec![GaussianRational::i()]]), &r)
}

/// `φ_{a,b}(t)` against `Π_{a+bi}(t + shift)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilyComparison {
    pub shift: GaussianRational,
    /// `φ(t) − Π_u(t + shift)`, independent of `t`.
    pub difference: Mat<GaussianRational>,
}

impl FamilyComparison {
    pub fn difference_is_integral(&self) -> bool {
        self.difference.entries().iter().all(|x| x.is_gaussian_integer() && x.im.is_zero())
    }
}

pub fn compare_families(a: &Rational, b: &Rational) -> Result<FamilyComparison> {
    let phi = example_family(a, b)?;
    let pi = pi_u(&GaussianParameter::new(a.clone(), b.clone()))?;
    if phi.slope != pi.slope {
        return Err(Error::InvalidInput("families have different slopes".into()));
    }
    let shift = g(int(2) * a * b, b * b);
    let shifted = pi.evaluate_exact(&shift);
    Ok(FamilyComparison { shift, difference: phi.offset.sub(&shifted) })
}

#[derive(Clone, Debug, PartialEq)]
pub struct VanishingSample {
    pub t: Complex64,
    pub target: f64,
    pub min_other: f64,
    pub min_other_characteristic: Characteristic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VanishingReport {
    pub u: GaussianParameter,
    pub samples: Vec<VanishingSample>,
}

impl VanishingReport {
    pub fn max_target(&self) -> f64 {
        self.samples.iter().map(|s| s.target).fold(0.0, f64::max)
    }

    pub fn min_other(&self) -> f64 {
        self.samples.iter().map(|s| s.min_other).fold(f64::INFINITY, f64::min)
    }
}

/// `|θ[110;110](Π_u(t))|` and the smallest of the other 35 even theta constants.
pub fn verify_vanishing(u: &GaussianParameter, t_samples: &[Complex64], tol: f64) -> Result<VanishingReport> {
    let fam = pi_u(u)?;
    let target_char = vanishing_characteristic();
    let mut samples = Vec::new();
    for &t in t_samples {
        let tau = fam.evaluate(t)?;
        let mut target = f64::NAN;
        let mut min_other = (f64::INFINITY, target_char.clone());
        for c in even_characteristics(3)? {
            let v = theta_constant(&c, &tau, tol)?.value.norm();
            if c == target_char {
                target = v;
            } else if v < min_other.0 {
                min_other = (v, c);
            }
        }
        samples.push(VanishingSample { t, target, min_other: min_other.0, min_other_characteristic: min_other.1 });
    }
    Ok(VanishingReport { u: u.clone(), samples })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationsReport {
    /// `τ12 − τ23²/2`; the `q̃12` relation holds when this lies in `2ℤ`.
    pub q12_residue: GaussianRational,
    pub q12_holds: bool,
    /// `Re τ12 − (a²−b²)/2`, required to be an integer.
    pub r12_residue: Rational,
    /// `(τ22 − τ11) + iτ23²`; the `γ` relation holds when this lies in `8ℤ`.
    pub gamma_residue: GaussianRational,
    pub gamma_holds: bool,
    /// `Re(τ22 − τ11) − 2ab`, required to be an integer.
    pub r22_residue: Rational,
    /// `|q̃12² − exp(πiτ23²/2)|` in the complex embedding.
    pub q12_numeric: f64,
    /// `|γ − exp(πτ23²/4)|` with `γ = exp(2πi(τ22 − τ11)/8)`.
    pub gamma_numeric: f64,
}

fn in_multiple_of(x: &GaussianRational, m: i64) -> bool {
    x.im.is_zero() && (&x.re / int(m)).is_integer()
}

/// Exact congruences fixing `τ12` and `τ22 − τ11` along `φ_{a,b}`.
pub fn relations_check(a: &Rational, b: &Rational) -> Result<RelationsReport> {
    let fam = example_family(a, b)?;
    let o = &fam.offset;
    let (t11, t12, t22, t23) = (o[(0, 0)].clone(), o[(0, 1)].clone(), o[(1, 1)].clone(), o[(1, 2)].clone());
    let half = GaussianRational::real(rat(1, 2));
    let q12_residue = t12.clone() - t23.clone() * t23.clone() * half;
    let diff = t22 - t11;
    let gamma_residue = diff.clone() + GaussianRational::i() * t23.clone() * t23.clone();
    let (t12c, t23c, diffc) = (t12.to_c64(), t23.to_c64(), diff.to_c64());
    Ok(RelationsReport {
        q12_holds: in_multiple_of(&q12_residue, 2),
        r12_residue: t12.re.clone() - (a * a - b * b) / int(2),
        gamma_holds: in_multiple_of(&gamma_residue, 8),
        r22_residue: diff.re - int(2) * a * b,
        q12_residue,
        gamma_residue,
        q12_numeric: ((I * PI * t12c).exp() - (I * PI * t23c * t23c / 2.0).exp()).norm(),
        gamma_numeric: ((I * 2.0 * PI * diffc / 8.0).exp() - (PI * t23c * t23c / 4.0).exp()).norm(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GroupResidual {
    pub absolute: f64,
    /// Largest term magnitude in the group.
    pub scale: f64,
}

impl GroupResidual {
    pub fn relative(&self) -> f64 {
        if self.scale == 0.0 {
            self.absolute
        } else {
            self.absolute / self.scale
        }
    }
}

fn theta00_at_i(w: Complex64, tol: f64) -> Result<Complex64> {
    let c = Characteristic::new(vec![0], vec![0])?;
    let tau = SiegelPoint::diagonal(&[I])?;
    match theta_relative(&c, &tau, &[w], tol) {
        Ok(v) => Ok(v.value),
        Err(Error::PrecisionUnreachable { .. }) => Ok(theta(&c, &tau, &[w], tol)?.value),
        Err(e) => Err(e),
    }
}

/// One group of the rank-2 Fourier–Jacobi series of `θ[110;110]` along `Π_u`, divided by
/// its common power of `q`: the pair `θ(n,n) − q̃12^{−2n²}θ(n,−n)` for `n1 = n2`, or the
/// four terms with `(n1, n2)` and `(n2, n1)` for `n1 > n2`, where
/// `θ(n1, n2) = θ[0;0](i, (n1τ13 + n2τ23)/2)`.
pub fn fj_group_vanishing(u: &GaussianParameter, n1: i64, n2: i64, tol: f64) -> Result<GroupResidual> {
    if n1 % 2 == 0 || n2 % 2 == 0 {
        return Err(Error::InvalidInput("indices must be odd".into()));
    }
    if !(n1 >= n2 && n2 > 0) {
        return Err(Error::InvalidInput("need n1 ≥ n2 > 0".into()));
    }
    let fam = pi_u(u)?;
    let o = &fam.offset;
    let (t12, t13, t23) = (o[(0, 1)].to_c64(), o[(0, 2)].to_c64(), o[(1, 2)].to_c64());
    // τ22 − τ11 does not depend on t.
    let diff = (o[(1, 1)].clone() - o[(0, 0)].clone()).to_c64();
    let q12 = (I * 2.0 * PI * t12 / 4.0).exp();
    let gamma = (I * 2.0 * PI * diff / 8.0).exp();
    let th = |m1: i64, m2: i64| theta00_at_i((t13 * m1 as f64 + t23 * m2 as f64) / 2.0, tol);
    let ipow = |k: i64| I.powi(k.rem_euclid(4) as i32);
    let terms: Vec<Complex64> = if n1 == n2 {
        let n = n1;
        vec![th(n, n)?, -q12.powi(-2 * (n * n) as i32) * th(n, -n)?]
    } else {
        let p = q12.powi(-2 * (n1 * n2) as i32);
        let gm = gamma.powi((n1 * n1 - n2 * n2) as i32);
        vec![
            ipow(n1 + n2) * th(n1, n2)?,
            ipow(n1 - n2) * p * th(n1, -n2)?,
            ipow(n1 + n2) * gm * th(n2, n1)?,
            ipow(n2 - n1) * p * gm * th(n2, -n1)?,
        ]
    };
    let sum: Complex64 = terms.iter().sum();
    let scale = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    Ok(GroupResidual { absolute: sum.norm(), scale })
}

/// Integer coordinates of the columns of `(Π_u(t) | I)`: each column is a constant
/// Gaussian-rational vector plus `t` times a 0/1 vector.
fn lattice_columns(fam: &AffinePeriodFamily) -> Vec<(Vec<GaussianRational>, Vec<Rational>)> {
    let mut cols = Vec::new();
    for j in 0..3 {
        cols.push(((0..3).map(|i| fam.offset[(i, j)].clone()).collect(), (0..3).map(|i| fam.slope[(i, j)].clone()).collect()));
    }
    for j in 0..3 {
        let e: Vec<Rational> = (0..3).map(|i| if i == j { int(1) } else { int(0) }).collect();
        cols.push((e.iter().cloned().map(GaussianRational::real).collect(), vec![int(0); 3]));
    }
    cols
}

/// The literal axis condition: integer combinations of the six columns whose first two
/// coordinates vanish identically in `t`.
pub fn axis_kernel(u: &GaussianParameter) -> Result<Vec<IntVec>> {
    let fam = pi_u(u)?;
    let cols = lattice_columns(&fam);
    let mut rows = Vec::new();
    for i in 0..2 {
        rows.push(cols.iter().map(|c| c.0[i].re.clone()).collect::<Vec<_>>());
        rows.push(cols.iter().map(|c| c.0[i].im.clone()).collect());
        rows.push(cols.iter().map(|c| c.1[i].clone()).collect());
    }
    Ok(rational_kernel(&Mat::from_rows(rows)))
}

#[derive(Clone, Debug, PartialEq)]
pub struct FixedPart {
    pub basis: Vec<IntVec>,
    pub degree: BigInt,
}

/// The fixed part of the family: lattice vectors that do not move with `t` and span a
/// complex subspace.
///
/// First the `t`-constant sublattice `K` (the `t`-coefficients vanish); then, with `W` the
/// real span of its image in `ℂ³ = ℝ⁶`, the vectors landing in `W ∩ iW`.  The degree is
/// `|m₁ᵀJm₂|` on a basis.
pub fn fixed_part_lattice(u: &GaussianParameter) -> Result<FixedPart> {
    let fam = pi_u(u)?;
    let cols = lattice_columns(&fam);
    let t_rows: Vec<IntVec> = (0..3)
        .map(|i| cols.iter().map(|c| (c.1[i].clone()).to_integer()).collect())
        .collect();
    let k = integer_kernel(&t_rows, 6);
    // Real coordinates (Re z₁..z₃, Im z₁..z₃) of the image of each kernel vector.
    let image = |m: &IntVec| -> Vec<Rational> {
        let mut z = vec![GaussianRational::zero(); 3];
        for (mj, c) in m.iter().zip(&cols) {
            let s = GaussianRational::real(Rational::from_integer(mj.clone()));
            for i in 0..3 {
                z[i] = z[i].clone() + s.clone() * c.0[i].clone();
            }
        }
        z.iter().map(|x| x.re.clone()).chain(z.iter().map(|x| x.im.clone())).collect()
    };
    let r = Mat::from_fn(6, k.len(), |i, j| image(&k[j])[i].clone());
    // Multiplication by i on ℝ⁶.
    let times_i = Mat::from_fn(6, 6, |i, j| {
        if i < 3 && j == i + 3 {
            int(-1)
        } else if i >= 3 && j + 3 == i {
            int(1)
        } else {
            int(0)
        }
    });
    let p = Mat::from_rows(r.left_nullspace());
    let cond = p.mul(&times_i).mul(&r);
    let c = rational_kernel(&cond);
    if c.len() != 2 {
        return Err(Error::UnexpectedFixedRank(c.len()));
    }
    let basis: Vec<IntVec> = c
        .iter()
        .map(|cv| (0..6).map(|i| cv.iter().zip(&k).map(|(x, kv)| x * &kv[i]).sum()).collect())
        .collect();
    let degree = symplectic_pairing(&basis[0], &basis[1]).abs();
    Ok(FixedPart { basis, degree })
}

/// The combination `n²c₁ + n²c₂ − (2n²−1)c₃ − n²(2n²−1)c₄ + n²c₅` of the columns.
pub fn candidate_generator(n: i64) -> IntVec {
    let n2 = n * n;
    [n2, n2, -(2 * n2 - 1), -n2 * (2 * n2 - 1), n2, 0].iter().map(|&x| BigInt::from(x)).collect()
}

/// Image of an integer combination of the columns at parameter `t`, and its `t`-coefficient.
pub fn combination_image(u: &GaussianParameter, m: &IntVec) -> Result<(Vec<GaussianRational>, Vec<Rational>)> {
    let fam = pi_u(u)?;
    let cols = lattice_columns(&fam);
    let mut z = vec![GaussianRational::zero(); 3];
    let mut tc = vec![Rational::zero(); 3];
    for (mj, c) in m.iter().zip(&cols) {
        let s = Rational::from_integer(mj.clone());
        for i in 0..3 {
            z[i] = z[i].clone() + GaussianRational::real(s.clone()) * c.0[i].clone();
            tc[i] += &s * &c.1[i];
        }
    }
    Ok((z, tc))
}
