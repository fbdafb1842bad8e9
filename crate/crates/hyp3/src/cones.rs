//! The eight genus-3 boundary cones and their bounded/unbounded coordinates.
//!
//! Coordinates are monomials in `q_ij = e^{2πiτ_ij}`.  Exponent vectors are written
//! over the six entries in the order `(τ11, τ22, τ33, τ12, τ13, τ23)`.

use std::f64::consts::PI;
use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::Zero;

use crate::exact::{int, rat, Mat, Rational};
use crate::siegel::SiegelPoint;
use crate::theta::{even_characteristics, Characteristic};
use crate::{Error, Result};

/// Index pairs of the six entries, in exponent-vector order.
pub const ENTRIES: [(usize, usize); 6] = [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConeName {
    Sigma1,
    Sigma11,
    K3,
    Sigma111,
    K3Plus1,
    C4,
    K4Minus1,
    K4,
}

impl ConeName {
    pub const ALL: [ConeName; 8] = [
        ConeName::Sigma1,
        ConeName::Sigma11,
        ConeName::K3,
        ConeName::Sigma111,
        ConeName::K3Plus1,
        ConeName::C4,
        ConeName::K4Minus1,
        ConeName::K4,
    ];

    pub const RANK3: [ConeName; 5] =
        [ConeName::Sigma111, ConeName::K3Plus1, ConeName::C4, ConeName::K4Minus1, ConeName::K4];

    /// ASCII identifier used on the command line and in JSON.
    pub fn id(self) -> &'static str {
        match self {
            ConeName::Sigma1 => "sigma1",
            ConeName::Sigma11 => "sigma1+1",
            ConeName::K3 => "K3",
            ConeName::Sigma111 => "sigma1+1+1",
            ConeName::K3Plus1 => "K3+1",
            ConeName::C4 => "C4",
            ConeName::K4Minus1 => "K4-1",
            ConeName::K4 => "K4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, ' ' | '_' | '{' | '}'))
            .collect::<String>()
            .to_lowercase()
            .replace("σ", "sigma")
            .trim_start_matches("sigma")
            .to_string();
        Ok(match key.as_str() {
            "1" => ConeName::Sigma1,
            "1+1" | "11" => ConeName::Sigma11,
            "k3" => ConeName::K3,
            "1+1+1" | "111" => ConeName::Sigma111,
            "k3+1" | "k3p1" => ConeName::K3Plus1,
            "c4" => ConeName::C4,
            "k4-1" | "k4m1" => ConeName::K4Minus1,
            "k4" => ConeName::K4,
            _ => return Err(Error::Parse(format!("unknown cone '{s}'"))),
        })
    }
}

impl fmt::Display for ConeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// A boundary cone with its coordinate change.
#[derive(Clone, Debug, PartialEq)]
pub struct Cone {
    pub name: ConeName,
    /// Linear forms `l`; the generators are the rank-one forms `(l·x)²`.
    pub generators: Vec<[i64; 3]>,
    pub rank: usize,
    pub dimension: usize,
    /// Exponent vectors (over [`ENTRIES`]) of the unbounded variables `T_i`.
    pub unbounded: Vec<[i64; 6]>,
    /// Exponent vectors of the bounded variables `S_j`.
    pub bounded: Vec<[i64; 6]>,
}

impl Cone {
    /// Number of bounded variables, `r(r+1)/2 − k`.
    pub fn ell(&self) -> usize {
        self.rank * (self.rank + 1) / 2 - self.dimension
    }

    /// Entry indices (into [`ENTRIES`]) that the coordinates involve: all `τ_ij` with `i, j < rank`.
    pub fn columns(&self) -> Vec<usize> {
        (0..6).filter(|&k| ENTRIES[k].0 < self.rank && ENTRIES[k].1 < self.rank).collect()
    }

    /// Square exponent matrix: rows `T₁…T_k, S₁…S_ℓ`, columns [`Cone::columns`].
    pub fn exponent_matrix(&self) -> Mat<Rational> {
        let cols = self.columns();
        let rows: Vec<[i64; 6]> = self.unbounded.iter().chain(&self.bounded).cloned().collect();
        Mat::from_fn(rows.len(), cols.len(), |i, j| int(rows[i][cols[j]]))
    }

    /// Rank of a generic interior point, computed from the generators.
    pub fn generic_rank(&self) -> usize {
        let mut m: Mat<Rational> = Mat::zeros(3, 3);
        for (k, l) in self.generators.iter().enumerate() {
            // Distinct positive weights make the combination generic enough.
            let w = int(k as i64 + 1);
            for i in 0..3 {
                for j in 0..3 {
                    m[(i, j)] = m[(i, j)].clone() + w.clone() * int(l[i] * l[j]);
                }
            }
        }
        m.rank()
    }
}

fn cone(name: ConeName, generators: Vec<[i64; 3]>, rank: usize, unbounded: Vec<[i64; 6]>, bounded: Vec<[i64; 6]>) -> Cone {
    let dimension = generators.len();
    Cone { name, generators, rank, dimension, unbounded, bounded }
}

/// The eight cones of the genus-3 fan, up to GL₃(ℤ).
///
/// `σ_{C₄}` is given in the basis `x₁ = y₂ − y₃, x₂ = y₃ − y₁, x₃ = y₁`, in which its
/// generators become `x₁², x₂², x₃², (x₁+x₂+x₃)²`.
pub fn cone_catalog() -> Vec<Cone> {
    use ConeName::*;
    vec![
        cone(Sigma1, vec![[1, 0, 0]], 1, vec![[1, 0, 0, 0, 0, 0]], vec![]),
        cone(Sigma11, vec![[1, 0, 0], [0, 1, 0]], 2, vec![[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0]], vec![[0, 0, 0, 1, 0, 0]]),
        cone(
            K3,
            vec![[1, 0, 0], [0, 1, 0], [1, -1, 0]],
            2,
            vec![[1, 0, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 0, -1, 0, 0]],
            vec![],
        ),
        cone(
            Sigma111,
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1]],
            3,
            vec![[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]],
            vec![[0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
        ),
        cone(
            K3Plus1,
            vec![[1, 0, 0], [0, 1, 0], [1, -1, 0], [0, 0, 1]],
            3,
            vec![[1, 0, 0, 1, 0, 0], [0, 1, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0], [0, 0, 0, -1, 0, 0]],
            vec![[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]],
        ),
        cone(
            C4,
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]],
            3,
            vec![[1, 0, 0, 0, 0, -1], [0, 1, 0, 0, -1, 0], [0, 0, 1, -1, 0, 0], [0, 0, 0, 0, 0, 1]],
            vec![[0, 0, 0, 1, 0, -1], [0, 0, 0, 0, 1, -1]],
        ),
        cone(
            K4Minus1,
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1]],
            3,
            vec![
                [1, 0, 0, 1, 1, 0],
                [0, 1, 0, 1, 0, 0],
                [0, 0, 1, 0, 1, 0],
                [0, 0, 0, -1, 0, 0],
                [0, 0, 0, 0, -1, 0],
            ],
            vec![[0, 0, 0, 0, 0, 1]],
        ),
        cone(
            K4,
            vec![[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]],
            3,
            vec![
                [1, 0, 0, 1, 1, 0],
                [0, 1, 0, 1, 0, 1],
                [0, 0, 1, 0, 1, 1],
                [0, 0, 0, -1, 0, 0],
                [0, 0, 0, 0, -1, 0],
                [0, 0, 0, 0, 0, -1],
            ],
            vec![],
        ),
    ]
}

pub fn cone_by_name(name: ConeName) -> Cone {
    cone_catalog().into_iter().find(|c| c.name == name).expect("catalog is complete")
}

/// Boundary coordinates of a point: `T`, `S` and the τ-entries not involved.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundaryCoords {
    pub t: Vec<Complex64>,
    pub s: Vec<Complex64>,
    pub moduli: Vec<((usize, usize), Complex64)>,
}

fn tau_vector(tau: &SiegelPoint) -> [Complex64; 6] {
    ENTRIES.map(|(i, j)| tau.entry(i, j))
}

/// `exp(2πi Σ e_k τ_k)` — integer exponents applied to τ-entries, no roots of `q` taken.
fn monomial(e: &[i64; 6], tv: &[Complex64; 6]) -> Complex64 {
    let w: Complex64 = e.iter().zip(tv).map(|(&k, &x)| x * k as f64).sum();
    (Complex64::i() * 2.0 * PI * w).exp()
}

pub fn boundary_coords(c: &Cone, tau: &SiegelPoint) -> Result<BoundaryCoords> {
    if tau.genus() != 3 {
        return Err(Error::InvalidInput("boundary coordinates need genus 3".into()));
    }
    let tv = tau_vector(tau);
    let cols = c.columns();
    Ok(BoundaryCoords {
        t: c.unbounded.iter().map(|e| monomial(e, &tv)).collect(),
        s: c.bounded.iter().map(|e| monomial(e, &tv)).collect(),
        moduli: (0..6).filter(|k| !cols.contains(k)).map(|k| (ENTRIES[k], tv[k])).collect(),
    })
}

/// Inverse coordinate change: given `w` with `(T, S) = e^{2πi w}`, the τ-entries on
/// [`Cone::columns`] (exactly, `E⁻¹ w`).
pub fn entries_from_log_coords(c: &Cone, w: &[Complex64]) -> Result<Vec<Complex64>> {
    let e = c.exponent_matrix();
    if w.len() != e.rows() {
        return Err(Error::InvalidInput("wrong number of coordinates".into()));
    }
    let inv = e.inverse().ok_or(Error::SingularMatrix)?;
    Ok((0..inv.rows())
        .map(|i| (0..inv.cols()).map(|j| w[j] * crate::exact::rational::to_f64(&inv[(i, j)])).sum())
        .collect())
}

/// For a rank-3 cone: the period matrix with `(T, S) = e^{2πi w}`.
pub fn point_from_log_coords(c: &Cone, w: &[Complex64]) -> Result<SiegelPoint> {
    if c.rank != 3 {
        return Err(Error::InvalidInput("needs a rank-3 cone".into()));
    }
    let x = entries_from_log_coords(c, w)?;
    let mut m = DMatrix::from_element(3, 3, Complex64::zero());
    for (k, &(i, j)) in ENTRIES.iter().enumerate() {
        m[(i, j)] = x[k];
        m[(j, i)] = x[k];
    }
    SiegelPoint::new(m)
}

/// Exponents of `q_ii` (`a`) and of `q_jk` (`b_i`, `{i,j,k} = {1,2,3}`) in the series
/// term of `θ[ε;δ]` indexed by `N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialExponents {
    pub a: [Rational; 3],
    pub b: [Rational; 3],
}

impl MonomialExponents {
    /// Same data over [`ENTRIES`]: `(a₁, a₂, a₃, b₃, b₂, b₁)`.
    pub fn entry_vector(&self) -> [Rational; 6] {
        [
            self.a[0].clone(),
            self.a[1].clone(),
            self.a[2].clone(),
            self.b[2].clone(),
            self.b[1].clone(),
            self.b[0].clone(),
        ]
    }
}

pub fn monomial_exponents(c: &Characteristic, n: [i64; 3]) -> Result<MonomialExponents> {
    if c.genus() != 3 {
        return Err(Error::InvalidInput("needs a genus-3 characteristic".into()));
    }
    let v: Vec<Rational> = (0..3).map(|i| int(n[i]) + rat(c.eps()[i] as i64, 2)).collect();
    let half = rat(1, 2);
    Ok(MonomialExponents {
        a: [&half * &v[0] * &v[0], &half * &v[1] * &v[1], &half * &v[2] * &v[2]],
        b: [&v[1] * &v[2], &v[0] * &v[2], &v[0] * &v[1]],
    })
}

/// Exponents `(α, β)` over `(T, S)` of the term with index `N`: solves `Eᵀ·(α, β) = c`.
pub fn term_exponents(cone: &Cone, c: &Characteristic, n: [i64; 3]) -> Result<(Vec<Rational>, Vec<Rational>)> {
    let full = monomial_exponents(c, n)?.entry_vector();
    let cols = cone.columns();
    let e = cone.exponent_matrix();
    let et_inv = e.transpose().inverse().ok_or(Error::SingularMatrix)?;
    let rhs: Vec<Rational> = cols.iter().map(|&k| full[k].clone()).collect();
    let x = et_inv.mul_vec(&rhs);
    let k = cone.dimension;
    Ok((x[..k].to_vec(), x[k..].to_vec()))
}

/// Exponent of each unbounded variable `T_i` in the term indexed by `N`.
pub fn cone_valuation(cone: &Cone, c: &Characteristic, n: [i64; 3]) -> Result<Vec<Rational>> {
    Ok(term_exponents(cone, c, n)?.0)
}

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalValuation {
    /// Componentwise minimum of the T-exponents over the box.
    pub min: Vec<Rational>,
    /// Indices `N` (first `rank` coordinates; the rest are 0) whose T-exponents equal `min`.
    pub argmin: Vec<[i64; 3]>,
}

impl MinimalValuation {
    /// The componentwise minimum is itself attained, i.e. there is a unique lowest monomial.
    pub fn is_attained(&self) -> bool {
        !self.argmin.is_empty()
    }
}

/// Brute-force minimum of [`cone_valuation`] over `‖N‖_∞ ≤ bound`.
///
/// Only the first `rank` coordinates of `N` influence the T-exponents, so the others are
/// held at 0.
pub fn minimal_valuations(cone: &Cone, c: &Characteristic, bound: i64) -> Result<MinimalValuation> {
    if bound < 2 {
        return Err(Error::InvalidInput("box must be at least 2".into()));
    }
    let r = cone.rank;
    let range = |i: usize| if i < r { -bound..=bound } else { 0..=0 };
    let mut vals = Vec::new();
    for n0 in range(0) {
        for n1 in range(1) {
            for n2 in range(2) {
                let n = [n0, n1, n2];
                vals.push((n, cone_valuation(cone, c, n)?));
            }
        }
    }
    let k = cone.dimension;
    let min: Vec<Rational> =
        (0..k).map(|i| vals.iter().map(|(_, v)| v[i].clone()).min().expect("nonempty box")).collect();
    let argmin = vals.iter().filter(|(_, v)| *v == min).map(|(n, _)| *n).collect();
    Ok(MinimalValuation { min, argmin })
}

/// Sum over the 36 even characteristics of the minimal T-exponents: the T-monomial of the
/// lowest-order term of the theta-null (when every factor's minimum is attained).
pub fn aggregated_minimum(cone: &Cone, bound: i64) -> Result<(Vec<Rational>, bool)> {
    let mut total = vec![Rational::zero(); cone.dimension];
    let mut all_attained = true;
    for c in even_characteristics(3)? {
        let mv = minimal_valuations(cone, &c, bound)?;
        all_attained &= mv.is_attained();
        for (t, m) in total.iter_mut().zip(&mv.min) {
            *t += m;
        }
    }
    Ok((total, all_attained))
}

/// Whether `a` divides `b` as T-monomials (componentwise ≤).
pub fn divides(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The expected exponent 2 in every unbounded variable.
pub fn all_twos(v: &[Rational]) -> bool {
    v.iter().all(|x| *x == int(2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(s: &str) -> Characteristic {
        Characteristic::parse(s).unwrap()
    }

    #[test]
    fn catalog_shape() {
        let cat = cone_catalog();
        assert_eq!(cat.len(), 8);
        for c in &cat {
            assert_eq!(c.dimension, c.unbounded.len());
            assert_eq!(c.ell(), c.bounded.len(), "{}", c.name);
            assert_eq!(c.generic_rank(), c.rank, "{}", c.name);
            assert!(c.exponent_matrix().inverse().is_some(), "{}", c.name);
        }
        let k3 = cone_by_name(ConeName::K3);
        assert_eq!((k3.rank, k3.dimension, k3.ell()), (2, 3, 0));
    }

    #[test]
    fn sigma111_coordinates() {
        let c = cone_by_name(ConeName::Sigma111);
        let i10 = Complex64::new(0.0, 10.0);
        let tau = SiegelPoint::diagonal(&[i10, i10, i10]).unwrap();
        let bc = boundary_coords(&c, &tau).unwrap();
        let expected = (-20.0 * PI).exp();
        for t in &bc.t {
            assert!((t - expected).norm() < 1e-40);
        }
        for s in &bc.s {
            assert!((s - 1.0).norm() < 1e-15);
        }
    }

    #[test]
    fn k3p1_t4_at_half() {
        let c = cone_by_name(ConeName::K3Plus1);
        let h = Complex64::new(0.5, 0.0);
        let i2 = Complex64::new(0.0, 2.0);
        let z = Complex64::zero();
        let tau = SiegelPoint::from_rows(&[&[i2, h, z], &[h, i2, z], &[z, z, i2]]).unwrap();
        let bc = boundary_coords(&c, &tau).unwrap();
        assert!((bc.t[3] + 1.0).norm() < 1e-14);
    }

    #[test]
    fn monomial_exponent_examples() {
        let m = monomial_exponents(&ch("000;000"), [0, 0, 0]).unwrap();
        assert!(m.a.iter().chain(&m.b).all(|x| x.is_zero()));
        let m = monomial_exponents(&ch("110;000"), [0, 0, 0]).unwrap();
        assert_eq!(m.a, [rat(1, 8), rat(1, 8), int(0)]);
        assert_eq!(m.b, [int(0), int(0), rat(1, 4)]);
        let m = monomial_exponents(&ch("111;000"), [0, 0, 0]).unwrap();
        assert_eq!(m.a, [rat(1, 8), rat(1, 8), rat(1, 8)]);
        assert_eq!(m.b, [rat(1, 4), rat(1, 4), rat(1, 4)]);
    }

    #[test]
    fn sigma111_minimizers() {
        let c = cone_by_name(ConeName::Sigma111);
        let mv = minimal_valuations(&c, &ch("110;000"), 3).unwrap();
        assert_eq!(mv.min, vec![rat(1, 8), rat(1, 8), int(0)]);
        assert_eq!(mv.argmin.len(), 4);
    }

    #[test]
    fn sigma1_constant_term() {
        let c = cone_by_name(ConeName::Sigma1);
        let mv = minimal_valuations(&c, &ch("000;100"), 3).unwrap();
        assert_eq!(mv.min, vec![int(0)]);
    }
}

#[cfg(test)]
mod aggregate_tests {
    use super::*;

    #[test]
    fn rank3_lowest_terms_are_t_squared() {
        for name in ConeName::RANK3 {
            let (total, attained) = aggregated_minimum(&cone_by_name(name), 3).unwrap();
            assert!(attained, "{name}");
            assert!(all_twos(&total), "{name}: {total:?}");
        }
    }

    #[test]
    fn fourth_unbounded_exponent_splits_by_parity() {
        for (name, odd) in [
            (ConeName::K3Plus1, (|e: &[u8]| e[0] != e[1]) as fn(&[u8]) -> bool),
            (ConeName::C4, |e: &[u8]| (e[0] + e[1] + e[2]) % 2 == 1),
        ] {
            let c = cone_by_name(name);
            for ch in even_characteristics(3).unwrap() {
                let mv = minimal_valuations(&c, &ch, 2).unwrap();
                let want = if odd(ch.eps()) { rat(1, 8) } else { int(0) };
                assert_eq!(mv.min[3], want, "{name} {ch}");
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        let tau = SiegelPoint::from_rows(&[
            &[Complex64::new(0.1, 3.0), Complex64::new(0.2, 0.5), Complex64::new(-0.3, 0.4)],
            &[Complex64::new(0.2, 0.5), Complex64::new(0.05, 2.5), Complex64::new(0.1, -0.2)],
            &[Complex64::new(-0.3, 0.4), Complex64::new(0.1, -0.2), Complex64::new(0.0, 2.0)],
        ])
        .unwrap();
        for name in ConeName::RANK3 {
            let c = cone_by_name(name);
            let tv = tau_vector(&tau);
            let w: Vec<Complex64> = c
                .unbounded
                .iter()
                .chain(&c.bounded)
                .map(|e| e.iter().zip(&tv).map(|(&k, &x)| x * k as f64).sum())
                .collect();
            let back = point_from_log_coords(&c, &w).unwrap();
            assert!((back.matrix() - tau.matrix()).norm() < 1e-13, "{name}");
        }
    }
}
