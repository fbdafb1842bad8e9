//! Lowest-order terms of the theta-null near the boundary, Fourier–Jacobi truncations of
//! single theta constants, and a numeric checker that ties the two together.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::cones::{cone_by_name, point_from_log_coords, ConeName};
use crate::siegel::SiegelPoint;
use crate::theta::{log_theta_null, theta, Characteristic};
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Below this magnitude a closed-form coefficient counts as vanishing.
pub const VANISHING_TOL: f64 = 1e-12;

/// Default imaginary parts of `t` sampled along a ray.
pub const RAY_HEIGHTS: [f64; 3] = [4.0, 6.0, 8.0];

/// The lowest-order monomial of θ_null for a rank-3 cone: `T_i²` for every unbounded variable.
pub fn lot_monomial(cone: ConeName) -> Result<Vec<u32>> {
    let c = cone_by_name(cone);
    if c.rank != 3 {
        return Err(Error::InvalidInput(format!("{cone} is not a rank-3 cone")));
    }
    Ok(vec![2; c.dimension])
}

fn nonzero(x: Complex64) -> Result<Complex64> {
    if x == Complex64::new(0.0, 0.0) {
        Err(Error::BoundedVariableZero)
    } else {
        Ok(x)
    }
}

/// Closed-form coefficient of the lowest-order term, without the overall constant
/// (see [`lot_normalization`]).
///
/// Inputs per cone:
/// * `sigma1+1+1`: `(h12, h13, h23)` with `h_ij = q_ij^{1/2}`;
/// * `K3+1`: `(S1, S2)`;
/// * `C4`: `(S̃1, S̃2)` with `S̃_j = S_j^{1/2}`;
/// * `K4-1`: `(S1)`;
/// * `K4`: none.
pub fn lot_coefficient(cone: ConeName, bounded: &[Complex64]) -> Result<Complex64> {
    let ell = cone_by_name(cone).ell();
    if bounded.len() != ell {
        return Err(Error::InvalidInput(format!("{cone} takes {ell} bounded values, got {}", bounded.len())));
    }
    let one = Complex64::new(1.0, 0.0);
    Ok(match cone {
        ConeName::Sigma111 => {
            let (a, b, c) = (nonzero(bounded[0])?, nonzero(bounded[1])?, nonzero(bounded[2])?);
            let sq = |h: Complex64| (h * h - one).powi(2) * h.powi(-4);
            let p = a * b * c;
            sq(a) * sq(b) * sq(c) * (p - a - b + c) * (p - a + b - c) * (p + a - b - c) * (p + a + b + c)
        }
        ConeName::K3Plus1 => {
            let (s1, s2) = (nonzero(bounded[0])?, nonzero(bounded[1])?);
            (s1 - one).powi(2) * (s2 - one).powi(2) * (s1 * s2 - one).powi(2) / (s1 * s1 * s2 * s2)
        }
        ConeName::C4 => {
            let (a, b) = (bounded[0], bounded[1]);
            (-a - b + one) * (-a + b - one) * (a - b - one) * (a + b + one)
        }
        ConeName::K4Minus1 => (bounded[0] - one).powi(2),
        ConeName::K4 => one,
        other => return Err(Error::InvalidInput(format!("{other} is not a rank-3 cone"))),
    })
}

/// The constant in front of every rank-3 lowest-order coefficient.
pub fn lot_normalization() -> f64 {
    -(2f64.powi(28))
}

/// The constant in front of [`lot_secondary_q12`].
pub fn secondary_normalization() -> f64 {
    2f64.powi(30)
}

/// Coefficient of `T1²T2²T3³` in θ_null on the slice `q12 = 1` of the standard cone,
/// without its overall constant.
pub fn lot_secondary_q12(q13: Complex64, q23: Complex64) -> Result<Complex64> {
    let (a, b) = (nonzero(q13)?, nonzero(q23)?);
    let one = Complex64::new(1.0, 0.0);
    Ok((a - one).powi(6) * (b - one).powi(6) * a.powi(-3) * b.powi(-3))
}

/// Blocks of a period matrix split as genus `1 + (g−1)`: `τ = [[t, zᵀ], [z, Z]]`.
#[derive(Clone, Debug)]
pub struct RankOneBlocks {
    pub t: Complex64,
    pub z: Vec<Complex64>,
    pub zz: SiegelPoint,
}

impl RankOneBlocks {
    pub fn from_point(tau: &SiegelPoint) -> Result<Self> {
        let g = tau.genus();
        if g < 2 {
            return Err(Error::InvalidInput("needs genus at least 2".into()));
        }
        Ok(RankOneBlocks {
            t: tau.entry(0, 0),
            z: (1..g).map(|j| tau.entry(0, j)).collect(),
            zz: tau.sub_block(1, g - 1),
        })
    }
}

/// Half-integers `v₁ = n + ε₁/2` contributing at truncation level `order`.
fn rank1_shells(eps1: u8, order: usize) -> Vec<f64> {
    let mut out = Vec::new();
    for k in 0..=order {
        let v = k as f64 + eps1 as f64 / 2.0;
        out.push(v);
        if v != 0.0 {
            out.push(-v);
        }
    }
    out
}

/// Exponent of `q11` of the first term left out at truncation level `order`.
pub fn rank1_next_exponent(eps1: u8, order: usize) -> f64 {
    let v = order as f64 + 1.0 + eps1 as f64 / 2.0;
    v * v / 2.0
}

/// Partial Fourier–Jacobi sum of `θ[ε;δ](τ, (x, b))` in `q11 = e^{2πit}`, keeping the
/// terms `q11^{v²/2} w^{v} e^{πivδ₁} θ[ε';δ'](Z, b + v z)` with `|v| ≤ order + ε₁/2`,
/// where `w = e^{2πix}`.
pub fn fj_truncate_rank1(
    c: &Characteristic,
    blocks: &RankOneBlocks,
    x: Complex64,
    b: &[Complex64],
    order: usize,
    tol: f64,
) -> Result<Complex64> {
    let g = c.genus();
    if g < 2 || blocks.z.len() != g - 1 || b.len() != g - 1 || blocks.zz.genus() != g - 1 {
        return Err(Error::InvalidInput("blocks do not match the characteristic".into()));
    }
    if order > 2 {
        return Err(Error::InvalidInput("truncation order must be 0, 1 or 2".into()));
    }
    let (c1, rest) = c.split(1)?;
    let (e1, d1) = (c1.eps()[0], c1.delta()[0] as f64);
    let mut acc = Complex64::new(0.0, 0.0);
    for v in rank1_shells(e1, order) {
        let prefactor =
            (I * PI * v * v * blocks.t + I * 2.0 * PI * v * x + I * PI * v * d1).exp();
        let arg: Vec<Complex64> = b.iter().zip(&blocks.z).map(|(bi, zi)| bi + zi * v).collect();
        acc += prefactor * theta(&rest, &blocks.zz, &arg, tol)?.value;
    }
    Ok(acc)
}

/// `Σ q̃11^{n1²} q̃22^{n2²} q̃12^{n1n2} i^{n1δ1+n2δ2} θ[ε3;δ3](τ33, (n1τ13+n2τ23)/2)` over odd
/// `|n1|, |n2| ≤ max_n`, with `q̃ii = q_ii^{1/8}` and `q̃12 = q12^{1/4}`.
pub fn fj_rank2_11_series(c: &Characteristic, tau: &SiegelPoint, max_n: i64, tol: f64) -> Result<Complex64> {
    if c.genus() != 3 || tau.genus() != 3 {
        return Err(Error::InvalidInput("needs genus 3".into()));
    }
    if c.eps()[0] != 1 || c.eps()[1] != 1 {
        return Err(Error::InvalidInput("needs ε1 = ε2 = 1".into()));
    }
    if max_n < 1 || max_n % 2 == 0 {
        return Err(Error::InvalidInput("max_n must be a positive odd integer".into()));
    }
    let (_, c3) = c.split(2)?;
    let (d1, d2) = (c.delta()[0] as i64, c.delta()[1] as i64);
    let tau33 = tau.sub_block(2, 1);
    let e = |x: Complex64, frac: f64| (I * 2.0 * PI * x * frac).exp();
    let (q11, q22, q12) = (e(tau.entry(0, 0), 0.125), e(tau.entry(1, 1), 0.125), e(tau.entry(0, 1), 0.25));
    let odd: Vec<i64> = (-max_n..=max_n).filter(|n| n % 2 != 0).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for &n1 in &odd {
        for &n2 in &odd {
            let phase = I.powi(((n1 * d1 + n2 * d2).rem_euclid(4)) as i32);
            let w = (tau.entry(0, 2) * n1 as f64 + tau.entry(1, 2) * n2 as f64) / 2.0;
            let th = theta(&c3, &tau33, &[w], tol)?.value;
            acc += q11.powi((n1 * n1) as i32) * q22.powi((n2 * n2) as i32) * q12.powi((n1 * n2) as i32) * phase * th;
        }
    }
    Ok(acc)
}

/// A ray `T_i = ξ_i e^{2πi f_i t}` with fixed bounded values.
#[derive(Clone, Debug, PartialEq)]
pub struct RayAnchor {
    /// Bounded values in the convention of [`lot_coefficient`].
    pub bounded: Vec<Complex64>,
    pub growth: Vec<i64>,
    pub xi: Vec<Complex64>,
}

impl RayAnchor {
    /// Equal growth `f_i = 1` and `ξ_i = 1`.
    pub fn standard(cone: ConeName, bounded: Vec<Complex64>) -> Self {
        let k = cone_by_name(cone).dimension;
        RayAnchor { bounded, growth: vec![1; k], xi: vec![Complex64::new(1.0, 0.0); k] }
    }
}

/// Which power of `S_j` the user-facing bounded value is (2 means a square root is given).
fn bounded_root(cone: ConeName) -> f64 {
    match cone {
        ConeName::Sigma111 | ConeName::C4 => 2.0,
        _ => 1.0,
    }
}

/// Period matrix on the ray at parameter `t`.
pub fn ray_point(cone: ConeName, anchor: &RayAnchor, t: Complex64) -> Result<SiegelPoint> {
    let c = cone_by_name(cone);
    if anchor.growth.len() != c.dimension || anchor.xi.len() != c.dimension || anchor.bounded.len() != c.ell() {
        return Err(Error::InvalidInput("anchor does not match the cone".into()));
    }
    let root = bounded_root(cone);
    let mut w: Vec<Complex64> = anchor
        .growth
        .iter()
        .zip(&anchor.xi)
        .map(|(&f, &xi)| Ok(t * f as f64 + nonzero(xi)?.ln() / (I * 2.0 * PI)))
        .collect::<Result<_>>()?;
    for &b in &anchor.bounded {
        w.push(nonzero(b)?.ln() * root / (I * 2.0 * PI));
    }
    point_from_log_coords(&c, &w)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LotReport {
    pub cone: ConeName,
    pub heights: Vec<f64>,
    /// Normalization × closed-form coefficient.
    pub predicted: Complex64,
    /// θ_null / (monomial × predicted) at each height.
    pub ratios: Vec<Complex64>,
    pub deviations: Vec<f64>,
}

impl LotReport {
    /// Each deviation is no larger than the previous one, or already at the `1e−12` floor.
    pub fn monotone(&self) -> bool {
        self.deviations.windows(2).all(|w| w[1] <= w[0] || w[1] < 1e-12)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.monotone() && self.deviations.last().is_some_and(|&d| d < tol)
    }
}

fn ratio_along_ray(
    point: impl Fn(Complex64) -> Result<SiegelPoint>,
    log_monomial: impl Fn(Complex64) -> Complex64,
    predicted: Complex64,
    heights: &[f64],
) -> Result<(Vec<Complex64>, Vec<f64>)> {
    let mut ratios = Vec::new();
    let mut devs = Vec::new();
    for &h in heights {
        let t = Complex64::new(0.0, h);
        let tau = point(t)?;
        let log_ratio = log_theta_null(&tau, 1e-14)? - log_monomial(t) - predicted.ln();
        let r = log_ratio.exp();
        ratios.push(r);
        devs.push((r - 1.0).norm());
    }
    Ok((ratios, devs))
}

/// Compares θ_null along a ray with the predicted lowest-order term.
pub fn lot_numeric_verify(cone: ConeName, anchor: &RayAnchor, heights: &[f64]) -> Result<LotReport> {
    let shape = lot_coefficient(cone, &anchor.bounded)?;
    if shape.norm() < VANISHING_TOL {
        return Err(Error::LeadingTermVanishes);
    }
    let predicted = shape * lot_normalization();
    let total_growth: i64 = anchor.growth.iter().sum();
    let log_xi: Complex64 = anchor.xi.iter().map(|x| x.ln()).sum();
    let (ratios, deviations) = ratio_along_ray(
        |t| ray_point(cone, anchor, t),
        |t| 2.0 * (I * 2.0 * PI * t * total_growth as f64 + log_xi),
        predicted,
        heights,
    )?;
    Ok(LotReport { cone, heights: heights.to_vec(), predicted, ratios, deviations })
}

/// The same comparison on the slice `q12 = 1` of the standard cone, against
/// `T1²T2²T3³ · 2³⁰ · lot_secondary_q12(q13, q23)` with `T_i = q_ii = e^{2πit}`.
pub fn lot_secondary_verify(q13: Complex64, q23: Complex64, heights: &[f64]) -> Result<LotReport> {
    let shape = lot_secondary_q12(q13, q23)?;
    if shape.norm() < VANISHING_TOL {
        return Err(Error::LeadingTermVanishes);
    }
    let predicted = shape * secondary_normalization();
    let one = Complex64::new(1.0, 0.0);
    let anchor = RayAnchor::standard(ConeName::Sigma111, vec![one, q13.sqrt(), q23.sqrt()]);
    let (ratios, deviations) = ratio_along_ray(
        |t| ray_point(ConeName::Sigma111, &anchor, t),
        |t| I * 2.0 * PI * t * 7.0,
        predicted,
        heights,
    )?;
    Ok(LotReport { cone: ConeName::Sigma111, heights: heights.to_vec(), predicted, ratios, deviations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::{cone_by_name, ENTRIES};
    use crate::exact::rational::to_f64;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unit(frac: f64) -> Complex64 {
        (I * 2.0 * PI * frac).exp()
    }

    #[test]
    fn documented_zeros_and_values() {
        assert!(lot_coefficient(ConeName::K4Minus1, &[c(1.0, 0.0)]).unwrap().norm() < 1e-15);
        assert!(lot_coefficient(ConeName::Sigma111, &[c(1.0, 0.0), unit(0.13), unit(0.37)]).unwrap().norm() < 1e-15);
        let z = lot_coefficient(ConeName::C4, &[unit(1.0 / 6.0), unit(-1.0 / 6.0)]).unwrap();
        assert!(z.norm() < 1e-14);
        assert_eq!(lot_coefficient(ConeName::K4, &[]).unwrap(), c(1.0, 0.0));
        let v = lot_secondary_q12(c(-1.0, 0.0), c(-1.0, 0.0)).unwrap();
        assert!((v - 4096.0).norm() < 1e-9);
        assert!(lot_secondary_q12(c(1.0, 0.0), c(2.0, 0.0)).unwrap().norm() == 0.0);
        assert!(matches!(
            lot_coefficient(ConeName::K3Plus1, &[c(0.0, 0.0), c(1.0, 0.0)]),
            Err(Error::BoundedVariableZero)
        ));
        assert!(lot_coefficient(ConeName::K3, &[]).is_err());
    }

    #[test]
    fn standard_coefficient_is_symmetric() {
        let h = [unit(0.11), unit(0.29), c(0.7, -0.4)];
        let base = lot_coefficient(ConeName::Sigma111, &h).unwrap();
        for p in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let v = lot_coefficient(ConeName::Sigma111, &[h[p[0]], h[p[1]], h[p[2]]]).unwrap();
            assert!((v - base).norm() < 1e-12 * base.norm());
        }
    }

    /// Independent oracle for the closed forms: rewrite `q11²q22²q33²·L(h)` in the cone's
    /// variables with every `T_k = x²`, and read off the lowest Laurent coefficient in `x`
    /// by a discrete Fourier transform on the unit circle.
    fn rewritten_lowest_coefficient(cone: ConeName, s: &[f64]) -> (Complex64, f64) {
        let cn = cone_by_name(cone);
        let inv = cn.exponent_matrix().inverse().unwrap();
        let k = cn.dimension;
        let m = 512;
        let mut coeffs = vec![Complex64::new(0.0, 0.0); m];
        for step in 0..m {
            let phi = step as f64 / m as f64;
            let mut w: Vec<f64> = vec![2.0 * phi; k];
            w.extend_from_slice(s);
            // τ-entries times 2 so that h = e^{πi τ}, q = e^{2πi τ}.
            let tau: Vec<f64> =
                (0..6).map(|r| (0..w.len()).map(|j| to_f64(&inv[(r, j)]) * w[j]).sum()).collect();
            let h = |idx: usize| (I * PI * tau[idx]).exp();
            let idx = |p: (usize, usize)| ENTRIES.iter().position(|&e| e == p).unwrap();
            let diag: Complex64 = (0..3).map(|i| h(idx((i, i))).powi(4)).product();
            let l = lot_coefficient(ConeName::Sigma111, &[h(idx((0, 1))), h(idx((0, 2))), h(idx((1, 2)))]).unwrap();
            let monomial = (I * 2.0 * PI * 2.0 * phi * 2.0 * k as f64).exp();
            let g = diag * l / monomial;
            for (j, cj) in coeffs.iter_mut().enumerate() {
                *cj += g * (-(I * 2.0 * PI * phi * j as f64)).exp() / m as f64;
            }
        }
        // Negative powers alias to the upper half of the spectrum.
        let negative = coeffs[m / 2..].iter().map(|x| x.norm()).fold(0.0, f64::max);
        (coeffs[0], negative)
    }

    #[test]
    fn closed_forms_match_rewritten_standard_coefficient() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for cone in ConeName::RANK3 {
            let ell = cone_by_name(cone).ell();
            for _ in 0..50 {
                let s: Vec<f64> = (0..ell).map(|_| rng.gen_range(0.0..1.0)).collect();
                let (lowest, negative) = rewritten_lowest_coefficient(cone, &s);
                let inputs: Vec<Complex64> =
                    s.iter().map(|&sj| (I * 2.0 * PI * sj / bounded_root(cone)).exp()).collect();
                let closed = lot_coefficient(cone, &inputs).unwrap();
                let scale = 1.0 + closed.norm();
                assert!(negative < 1e-9 * scale, "{cone}: negative powers {negative}");
                assert!((lowest - closed).norm() < 1e-10 * scale, "{cone}: {lowest} vs {closed}");
            }
        }
    }

    #[test]
    fn rank1_truncation_leading_terms() {
        let tau = SiegelPoint::from_rows(&[
            &[c(0.1, 1.5), c(0.2, 0.3), c(0.0, -0.1)],
            &[c(0.2, 0.3), c(0.3, 1.2), c(0.1, 0.2)],
            &[c(0.0, -0.1), c(0.1, 0.2), c(-0.2, 1.1)],
        ])
        .unwrap();
        let blocks = RankOneBlocks::from_point(&tau).unwrap();
        let b = [c(0.05, 0.0), c(-0.1, 0.02)];
        let x = c(0.07, 0.01);
        let ch = Characteristic::parse("010;110").unwrap();
        let rest = Characteristic::parse("10;10").unwrap();
        let order0 = fj_truncate_rank1(&ch, &blocks, x, &b, 0, 1e-14).unwrap();
        let direct = theta(&rest, &blocks.zz, &b, 1e-14).unwrap().value;
        assert!((order0 - direct).norm() < 1e-13);

        let ch = Characteristic::parse("110;110").unwrap();
        let order0 = fj_truncate_rank1(&ch, &blocks, x, &b, 0, 1e-14).unwrap();
        let q18 = (I * 2.0 * PI * blocks.t / 8.0).exp();
        let w12 = (I * PI * x).exp();
        let shift = |s: f64| -> Vec<Complex64> { b.iter().zip(&blocks.z).map(|(bi, zi)| bi + zi * s).collect() };
        let expected = q18
            * (I * w12 * theta(&rest, &blocks.zz, &shift(0.5), 1e-14).unwrap().value
                + (-I) / w12 * theta(&rest, &blocks.zz, &shift(-0.5), 1e-14).unwrap().value);
        assert!((order0 - expected).norm() < 1e-13);
    }

    #[test]
    fn rank1_truncation_error_follows_next_exponent() {
        let rest = [[c(0.3, 1.2), c(0.1, 0.2)], [c(0.1, 0.2), c(-0.2, 1.1)]];
        for (ch, order) in [("000;100", 0), ("011;100", 1), ("110;110", 0), ("101;010", 1)] {
            let ch = Characteristic::parse(ch).unwrap();
            let mut pts = Vec::new();
            for y in [1.0, 1.5, 2.0] {
                let t = c(0.1, y);
                let tau = SiegelPoint::from_rows(&[
                    &[t, c(0.2, 0.3), c(0.0, -0.1)],
                    &[c(0.2, 0.3), rest[0][0], rest[0][1]],
                    &[c(0.0, -0.1), rest[1][0], rest[1][1]],
                ])
                .unwrap();
                let blocks = RankOneBlocks::from_point(&tau).unwrap();
                let zero = [c(0.0, 0.0); 2];
                let approx = fj_truncate_rank1(&ch, &blocks, c(0.0, 0.0), &zero, order, 1e-15).unwrap();
                let direct = theta(&ch, &tau, &[c(0.0, 0.0); 3], 1e-15).unwrap().value;
                pts.push((-2.0 * PI * y, (approx - direct).norm().ln()));
            }
            let slope = (pts[2].1 - pts[0].1) / (pts[2].0 - pts[0].0);
            let expected = rank1_next_exponent(ch.eps()[0], order);
            assert!((slope - expected).abs() < 0.1 * expected, "{ch}: slope {slope} vs {expected}");
        }
    }

    #[test]
    fn rank2_series_matches_direct_theta() {
        let tau = SiegelPoint::from_rows(&[
            &[c(0.1, 6.0), c(0.3, 0.5), c(0.2, 0.4)],
            &[c(0.3, 0.5), c(-0.2, 6.0), c(0.1, -0.3)],
            &[c(0.2, 0.4), c(0.1, -0.3), c(0.05, 1.3)],
        ])
        .unwrap();
        for s in ["110;000", "111;011", "110;111", "111;110"] {
            let ch = Characteristic::parse(s).unwrap();
            let series = fj_rank2_11_series(&ch, &tau, 7, 1e-15).unwrap();
            let direct = theta(&ch, &tau, &[c(0.0, 0.0); 3], 1e-15).unwrap().value;
            assert!((series - direct).norm() < 1e-8, "{s}");
        }
        assert!(fj_rank2_11_series(&Characteristic::parse("010;000").unwrap(), &tau, 3, 1e-12).is_err());
    }

    #[test]
    fn k4_ray_converges() {
        let rep = lot_numeric_verify(ConeName::K4, &RayAnchor::standard(ConeName::K4, vec![]), &RAY_HEIGHTS).unwrap();
        assert!(rep.passes(1e-3), "{:?}", rep.deviations);
    }

    #[test]
    fn vanishing_coefficient_is_reported() {
        let anchor = RayAnchor::standard(ConeName::Sigma111, vec![c(1.0, 0.0), unit(0.2), unit(0.3)]);
        assert!(matches!(lot_numeric_verify(ConeName::Sigma111, &anchor, &RAY_HEIGHTS), Err(Error::LeadingTermVanishes)));
    }
}

#[cfg(test)]
mod ray_tests {
    use super::*;

    fn unit(frac: f64) -> Complex64 {
        (I * 2.0 * PI * frac).exp()
    }

    #[test]
    fn rays_with_root_of_unity_bounded_values() {
        let cases: Vec<(ConeName, Vec<Complex64>)> = vec![
            (ConeName::Sigma111, vec![unit(1.0 / 5.0), unit(2.0 / 7.0), unit(3.0 / 8.0)]),
            (ConeName::K3Plus1, vec![unit(1.0 / 5.0), unit(1.0 / 3.0)]),
            (ConeName::C4, vec![unit(1.0 / 7.0), unit(2.0 / 5.0)]),
            (ConeName::K4Minus1, vec![unit(3.0 / 7.0)]),
        ];
        for (cone, b) in cases {
            let rep = lot_numeric_verify(cone, &RayAnchor::standard(cone, b), &RAY_HEIGHTS).unwrap();
            assert!(rep.passes(1e-3), "{cone}: {:?}", rep.deviations);
        }
        let rep = lot_secondary_verify(unit(1.0 / 5.0), unit(3.0 / 7.0), &RAY_HEIGHTS).unwrap();
        assert!(rep.passes(1e-3), "{:?}", rep.deviations);
    }
}
