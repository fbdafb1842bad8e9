//! Theta functions with characteristics for genus 1–3.
//!
//! Convention: `θ[ε;δ](τ, z) = Σ_N exp(πi vᵀτv + 2πi vᵀ(z + δ/2))`, `v = N + ε/2`.
//! Every value carries a certified bound on the truncated tail.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::siegel::SiegelPoint;
use crate::{Error, Result};

pub const DEFAULT_TOL: f64 = 1e-10;
/// Largest truncation radius tried before giving up.
pub const MAX_RADIUS: usize = 64;
const RADII: [usize; 5] = [4, 8, 16, 32, 64];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic {
    eps: Vec<u8>,
    delta: Vec<u8>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

impl Characteristic {
    pub fn new(eps: Vec<u8>, delta: Vec<u8>) -> Result<Self> {
        if eps.len() != delta.len() || eps.is_empty() {
            return Err(Error::InvalidInput("ε and δ must have the same positive length".into()));
        }
        if eps.iter().chain(&delta).any(|&b| b > 1) {
            return Err(Error::InvalidInput("characteristic entries must be 0 or 1".into()));
        }
        Ok(Self { eps, delta })
    }

    /// Parses `"110;110"` or `"1,1,0;1,1,0"` or the genus-one `"0,0"` shorthand.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed characteristic '{s}'"));
        let bits = |t: &str| -> Result<Vec<u8>> {
            t.chars()
                .filter(|c| !matches!(c, ',' | ' ' | '[' | ']'))
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(bad()),
                })
                .collect()
        };
        let (e, d) = match s.split_once(';') {
            Some((e, d)) => (bits(e)?, bits(d)?),
            None => {
                let all = bits(s)?;
                if all.len() % 2 == 1 {
                    return Err(bad());
                }
                let h = all.len() / 2;
                (all[..h].to_vec(), all[h..].to_vec())
            }
        };
        Self::new(e, d).map_err(|_| bad())
    }

    pub fn genus(&self) -> usize {
        self.eps.len()
    }

    pub fn eps(&self) -> &[u8] {
        &self.eps
    }

    pub fn delta(&self) -> &[u8] {
        &self.delta
    }

    pub fn parity(&self) -> Parity {
        let dot: u32 = self.eps.iter().zip(&self.delta).map(|(&a, &b)| (a * b) as u32).sum();
        if dot % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_even(&self) -> bool {
        self.parity() == Parity::Even
    }

    /// Splits into the characteristics of the first `g1` and the remaining coordinates.
    pub fn split(&self, g1: usize) -> Result<(Characteristic, Characteristic)> {
        if g1 == 0 || g1 >= self.genus() {
            return Err(Error::InvalidInput("split point out of range".into()));
        }
        Ok((
            Characteristic { eps: self.eps[..g1].to_vec(), delta: self.delta[..g1].to_vec() },
            Characteristic { eps: self.eps[g1..].to_vec(), delta: self.delta[g1..].to_vec() },
        ))
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = |v: &[u8]| v.iter().map(|b| b.to_string()).collect::<String>();
        write!(f, "[{};{}]", s(&self.eps), s(&self.delta))
    }
}

pub fn parity(c: &Characteristic) -> Parity {
    c.parity()
}

fn bit_vectors(g: usize) -> Vec<Vec<u8>> {
    (0..1u32 << g).map(|k| (0..g).map(|i| ((k >> (g - 1 - i)) & 1) as u8).collect()).collect()
}

/// All characteristics of genus `g` in lexicographic order of (ε, δ).
pub fn all_characteristics(g: usize) -> Result<Vec<Characteristic>> {
    if !(1..=3).contains(&g) {
        return Err(Error::InvalidInput(format!("genus {g} outside 1..=3")));
    }
    let vs = bit_vectors(g);
    Ok(vs
        .iter()
        .flat_map(|e| vs.iter().map(move |d| Characteristic { eps: e.clone(), delta: d.clone() }))
        .collect())
}

/// The `2^{g−1}(2^g + 1)` even characteristics, lexicographically ordered.
pub fn even_characteristics(g: usize) -> Result<Vec<Characteristic>> {
    Ok(all_characteristics(g)?.into_iter().filter(Characteristic::is_even).collect())
}

pub fn odd_characteristics(g: usize) -> Result<Vec<Characteristic>> {
    Ok(all_characteristics(g)?.into_iter().filter(|c| !c.is_even()).collect())
}

/// A truncated theta value with `|true − value| ≤ tail_bound`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ThetaValue {
    pub value: Complex64,
    pub tail_bound: f64,
    pub radius_used: usize,
}

/// Bound on the sum of |terms| over all shells `‖N‖_∞ > r`.
///
/// Uses `|term| ≤ exp(−πλ(|v| − s)² + π|y|²/λ)` with `s = |y|/λ` and `|v| ≥ m − 1/2`
/// on the shell `‖N‖_∞ = m`, which has at most `(2m+1)^g − (2m−1)^g` points.
pub fn tail_bound(g: usize, lambda: f64, y_norm: f64, r: usize) -> f64 {
    if lambda <= 0.0 {
        return f64::INFINITY;
    }
    let s = y_norm / lambda;
    let c = PI * y_norm * y_norm / lambda;
    if r as f64 + 0.5 < s {
        return f64::INFINITY;
    }
    let log_shell = |m: f64| {
        let count = (2.0 * m + 1.0).powi(g as i32) - (2.0 * m - 1.0).powi(g as i32);
        count.ln() - PI * lambda * (m - 0.5 - s).powi(2) + c
    };
    let mut total = 0.0;
    let mut prev = f64::NAN;
    for k in 1..100_000 {
        let m = (r + k) as f64;
        let b = log_shell(m).exp();
        total += b;
        if k > 1 && prev > 0.0 {
            let ratio = b / prev;
            if ratio < 0.5 {
                return total + b * ratio / (1.0 - ratio);
            }
        }
        if b == 0.0 && k > 1 {
            return total;
        }
        prev = b;
    }
    f64::INFINITY
}

struct Prepared {
    g: usize,
    re: Vec<f64>,
    im: Vec<f64>,
    lin_re: Vec<f64>,
    lin_im: Vec<f64>,
    shift: Vec<f64>,
    eps: Vec<i64>,
    delta: Vec<i64>,
}

fn prepare(c: &Characteristic, tau: &SiegelPoint, z: &[Complex64]) -> Prepared {
    let g = tau.genus();
    let m = tau.matrix();
    Prepared {
        g,
        re: (0..g * g).map(|k| m[(k / g, k % g)].re).collect(),
        im: (0..g * g).map(|k| m[(k / g, k % g)].im).collect(),
        lin_re: z.iter().map(|w| w.re).collect(),
        lin_im: z.iter().map(|w| w.im).collect(),
        shift: c.eps.iter().map(|&e| 0.5 * e as f64).collect(),
        eps: c.eps.iter().map(|&e| e as i64).collect(),
        delta: c.delta.iter().map(|&d| d as i64).collect(),
    }
}

/// Compensated (Neumaier) summation, so that large terms which cancel in pairs do not
/// swamp a small total.
#[derive(Default)]
struct Neumaier {
    sum: [f64; 2],
    comp: [f64; 2],
}

impl Neumaier {
    fn add(&mut self, x: Complex64) {
        for (k, xi) in [x.re, x.im].into_iter().enumerate() {
            let t = self.sum[k] + xi;
            self.comp[k] += if self.sum[k].abs() >= xi.abs() { (self.sum[k] - t) + xi } else { (xi - t) + self.sum[k] };
            self.sum[k] = t;
        }
    }

    fn value(&self) -> Complex64 {
        Complex64::new(self.sum[0] + self.comp[0], self.sum[1] + self.comp[1])
    }
}

fn lattice_sum(p: &Prepared, r: usize) -> Complex64 {
    let g = p.g;
    let r = r as i64;
    let mut n = vec![-r; g];
    let mut v = vec![0.0; g];
    let mut acc = Neumaier::default();
    loop {
        for i in 0..g {
            v[i] = n[i] as f64 + p.shift[i];
        }
        let (mut q_re, mut q_im) = (0.0, 0.0);
        for i in 0..g {
            for j in 0..g {
                let w = v[i] * v[j];
                q_re += p.re[i * g + j] * w;
                q_im += p.im[i * g + j] * w;
            }
        }
        let (mut l_re, mut l_im) = (0.0, 0.0);
        for i in 0..g {
            l_re += v[i] * p.lin_re[i];
            l_im += v[i] * p.lin_im[i];
        }
        let log_mag = -PI * q_im - 2.0 * PI * l_im;
        if log_mag > -745.0 {
            let phase = PI * q_re + 2.0 * PI * l_re;
            let term = Complex64::from_polar(log_mag.exp(), phase);
            // The characteristic phase e^{πi v·δ} is a power of i; applying it exactly lets
            // paired terms cancel exactly on decomposable points.
            let quarter: i64 = (0..g).map(|i| (2 * n[i] + p.eps[i]) * p.delta[i]).sum();
            acc.add(match quarter.rem_euclid(4) {
                0 => term,
                1 => Complex64::new(-term.im, term.re),
                2 => -term,
                _ => Complex64::new(term.im, -term.re),
            });
        }
        // Odometer increment; fixed order keeps the result deterministic.
        let mut k = 0;
        loop {
            if k == g {
                return acc.value();
            }
            n[k] += 1;
            if n[k] > r {
                n[k] = -r;
                k += 1;
            } else {
                break;
            }
        }
    }
}

fn check_inputs(c: &Characteristic, tau: &SiegelPoint, z: &[Complex64], tol: f64) -> Result<()> {
    let g = tau.genus();
    if !(1..=3).contains(&g) {
        return Err(Error::InvalidInput(format!("genus {g} outside 1..=3")));
    }
    if c.genus() != g || z.len() != g {
        return Err(Error::InvalidInput("dimension mismatch between τ, z and characteristic".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    Ok(())
}

fn tail_params(tau: &SiegelPoint, z: &[Complex64]) -> (f64, f64) {
    let lambda = tau.min_imag_eigenvalue();
    let y_norm = z.iter().map(|w| w.im * w.im).sum::<f64>().sqrt();
    (lambda, y_norm)
}

/// `θ[ε;δ](τ, z)` truncated at the smallest radius in {4, 8, …, 64} whose certified
/// tail is below `tol`.
pub fn theta(c: &Characteristic, tau: &SiegelPoint, z: &[Complex64], tol: f64) -> Result<ThetaValue> {
    check_inputs(c, tau, z, tol)?;
    let (lambda, y_norm) = tail_params(tau, z);
    let g = tau.genus();
    let mut last = f64::INFINITY;
    for &r in &RADII {
        let tail = tail_bound(g, lambda, y_norm, r);
        last = tail;
        if tail <= tol {
            let value = lattice_sum(&prepare(c, tau, z), r);
            return Ok(ThetaValue { value, tail_bound: tail, radius_used: r });
        }
    }
    Err(Error::PrecisionUnreachable { tail: last, tol, radius: MAX_RADIUS })
}

/// Like [`theta`] at a fixed radius (used to cross-check truncations).
pub fn theta_at_radius(c: &Characteristic, tau: &SiegelPoint, z: &[Complex64], r: usize) -> Result<ThetaValue> {
    check_inputs(c, tau, z, 1.0)?;
    let (lambda, y_norm) = tail_params(tau, z);
    Ok(ThetaValue {
        value: lattice_sum(&prepare(c, tau, z), r),
        tail_bound: tail_bound(tau.genus(), lambda, y_norm, r),
        radius_used: r,
    })
}

/// Theta value whose certified tail is below `rel·|value|` (for values near underflow).
pub fn theta_relative(c: &Characteristic, tau: &SiegelPoint, z: &[Complex64], rel: f64) -> Result<ThetaValue> {
    check_inputs(c, tau, z, rel)?;
    let (lambda, y_norm) = tail_params(tau, z);
    let prep = prepare(c, tau, z);
    let mut last = f64::INFINITY;
    for &r in &RADII {
        let tail = tail_bound(tau.genus(), lambda, y_norm, r);
        last = tail;
        if !tail.is_finite() {
            continue;
        }
        let value = lattice_sum(&prep, r);
        if tail <= rel * value.norm() {
            return Ok(ThetaValue { value, tail_bound: tail, radius_used: r });
        }
    }
    Err(Error::PrecisionUnreachable { tail: last, tol: rel, radius: MAX_RADIUS })
}

pub fn theta_constant(c: &Characteristic, tau: &SiegelPoint, tol: f64) -> Result<ThetaValue> {
    theta(c, tau, &vec![Complex64::new(0.0, 0.0); tau.genus()], tol)
}

/// All even theta constants, in the order of [`even_characteristics`].
pub fn even_theta_constants(tau: &SiegelPoint, tol: f64) -> Result<Vec<(Characteristic, ThetaValue)>> {
    even_characteristics(tau.genus())?
        .into_iter()
        .map(|c| theta_constant(&c, tau, tol).map(|v| (c, v)))
        .collect()
}

/// Error bound for a product: `Π(|aᵢ| + eᵢ) − Π|aᵢ|`.
pub fn product_error(values: &[ThetaValue]) -> f64 {
    let upper: f64 = values.iter().map(|v| v.value.norm() + v.tail_bound).product();
    let center: f64 = values.iter().map(|v| v.value.norm()).product();
    (upper - center).max(0.0)
}

/// Product of the 36 even theta constants of genus 3.
pub fn theta_null(tau: &SiegelPoint, tol: f64) -> Result<ThetaValue> {
    if tau.genus() != 3 {
        return Err(Error::InvalidInput("theta-null is defined here for genus 3".into()));
    }
    let vals: Vec<ThetaValue> = even_theta_constants(tau, tol)?.into_iter().map(|(_, v)| v).collect();
    let value = vals.iter().map(|v| v.value).product();
    let radius_used = vals.iter().map(|v| v.radius_used).max().unwrap_or(0);
    Ok(ThetaValue { value, tail_bound: product_error(&vals), radius_used })
}

/// `Σ log θ[ε;δ](τ)` over even characteristics, each factor with relative accuracy `rel`.
/// Avoids the underflow of the 36-fold product near the boundary.
pub fn log_theta_null(tau: &SiegelPoint, rel: f64) -> Result<Complex64> {
    let zero = vec![Complex64::new(0.0, 0.0); tau.genus()];
    let mut acc = Complex64::new(0.0, 0.0);
    for c in even_characteristics(tau.genus())? {
        acc += theta_relative(&c, tau, &zero, rel)?.value.ln();
    }
    Ok(acc)
}

/// Both sides of the product formula on a block-diagonal point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FactorCheck {
    pub full: ThetaValue,
    pub product: Complex64,
    pub difference: f64,
}

pub fn factor_on_decomposable(
    c: &Characteristic,
    tau1: &SiegelPoint,
    tau2: &SiegelPoint,
    z1: &[Complex64],
    z2: &[Complex64],
    tol: f64,
) -> Result<FactorCheck> {
    let g1 = tau1.genus();
    if c.genus() != g1 + tau2.genus() || z1.len() != g1 || z2.len() != tau2.genus() {
        return Err(Error::InvalidInput("incompatible dimensions".into()));
    }
    let (c1, c2) = c.split(g1)?;
    let tau = SiegelPoint::block_diag(tau1, tau2);
    let z: Vec<Complex64> = z1.iter().chain(z2).cloned().collect();
    let full = theta(c, &tau, &z, tol)?;
    let product = theta(&c1, tau1, z1, tol)?.value * theta(&c2, tau2, z2, tol)?.value;
    Ok(FactorCheck { full, product, difference: (full.value - product).norm() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn counts_and_parity() {
        assert_eq!(even_characteristics(1).unwrap().len(), 3);
        assert_eq!(even_characteristics(2).unwrap().len(), 10);
        assert_eq!(even_characteristics(3).unwrap().len(), 36);
        assert!(even_characteristics(4).is_err());
        assert_eq!(Characteristic::parse("000;000").unwrap().parity(), Parity::Even);
        assert_eq!(Characteristic::parse("110;110").unwrap().parity(), Parity::Even);
        assert_eq!(Characteristic::parse("100;100").unwrap().parity(), Parity::Odd);
        let evens = even_characteristics(2).unwrap();
        assert_eq!(evens[0].to_string(), "[00;00]");
        assert!(evens.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(Characteristic::parse("0,0").unwrap(), Characteristic::new(vec![0], vec![0]).unwrap());
        assert_eq!(
            Characteristic::parse("1,1,0;1,1,0").unwrap(),
            Characteristic::parse("[110;110]").unwrap()
        );
        assert!(Characteristic::parse("12;00").is_err());
        assert!(Characteristic::parse("1;00").is_err());
    }

    #[test]
    fn odd_genus_one_vanishes() {
        let tau = SiegelPoint::diagonal(&[ci(1.0, 2.0)]).unwrap();
        let c = Characteristic::parse("1;1").unwrap();
        assert!(theta_constant(&c, &tau, 1e-12).unwrap().value.norm() < 1e-12);
    }

    #[test]
    fn tail_bound_shrinks_with_radius() {
        let b: Vec<f64> = [4, 8, 16].iter().map(|&r| tail_bound(3, 0.5, 0.3, r)).collect();
        assert!(b[0] > b[1] && b[1] > b[2]);
        assert!(tail_bound(1, 1.0, 100.0, 4).is_infinite());
    }

    #[test]
    fn unreachable_precision_is_reported() {
        let tau = SiegelPoint::diagonal(&[ci(0.0, 1e-5)]).unwrap();
        let c = Characteristic::parse("0;0").unwrap();
        assert!(matches!(theta_constant(&c, &tau, 1e-12), Err(Error::PrecisionUnreachable { .. })));
    }

    #[test]
    fn theta_null_requires_genus_three() {
        let tau = SiegelPoint::diagonal(&[ci(0.0, 1.0), ci(0.0, 1.0)]).unwrap();
        assert!(theta_null(&tau, 1e-10).is_err());
    }
}
