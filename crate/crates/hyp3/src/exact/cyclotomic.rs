use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{self, cyclotomic_poly, Poly};
use super::rational::{to_f64, Rational};
use super::Field;
use crate::{Error, Result};

/// Largest conductor accepted by the constructors.
pub const MAX_CONDUCTOR: u64 = 720;

/// An element of ℚ(ζ_M), stored over the power basis `1, ζ_M, …, ζ_M^{φ(M)−1}`.
///
/// The coordinate vector is always fully reduced modulo Φ_M, so an element is zero
/// exactly when all coordinates vanish.  Binary operations lift both operands to
/// the lcm of their conductors and panic if that lcm exceeds [`MAX_CONDUCTOR`].
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u64,
    coeffs: Poly,
}

fn check_conductor(m: u64) -> Result<()> {
    if m == 0 || m > MAX_CONDUCTOR {
        Err(Error::ConductorTooLarge(m))
    } else {
        Ok(())
    }
}

impl Cyclotomic {
    /// Builds `Σ c_k ζ_M^k` from an arbitrary-length coefficient list.
    pub fn from_poly(conductor: u64, coeffs: Poly) -> Result<Self> {
        check_conductor(conductor)?;
        let (_, r) = poly::divrem(&coeffs, &cyclotomic_poly(conductor));
        Ok(Self { conductor, coeffs: r })
    }

    /// `ζ_M^k` for any integer `k`.
    pub fn zeta_pow(conductor: u64, k: i64) -> Result<Self> {
        check_conductor(conductor)?;
        let e = k.rem_euclid(conductor as i64) as usize;
        let mut c = vec![Rational::zero(); e + 1];
        c[e] = Rational::one();
        Self::from_poly(conductor, c)
    }

    pub fn from_rational(r: Rational) -> Self {
        let mut coeffs = vec![r];
        poly::trim(&mut coeffs);
        Self { conductor: 1, coeffs }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Re-express in ℚ(ζ_L) for a multiple `L` of the conductor.
    pub fn lift(&self, l: u64) -> Self {
        assert!(l % self.conductor == 0, "lift target must be a multiple");
        if l == self.conductor {
            return self.clone();
        }
        check_conductor(l).expect("conductor cap exceeded");
        let step = (l / self.conductor) as usize;
        let mut c = vec![Rational::zero(); self.coeffs.len().saturating_sub(1) * step + 1];
        for (k, x) in self.coeffs.iter().enumerate() {
            c[k * step] = x.clone();
        }
        Self::from_poly(l, c).expect("checked above")
    }

    fn common(&self, o: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&o.conductor);
        (self.lift(l), o.lift(l))
    }

    /// The complex embedding sending ζ_M to e^{2πi/M}.
    pub fn to_complex(&self) -> Complex64 {
        let w = 2.0 * std::f64::consts::PI / self.conductor as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| Complex64::from_polar(to_f64(c), w * k as f64))
            .sum()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = poly::gcd_ext(&self.coeffs, &cyclotomic_poly(self.conductor));
        // Φ_M is irreducible, so any nonzero reduced element is coprime to it.
        debug_assert_eq!(g.len(), 1);
        Some(Self::from_poly(self.conductor, s).expect("same conductor"))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::from_rational(Rational::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut coeffs: Poly = self.coeffs.iter().map(|c| c * r).collect();
        poly::trim(&mut coeffs);
        Self { conductor: self.conductor, coeffs }
    }
}

/// Exact zero test in ℚ(ζ_M).
pub fn cyclotomic_is_zero(x: &Cyclotomic) -> bool {
    x.is_zero()
}

impl PartialEq for Cyclotomic {
    fn eq(&self, o: &Self) -> bool {
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

impl Add for Cyclotomic {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = self.common(&o);
        Self { conductor: a.conductor, coeffs: poly::add(&a.coeffs, &b.coeffs) }
    }
}

impl Sub for Cyclotomic {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let (a, b) = self.common(&o);
        Self { conductor: a.conductor, coeffs: poly::sub(&a.coeffs, &b.coeffs) }
    }
}

impl Neg for Cyclotomic {
    type Output = Self;
    fn neg(self) -> Self {
        Self { conductor: self.conductor, coeffs: poly::neg(&self.coeffs) }
    }
}

impl Mul for Cyclotomic {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = self.common(&o);
        Self::from_poly(a.conductor, poly::mul(&a.coeffs, &b.coeffs)).expect("same conductor")
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl Field for Cyclotomic {
    fn checked_inv(&self) -> Option<Self> {
        Cyclotomic::inv(self)
    }
    fn from_rational(r: &Rational) -> Self {
        Cyclotomic::from_rational(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn z(m: u64, k: i64) -> Cyclotomic {
        Cyclotomic::zeta_pow(m, k).unwrap()
    }

    #[test]
    fn cube_roots_sum_to_zero() {
        let s = z(3, 1) + z(3, 2) + Cyclotomic::from_rational(int(1));
        assert!(cyclotomic_is_zero(&s));
    }

    #[test]
    fn i_plus_one_is_nonzero() {
        assert!(!cyclotomic_is_zero(&(z(4, 1) + Cyclotomic::from_rational(int(1)))));
    }

    #[test]
    fn sixth_root_identity_across_conductors() {
        // e^{πi/3} = e^{2πi/3} + 1, mixing conductors 6 and 3.
        let x = z(6, 1) - z(3, 1) - Cyclotomic::from_rational(int(1));
        assert!(x.is_zero());
        let num = Complex64::from_polar(1.0, std::f64::consts::PI / 3.0)
            - Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
            - 1.0;
        assert!(num.norm() < 1e-15);
    }

    #[test]
    fn inverse_and_powers() {
        let a = z(12, 1) + z(12, 5).scale(&rat(1, 2));
        let b = a.inv().unwrap();
        assert_eq!(a * b, Cyclotomic::from_rational(int(1)));
        assert_eq!(z(12, 1).pow(12), Cyclotomic::from_rational(int(1)));
        assert_eq!(z(12, 1).pow(6), Cyclotomic::from_rational(int(-1)));
    }

    #[test]
    fn conductor_cap_is_an_error() {
        assert_eq!(Cyclotomic::zeta_pow(721, 1).unwrap_err(), Error::ConductorTooLarge(721));
        assert!(Cyclotomic::zeta_pow(720, 1).is_ok());
    }

    #[test]
    fn embedding_matches_reduced_form() {
        let x = z(12, 7) + z(12, 11).scale(&rat(-3, 4));
        let direct = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 7.0 / 12.0)
            - 0.75 * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 11.0 / 12.0);
        assert!((x.to_complex() - direct).norm() < 1e-14);
    }
}
