use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::cyclotomic::Cyclotomic;
use super::rational::{frac, rat, Rational};
use crate::Result;

/// The root of unity `e^{2πi·exponent}`, with the exponent reduced to `[0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    exponent: Rational,
}

impl RootOfUnity {
    pub fn new(exponent: Rational) -> Self {
        Self { exponent: frac(&exponent) }
    }

    /// `e^{2πi k/n}`.
    pub fn from_fraction(k: i64, n: i64) -> Self {
        Self::new(rat(k, n))
    }

    pub fn one() -> Self {
        Self { exponent: Rational::zero() }
    }

    pub fn exponent(&self) -> &Rational {
        &self.exponent
    }

    /// The multiplicative order, i.e. the reduced denominator of the exponent.
    pub fn order(&self) -> u64 {
        self.exponent.denom().to_u64().expect("order fits in u64")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.exponent + &o.exponent)
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::new(&self.exponent * BigInt::from(k))
    }

    pub fn inv(&self) -> Self {
        Self::new(-self.exponent.clone())
    }

    pub fn is_one(&self) -> bool {
        self.exponent.is_zero()
    }

    pub fn to_complex(&self) -> Complex64 {
        root_to_complex(self)
    }

    /// The same root inside ℚ(ζ_n), n = order.
    pub fn to_cyclotomic(&self) -> Result<Cyclotomic> {
        let n = self.order();
        let k = self.exponent.numer().to_i64().expect("small numerator");
        Cyclotomic::zeta_pow(n, k)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e(2πi·{})", self.exponent)
    }
}

/// `e^{2πi·exponent}`; multiples of 1/4 are returned exactly.
pub fn root_to_complex(z: &RootOfUnity) -> Complex64 {
    let e = &z.exponent;
    let four = e * BigInt::from(4);
    if four.is_integer() {
        return match four.to_integer().to_i64().unwrap() {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let num = e.numer().to_f64().unwrap();
    let den = e.denom().to_f64().unwrap();
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_values() {
        assert_eq!(root_to_complex(&RootOfUnity::one()), Complex64::new(1.0, 0.0));
        assert_eq!(root_to_complex(&RootOfUnity::from_fraction(1, 2)), Complex64::new(-1.0, 0.0));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let z = root_to_complex(&RootOfUnity::from_fraction(1, 8));
        assert!((z - Complex64::new(h, h)).norm() < 1e-15);
    }

    #[test]
    fn order_and_reduction() {
        let z = RootOfUnity::from_fraction(-5, 12);
        assert_eq!(z.exponent(), &rat(7, 12));
        assert_eq!(z.order(), 12);
        assert!(z.pow(12).is_one());
        assert!((1..12).all(|k| !z.pow(k).is_one()));
        assert!(z.mul(&z.inv()).is_one());
    }

    #[test]
    fn cyclotomic_image_agrees_numerically() {
        let z = RootOfUnity::from_fraction(5, 12);
        assert!((z.to_cyclotomic().unwrap().to_complex() - z.to_complex()).norm() < 1e-14);
    }
}
