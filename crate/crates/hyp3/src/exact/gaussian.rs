use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use super::rational::{int, parse_rational, to_f64, Rational};
use super::Field;
use crate::{Error, Result};

/// An element `re + im·i` of ℚ(i).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re.clone(), im: -self.im.clone() }
    }

    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(to_f64(&self.re), to_f64(&self.im))
    }

    /// True when both parts are integers, i.e. the value lies in ℤ + iℤ.
    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Parses `"p/q+r/si"`, `"p/q"`, `"r/si"`, `"i"`, `"-i"` and similar.
    pub fn parse(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("malformed Gaussian rational '{s}'"));
        if t.is_empty() {
            return Err(bad());
        }
        // Split at the last sign that is not the leading character.
        let split = t
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(k, _)| k)
            .last();
        let (a, b) = match split {
            Some(k) => (&t[..k], Some(&t[k..])),
            None => (t.as_str(), None),
        };
        let imag_part = |p: &str| -> Result<Rational> {
            let body = p.strip_suffix('i').ok_or_else(bad)?;
            match body {
                "" | "+" => Ok(int(1)),
                "-" => Ok(int(-1)),
                _ => parse_rational(body).map_err(|_| bad()),
            }
        };
        match b {
            None if a.ends_with('i') => Ok(Self::new(Rational::zero(), imag_part(a)?)),
            None => Ok(Self::real(parse_rational(a).map_err(|_| bad())?)),
            Some(b) => {
                if a.ends_with('i') || !b.ends_with('i') {
                    return Err(bad());
                }
                Ok(Self::new(parse_rational(a).map_err(|_| bad())?, imag_part(b)?))
            }
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.re.is_zero() {
            write!(f, "{}i", self.im)
        } else if self.im < Rational::zero() {
            write!(f, "{}-{}i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.re + o.re, self.im + o.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero, like integer division.
    fn div(self, o: Self) -> Self {
        self * o.checked_inv().expect("division by zero Gaussian rational")
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::real(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl Field for GaussianRational {
    fn checked_inv(&self) -> Option<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return None;
        }
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }
    fn from_rational(r: &Rational) -> Self {
        Self::real(r.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn g(a: i64, b: i64, c: i64, d: i64) -> GaussianRational {
        GaussianRational::new(rat(a, b), rat(c, d))
    }

    #[test]
    fn parse_forms() {
        assert_eq!(GaussianRational::parse("1/2+1/2i").unwrap(), g(1, 2, 1, 2));
        assert_eq!(GaussianRational::parse("1/2-1/3i").unwrap(), g(1, 2, -1, 3));
        assert_eq!(GaussianRational::parse("-i").unwrap(), g(0, 1, -1, 1));
        assert_eq!(GaussianRational::parse("i").unwrap(), g(0, 1, 1, 1));
        assert_eq!(GaussianRational::parse("3").unwrap(), g(3, 1, 0, 1));
        assert_eq!(GaussianRational::parse("2/3i").unwrap(), g(0, 1, 2, 3));
        assert_eq!(GaussianRational::parse("-1+i").unwrap(), g(-1, 1, 1, 1));
        assert!(GaussianRational::parse("1+2").is_err());
        assert!(GaussianRational::parse("x").is_err());
        assert!(GaussianRational::parse("0.5+i").is_err());
    }

    #[test]
    fn u_squared_is_i_over_two() {
        let u = g(1, 2, 1, 2);
        assert_eq!(u.clone() * u, g(0, 1, 1, 2));
    }

    #[test]
    fn display_round_trips() {
        for s in ["1/2+1/2i", "-3/4i", "5", "1/3-2i"] {
            let x = GaussianRational::parse(s).unwrap();
            assert_eq!(GaussianRational::parse(&x.to_string()).unwrap(), x);
        }
    }
}
