//! Exact arithmetic: ℚ, ℚ(i), roots of unity and cyclotomic fields ℚ(ζ_M).
//!
//! Everything here is immutable and arbitrary precision; equality is exact.

pub mod cyclotomic;
pub mod gaussian;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod root;

pub use cyclotomic::{cyclotomic_is_zero, Cyclotomic, MAX_CONDUCTOR};
pub use gaussian::GaussianRational;
pub use matrix::Mat;
pub use rational::{int, rat, Rational};
pub use root::{root_to_complex, RootOfUnity};

use std::fmt::Debug;

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative field with exact equality, enough for Gaussian elimination.
/// Zero and one come from [`num_traits::Zero`] and [`num_traits::One`].
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Multiplicative inverse, `None` for zero.
    fn checked_inv(&self) -> Option<Self>;
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}
