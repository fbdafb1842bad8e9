//! Computations around genus-3 Shimura curves in the hyperelliptic locus.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact`] — rationals, Gaussian rationals, roots of unity, cyclotomic fields and
//!   generic exact matrices; [`lattice`] adds integer kernels via Hermite normal form.
//! * [`siegel`] — points of the Siegel upper half-space, the symplectic action and
//!   affine period-matrix families.
//! * [`theta`] — theta functions with characteristics, with a certified truncation bound.
//! * [`cones`] — the eight genus-3 boundary cones with their coordinate maps and
//!   exact monomial valuations.
//! * [`fourier_jacobi`] — lowest-order-term coefficients of the theta-null and
//!   Fourier–Jacobi truncations, with numeric limit checks.
//! * [`roots`] — vanishing sums of roots of unity (Mann's bound) and a brute-force oracle.
//! * [`shimura`] — the families `Π_u(t)`, their theta vanishing and fixed-part lattices.
//! * [`z2z4`] — exact checks for the hyperelliptic family with reduced automorphism
//!   group ℤ₂×ℤ₄.
//! * [`acceptance`] — the end-to-end checks shared by the `suite` command and the tests.
//! * [`cli`] — the command-line front end.

pub mod acceptance;
pub mod cli;
pub mod cones;
pub mod error;
pub mod exact;
pub mod fourier_jacobi;
pub mod lattice;
pub mod report;
pub mod roots;
pub mod shimura;
pub mod siegel;
pub mod theta;
pub mod z2z4;

pub use error::{Error, Result};
pub use num_complex::Complex64;
