//! Extended-spin-space toolkit.
//!
//! Constructs explicit matrix representations of the Clifford algebras
//! `C_N` (even `N`, signature `(+,-,-,...)`), solves the matrix Dirac
//! equation and its right-acting partner in the plane-wave sector,
//! classifies the chiral scalar symmetry algebra, decomposes matrix
//! fields into Lorentz channels (with the free-Maxwell equivalence for
//! the vector channel), and verifies the gauge-Lagrangian trace
//! identities for u(1), su(2), su(3) and the embedded N=6 u(2) set.
//!
//! Everything is checked numerically against independent oracles; see
//! the per-module tests and the `acceptance` suite in the CLI crate.

pub mod clifford;
pub mod covariant;
pub mod dirac;
pub mod error;
pub mod gauge;
pub mod linalg;
pub mod seeding;
pub mod symmetry;

pub use clifford::CliffordAlgebra;
pub use dirac::{FourMomentum, MatrixField, PlaneWaveProblem};
pub use error::Error;

/// Absolute tolerance for exact algebraic identities (entries are small
/// Gaussian integers over small powers of two).
pub const TOL_ALGEBRAIC: f64 = 1e-12;

/// Tolerance for identities that go through an SVD or least-squares step.
pub const TOL_NUMERIC: f64 = 1e-10;

/// Relative singular-value threshold for rank and null-space decisions.
pub const SVD_RANK_REL: f64 = 1e-8;
