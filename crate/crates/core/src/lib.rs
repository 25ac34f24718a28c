//! Real Ablowitz-Segur solutions of the inhomogeneous Painleve II equation
//! `v'' = x v + 2 v^3 - alpha`, their asymptotics, total integrals and Fourier
//! limits, the associated self-similar mKdV fields, and numerical checks of the
//! Riemann-Hilbert parametrix identities.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod error;
pub mod integrals;
pub mod matrix;
pub mod mkdv;
pub mod ode;
pub mod pii;
pub mod quad;
pub mod rh_verify;
pub mod specfun;
pub mod stokes;

pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex scalar used throughout the crate.
pub type ComplexValue = Complex64;
