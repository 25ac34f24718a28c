//! Parameter domain, Stokes multipliers and connection constants of the real
//! Ablowitz-Segur family.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::{log_gamma, rgamma};

/// The pair `(alpha, k)` identifying a real Ablowitz-Segur solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ASParams {
    alpha: f64,
    k: f64,
}

impl ASParams {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// `(alpha, k) = (0, 0)`, i.e. `v = 0`.
    pub fn is_degenerate(&self) -> bool {
        self.alpha == 0.0 && self.k == 0.0
    }

    /// `cos^2(pi alpha) - k^2`, in `(0, 1]` on the valid domain.
    pub fn modulus(&self) -> f64 {
        let c = (PI * self.alpha).cos();
        c * c - self.k * self.k
    }
}

/// Validate `(alpha, k)`: `|alpha| < 1/2` and `|k| < cos(pi alpha)`.
pub fn make_params(alpha: f64, k: f64) -> Result<ASParams> {
    if !alpha.is_finite() || !k.is_finite() {
        return Err(Error::Domain(format!("non-finite parameters ({alpha}, {k})")));
    }
    if alpha.abs() >= 0.5 {
        return Err(Error::Domain(format!("|alpha| = {} must be < 1/2", alpha.abs())));
    }
    let bound = (PI * alpha).cos();
    if k.abs() >= bound {
        return Err(Error::Domain(format!("|k| = {} must be < cos(pi alpha) = {bound}", k.abs())));
    }
    Ok(ASParams { alpha, k })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StokesTriple {
    pub s1: Complex64,
    pub s2: Complex64,
    pub s3: Complex64,
}

impl StokesTriple {
    /// `s1 - s2 + s3 + s1 s2 s3 + 2 sin(pi alpha)`.
    pub fn constraint_residual(&self, alpha: f64) -> f64 {
        (self.s1 - self.s2 + self.s3 + self.s1 * self.s2 * self.s3 + 2.0 * (PI * alpha).sin()).norm()
    }
}

pub fn stokes_triple(p: &ASParams) -> StokesTriple {
    let s = -(PI * p.alpha).sin();
    StokesTriple {
        s1: Complex64::new(s, -p.k),
        s2: Complex64::new(0.0, 0.0),
        s3: Complex64::new(s, p.k),
    }
}

/// Amplitude `d` and phase `phi` of the oscillatory tail as `x -> -inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConnectionConstants {
    pub d: f64,
    pub phi: f64,
}

/// `d = sqrt(-ln(cos^2(pi alpha) - k^2) / pi)`; zero only for degenerate params.
pub fn amplitude(p: &ASParams) -> f64 {
    (-p.modulus().ln() / PI).max(0.0).sqrt()
}

/// Reduce an angle into `(-pi, pi]`.
pub fn reduce_angle(a: f64) -> f64 {
    let mut r = a.rem_euclid(2.0 * PI);
    if r > PI {
        r -= 2.0 * PI;
    }
    r
}

pub fn connection_constants(p: &ASParams) -> Result<ConnectionConstants> {
    if p.is_degenerate() {
        return Err(Error::Degenerate("connection constants undefined for (0, 0)".into()));
    }
    let d = amplitude(p);
    let d2 = d * d;
    let arg_gamma = log_gamma(Complex64::new(0.0, d2 / 2.0))?.im;
    let arg_s1 = Complex64::new(-(PI * p.alpha).sin(), -p.k).arg();
    let phi = -1.5 * d2 * 2f64.ln() + arg_gamma - PI / 4.0 - arg_s1;
    Ok(ConnectionConstants { d, phi: reduce_angle(phi) })
}

/// Riemann-Hilbert bookkeeping constants `nu`, `h0`, `h1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RHConstants {
    pub nu: Complex64,
    pub h0: Complex64,
    pub h1: Complex64,
}

/// `nu = -(2 pi i)^{-1} ln(cos^2(pi alpha) - k^2)`, evaluated through the
/// logarithm rather than through `d`.
pub fn nu_from_log(p: &ASParams) -> Complex64 {
    Complex64::new(0.0, p.modulus().ln() / (2.0 * PI))
}

pub fn h_constants(nu: Complex64) -> (Complex64, Complex64) {
    let sqrt_2pi = (2.0 * PI).sqrt();
    let h0 = Complex64::new(0.0, -sqrt_2pi) * rgamma(nu + 1.0);
    let h1 = sqrt_2pi * (Complex64::new(0.0, PI) * nu).exp() * rgamma(-nu);
    (h0, h1)
}

pub fn rh_constants(p: &ASParams) -> RHConstants {
    let d = amplitude(p);
    let nu = Complex64::new(0.0, -d * d / 2.0);
    let (h0, h1) = h_constants(nu);
    RHConstants { nu, h0, h1 }
}
