use std::f64::consts::PI;

use num_complex::Complex64;

use super::gamma::rgamma;
use super::taylor::{continue_solution, Quadratic};
use crate::error::{finite_c, Error, Result};

/// Largest `|z|` accepted by [`pcf_d`].
pub const PCF_MAX_ABS_Z: f64 = 50.0;
const SERIES_RADIUS: f64 = 3.5;
const ASYMPTOTIC_RADIUS: f64 = 9.5;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn equation(nu: Complex64) -> Quadratic {
    Quadratic {
        q0: -(nu + 0.5),
        q1: c(0.0, 0.0),
        q2: c(0.25, 0.0),
    }
}

/// Power series about the origin, from `D_nu(0)` and `D_nu'(0)`.
pub fn pcf_maclaurin(nu: Complex64, z: Complex64) -> (Complex64, Complex64) {
    let sqrt_pi = PI.sqrt();
    let two = c(2.0, 0.0);
    let d0 = two.powc(nu / 2.0) * sqrt_pi * rgamma((1.0 - nu) / 2.0);
    let dp0 = -two.powc((nu + 1.0) / 2.0) * sqrt_pi * rgamma(-nu / 2.0);
    let a = nu + 0.5;
    // y'' = (z^2/4 - a) y: c_{n+2} (n+1)(n+2) = -a c_n + c_{n-2}/4
    let mut coef: Vec<Complex64> = vec![d0, dp0];
    let mut y = d0 + dp0 * z;
    let mut dy = dp0;
    let mut pow_prev = z; // z^{n-1} for n = 2
    let mut small = 0;
    for n in 0..600usize {
        let cm2 = if n >= 2 { coef[n - 2] } else { c(0.0, 0.0) };
        let next = (-a * coef[n] + cm2 / 4.0) / (((n + 1) * (n + 2)) as f64);
        coef.push(next);
        let k = n + 2;
        let term = next * pow_prev * z;
        let dterm = next * k as f64 * pow_prev;
        y += term;
        dy += dterm;
        pow_prev *= z;
        if term.norm() + dterm.norm() <= 1e-18 * (y.norm() + dy.norm()) {
            small += 1;
            if small >= 4 {
                break;
            }
        } else {
            small = 0;
        }
    }
    (y, dy)
}

/// Series `sum_s sign^s (p)_{2s} / (s! (2 z^2)^s)` and its z-derivative,
/// summed until the terms stop decreasing.
fn asym_series(p: Complex64, z: Complex64, alternate: bool) -> (Complex64, Complex64) {
    let inv = (2.0 * z * z).inv();
    let mut term = c(1.0, 0.0);
    let mut sum = term;
    let mut dsum = c(0.0, 0.0);
    let mut last = f64::INFINITY;
    for s in 1..200usize {
        let sf = s as f64;
        let ratio = (p + (2.0 * sf - 2.0)) * (p + (2.0 * sf - 1.0)) / sf * inv;
        let next = if alternate { -term * ratio } else { term * ratio };
        let mag = next.norm();
        if mag > last {
            break;
        }
        last = mag;
        term = next;
        sum += term;
        dsum += term * (-2.0 * sf) / z;
        if mag <= 1e-18 * sum.norm() {
            break;
        }
    }
    (sum, dsum)
}

/// Large-`|z|` expansion with the connection term switched on for
/// `|arg z| > pi/2`.
pub fn pcf_asymptotic(nu: Complex64, z: Complex64) -> (Complex64, Complex64) {
    let lnz = z.ln();
    let (s1, ds1) = asym_series(-nu, z, true);
    let e1 = (nu * lnz - z * z / 4.0).exp();
    let mut val = e1 * s1;
    let mut der = e1 * ((nu / z - z / 2.0) * s1 + ds1);
    let theta = z.arg();
    if theta.abs() > PI / 2.0 {
        let phase = if theta > 0.0 { (c(0.0, PI) * nu).exp() } else { (c(0.0, -PI) * nu).exp() };
        let k = -(2.0 * PI).sqrt() * rgamma(-nu) * phase;
        if k.norm() > 0.0 {
            let (s2, ds2) = asym_series(nu + 1.0, z, false);
            let e2 = (z * z / 4.0 - (nu + 1.0) * lnz).exp();
            val += k * e2 * s2;
            der += k * e2 * ((z / 2.0 - (nu + 1.0) / z) * s2 + ds2);
        }
    }
    (val, der)
}

/// Parabolic cylinder function `D_nu(z)` and its derivative.
///
/// Series for `|z| <= 3.5`, asymptotic expansion for `|z| >= 9.5`, and Taylor
/// continuation of `y'' = (z^2/4 - nu - 1/2) y` along the ray in between, run
/// in whichever direction the wanted solution dominates.
pub fn pcf_d(nu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    for v in [nu.re, nu.im, z.re, z.im] {
        if !v.is_finite() {
            return Err(Error::NonFinite("pcf_d input"));
        }
    }
    let r = z.norm();
    if r > PCF_MAX_ABS_Z {
        return Err(Error::Overflow(format!("|z| = {r} exceeds {PCF_MAX_ABS_Z} in pcf_d")));
    }
    let (v, d) = if r <= SERIES_RADIUS {
        pcf_maclaurin(nu, z)
    } else if r >= ASYMPTOTIC_RADIUS {
        pcf_asymptotic(nu, z)
    } else {
        let unit = z / r;
        let outer = unit * ASYMPTOTIC_RADIUS;
        let at_outer = pcf_asymptotic(nu, outer);
        let recessive = (outer * outer).re > 0.0 && at_outer.0.norm() < 1.0;
        if recessive {
            continue_solution(&equation(nu), outer, at_outer.0, at_outer.1, z)
        } else {
            let inner = unit * SERIES_RADIUS;
            let at_inner = pcf_maclaurin(nu, inner);
            continue_solution(&equation(nu), inner, at_inner.0, at_inner.1, z)
        }
    };
    Ok((finite_c(v, "pcf_d")?, finite_c(d, "pcf_d derivative")?))
}
