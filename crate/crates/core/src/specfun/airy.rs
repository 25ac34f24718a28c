#![allow(clippy::excessive_precision)]
use std::f64::consts::PI;

use num_complex::Complex64;

use super::taylor::{continue_solution, Quadratic};

const AI0: f64 = 0.355_028_053_887_817_24;
const AIP0: f64 = -0.258_819_403_792_806_8;
const SERIES_RADIUS: f64 = 2.0;
const ASYMPTOTIC_RADIUS: f64 = 12.0;

const AIRY_EQ: Quadratic = Quadratic {
    q0: Complex64::new(0.0, 0.0),
    q1: Complex64::new(1.0, 0.0),
    q2: Complex64::new(0.0, 0.0),
};

/// Maclaurin series of `(Ai, Ai')`; accurate for moderate `|x|`.
pub fn ai_maclaurin(x: f64) -> (f64, f64) {
    // a_{n+3} = a_n / ((n+2)(n+3))
    let mut a = [AI0, AIP0, 0.0];
    let mut y = 0.0;
    let mut dy = 0.0;
    let mut pow_prev = 0.0; // x^{n-1}
    let mut pow = 1.0; // x^n
    let mut small = 0;
    for n in 0..400usize {
        let an = a[n % 3];
        let term = an * pow;
        let dterm = n as f64 * an * pow_prev;
        y += term;
        dy += dterm;
        a[n % 3] = an / (((n + 2) * (n + 3)) as f64);
        pow_prev = if n == 0 { 1.0 } else { pow_prev * x };
        pow *= x;
        if n > 3 && term.abs() + dterm.abs() <= 1e-18 * (y.abs() + dy.abs()) {
            small += 1;
            if small >= 3 {
                break;
            }
        } else if n > 3 {
            small = 0;
        }
    }
    (y, dy)
}

fn u_coefficients(n: usize) -> Vec<f64> {
    let mut u = vec![1.0];
    for k in 1..=n {
        let kf = k as f64;
        let prev = u[k - 1];
        u.push(prev * (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0) / ((2.0 * kf - 1.0) * 216.0 * kf));
    }
    u
}

/// Large-`|x|` asymptotic expansion of `(Ai, Ai')`, valid for `|x| >~ 10`.
pub fn ai_asymptotic(x: f64) -> (f64, f64) {
    let r = x.abs();
    let zeta = 2.0 / 3.0 * r.powf(1.5);
    let u = u_coefficients(80);
    let v: Vec<f64> = u
        .iter()
        .enumerate()
        .map(|(k, uk)| {
            let kf = k as f64;
            -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * uk
        })
        .collect();
    let sqrt_pi = PI.sqrt();
    if x > 0.0 {
        let (mut s_u, mut s_v) = (0.0, 0.0);
        let mut pow = 1.0;
        let mut last = f64::INFINITY;
        for k in 0..u.len() {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let tu = sign * u[k] * pow;
            let tv = sign * v[k] * pow;
            if tu.abs() > last {
                break;
            }
            last = tu.abs();
            s_u += tu;
            s_v += tv;
            if tu.abs() < 1e-18 * s_u.abs() {
                break;
            }
            pow /= zeta;
        }
        let e = (-zeta).exp();
        let ai = e / (2.0 * sqrt_pi * r.powf(0.25)) * s_u;
        let aip = -r.powf(0.25) * e / (2.0 * sqrt_pi) * s_v;
        (ai, aip)
    } else {
        let (mut p, mut q, mut rr, mut ss) = (0.0, 0.0, 0.0, 0.0);
        let mut pow = 1.0;
        let mut last = f64::INFINITY;
        for k in 0..u.len() {
            let term = u[k] * pow;
            if term.abs() > last {
                break;
            }
            last = term.abs();
            let j = k / 2;
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            if k % 2 == 0 {
                p += sign * u[k] * pow;
                rr += sign * v[k] * pow;
            } else {
                q += sign * u[k] * pow;
                ss += sign * v[k] * pow;
            }
            if term.abs() < 1e-18 {
                break;
            }
            pow /= zeta;
        }
        let (sn, cs) = (zeta - PI / 4.0).sin_cos();
        let ai = (cs * p + sn * q) / (sqrt_pi * r.powf(0.25));
        let aip = r.powf(0.25) / sqrt_pi * (sn * rr - cs * ss);
        (ai, aip)
    }
}

fn continue_real(x0: f64, y0: (f64, f64), x1: f64) -> (f64, f64) {
    let (y, dy) = continue_solution(
        &AIRY_EQ,
        Complex64::new(x0, 0.0),
        Complex64::new(y0.0, 0.0),
        Complex64::new(y0.1, 0.0),
        Complex64::new(x1, 0.0),
    );
    (y.re, dy.re)
}

/// Asymptotic values at `|x| = 12` continued inward to `x` by Taylor steps.
pub fn ai_continued_from_asymptotic(x: f64) -> (f64, f64) {
    let start = ASYMPTOTIC_RADIUS.copysign(x);
    continue_real(start, ai_asymptotic(start), x)
}

/// Airy function `Ai(x)` and its derivative.
///
/// Maclaurin series for `|x| <= 2`, asymptotic expansions for `|x| >= 12`, and
/// Taylor-step continuation of the ODE `y'' = x y` in between: inward from the
/// asymptotic radius for `x > 0` (recessive direction), outward from the series
/// radius for `x < 0` (oscillatory, neutral).
pub fn airy_ai(x: f64) -> (f64, f64) {
    if x.is_nan() {
        return (f64::NAN, f64::NAN);
    }
    let r = x.abs();
    if r <= SERIES_RADIUS {
        ai_maclaurin(x)
    } else if r >= ASYMPTOTIC_RADIUS {
        if x.is_infinite() {
            return if x > 0.0 { (0.0, 0.0) } else { (0.0, f64::NAN) };
        }
        ai_asymptotic(x)
    } else if x > 0.0 {
        ai_continued_from_asymptotic(x)
    } else {
        continue_real(-SERIES_RADIUS, ai_maclaurin(-SERIES_RADIUS), x)
    }
}
