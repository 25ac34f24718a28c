use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{finite_c, Error, Result};

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const SHIFT: f64 = 15.0;

// B_{2k} / (2k (2k-1)) for k = 1..10
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn stirling(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + series
}

/// `ln sin(pi z)` with the real part of `z` reduced before the trig evaluation.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    let sign = if (n as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let y = PI * z.im;
    let s = Complex64::new(
        sign * (PI * r).sin() * y.cosh(),
        sign * (PI * r).cos() * y.sinh(),
    );
    s.ln()
}

fn log_gamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.re < SHIFT {
        acc += w.ln();
        w += 1.0;
    }
    stirling(w) - acc
}

/// Principal-branch `ln Gamma(z)`.
///
/// The imaginary part is continuous away from the negative real axis; on that
/// axis it is only meaningful modulo `2 pi`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::NonFinite("log_gamma input"));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(z.re));
    }
    let value = if z.re < 0.5 {
        Complex64::new(PI.ln(), 0.0) - ln_sin_pi(z) - log_gamma_right(1.0 - z)
    } else {
        log_gamma_right(z)
    };
    finite_c(value, "log_gamma")
}

/// `Gamma(z)`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    finite_c(log_gamma(z)?.exp(), "gamma")
}

/// `1 / Gamma(z)`, entire: zero at the non-positive integers.
pub fn rgamma(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(f64::NAN, f64::NAN),
    }
}
