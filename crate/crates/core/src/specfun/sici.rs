#![allow(clippy::excessive_precision)]
use std::f64::consts::PI;

use crate::quad::panels;

/// Sine integral `Si(x) = int_0^x sin(t)/t dt`.
pub fn sine_integral(x: f64) -> f64 {
    let r = x.abs();
    let value = if r <= 4.0 {
        // power series
        let mut term = r;
        let mut sum = r;
        let x2 = r * r;
        let mut n = 0.0;
        loop {
            n += 1.0;
            term *= -x2 / ((2.0 * n) * (2.0 * n + 1.0));
            let add = term / (2.0 * n + 1.0);
            sum += add;
            if add.abs() < 1e-18 {
                break;
            }
        }
        sum
    } else if r <= 200.0 {
        let sinc = |t: f64| t.sin() / t;
        sine_integral(4.0) + panels(sinc, 4.0, r, (r - 4.0).ceil() as usize + 1)
    } else {
        // auxiliary functions f, g, asymptotic
        let (mut f, mut g) = (0.0, 0.0);
        let mut tf = 1.0 / r;
        let mut tg = 1.0 / (r * r);
        for k in 0..8 {
            f += tf;
            g += tg;
            let k2 = 2.0 * k as f64;
            tf *= -(k2 + 1.0) * (k2 + 2.0) / (r * r);
            tg *= -(k2 + 2.0) * (k2 + 3.0) / (r * r);
        }
        PI / 2.0 - f * r.cos() - g * r.sin()
    };
    value.copysign(x)
}
