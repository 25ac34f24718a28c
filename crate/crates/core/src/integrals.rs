//! Principal-value total integral of `v` and its Fourier transform near
//! `xi = 0`, with analytic tail corrections.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::asymptotics::psi_threshold;
use crate::error::{Error, Result};
use crate::pii::AsSolution;
use crate::quad::{gl20, panels_complex};
use crate::specfun::sine_integral;
use crate::stokes::ASParams;

/// Cutoff `X` separating the numerical core `[-X, X]` from analytic tails.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailPolicy {
    cutoff: f64,
    ibp_levels: u8,
    /// Requested accuracy; a warning is attached when the estimated tail
    /// remainder exceeds it.
    pub tolerance: f64,
}

impl TailPolicy {
    pub fn new(cutoff: f64, ibp_levels: u8) -> Result<Self> {
        if !(cutoff >= 20.0 && cutoff.is_finite()) {
            return Err(Error::Domain(format!("tail cutoff X = {cutoff} must be >= 20")));
        }
        if !(1..=2).contains(&ibp_levels) {
            return Err(Error::Domain(format!("ibp_levels = {ibp_levels} must be 1 or 2")));
        }
        Ok(Self { cutoff, ibp_levels, tolerance: 1e-3 })
    }

    pub fn cutoff(&self) -> f64 {
        self.cutoff
    }

    pub fn ibp_levels(&self) -> u8 {
        self.ibp_levels
    }
}

impl Default for TailPolicy {
    fn default() -> Self {
        Self { cutoff: 60.0, ibp_levels: 2, tolerance: 1e-3 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Estimate<T> {
    pub value: T,
    /// Magnitude of the first neglected integration-by-parts term.
    pub ibp_remainder: f64,
    /// `C X^{-3/4}` bound on the neglected remainder beyond the cutoff.
    pub h_tail_bound: f64,
    pub warning: Option<String>,
}

/// `(1/2) ln((cos(pi alpha) + k) / (cos(pi alpha) - k))`.
pub fn total_integral_formula(p: &ASParams) -> f64 {
    let c = (PI * p.alpha()).cos();
    0.5 * ((c + p.k()) / (c - p.k())).ln()
}

/// `alpha int_{|x| > X} e^{-i xi x} / x dx`.
pub fn f_tail(alpha: f64, xi: f64, cutoff: f64) -> Complex64 {
    if xi == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    Complex64::new(0.0, -2.0 * alpha * xi.signum() * (PI / 2.0 - sine_integral(xi.abs() * cutoff)))
}

/// Transform of `alpha/x` restricted to `|x| >= 1`.
pub fn f_hat(alpha: f64, xi: f64) -> Complex64 {
    Complex64::new(0.0, -2.0 * alpha * (xi.signum() * PI / 2.0 - sine_integral(xi)))
}

/// `int_X^inf 2 alpha (1 - alpha^2) x^{-4} e^{-i xi x} dx`.
fn right_tail(alpha: f64, xi: f64, cutoff: f64) -> Complex64 {
    let b = 2.0 * alpha * (1.0 - alpha * alpha);
    if b == 0.0 {
        return Complex64::new(0.0, 0.0);
    }
    if xi == 0.0 {
        return Complex64::new(b / (3.0 * cutoff.powi(3)), 0.0);
    }
    // x = X / u
    let n = ((xi.abs() * cutoff * 4.0) as usize).clamp(50, 4000);
    let r: std::result::Result<Complex64, Error> = panels_complex(
        |u| {
            if u == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            Ok(u * u * Complex64::from_polar(1.0, -xi * cutoff / u))
        },
        0.0,
        1.0,
        n,
    );
    r.unwrap_or_default() * (b / cutoff.powi(3))
}

/// One oscillatory exponential `a(s) e^{i Phi(s)}` of the left tail, with
/// `a = (d/2) s^{-1/4}` and `Phi = sign Psi(s) + xi s`.
struct TailPhase {
    d: f64,
    phi: f64,
    sign: f64,
    xi: f64,
}

impl TailPhase {
    fn phase(&self, s: f64) -> (f64, f64, f64) {
        let d2 = self.d * self.d;
        let psi = 2.0 / 3.0 * s.powf(1.5) - 0.75 * d2 * s.ln() + self.phi;
        let dpsi = s.sqrt() - 0.75 * d2 / s;
        let ddpsi = 0.5 / s.sqrt() + 0.75 * d2 / (s * s);
        (self.sign * psi + self.xi * s, self.sign * dpsi + self.xi, self.sign * ddpsi)
    }

    fn amp(&self, s: f64) -> (f64, f64) {
        let a = 0.5 * self.d * s.powf(-0.25);
        (a, -0.25 * a / s)
    }

    /// Boundary terms `B_0 = a / (i Phi')` and `B_1 = B_0' / (i Phi')`.
    fn boundary_terms(&self, s: f64) -> (Complex64, Complex64) {
        let i = Complex64::new(0.0, 1.0);
        let (_, p1, p2) = self.phase(s);
        let (a, da) = self.amp(s);
        let b0 = a / (i * p1);
        let db0 = (da * p1 - a * p2) / (i * p1 * p1);
        (b0, db0 / (i * p1))
    }

    /// `int_X^inf a e^{i Phi} ds` to `levels` integrations by parts, and
    /// the magnitude of the next term.
    fn integral(&self, x: f64, levels: u8) -> (Complex64, f64) {
        let e = Complex64::from_polar(1.0, self.phase(x).0);
        let (b0, b1) = self.boundary_terms(x);
        let h = 1e-4 * x;
        let b1p = (self.boundary_terms(x + h).1 - self.boundary_terms(x - h).1) / (2.0 * h);
        let b2 = b1p.norm() / self.phase(x).1.abs();
        match levels {
            1 => (-b0 * e, b1.norm()),
            _ => ((b1 - b0) * e, b2),
        }
    }
}

fn panel_len(x: f64, xi: f64, x_match: f64) -> f64 {
    let mut len: f64 = 2.0;
    if x < -1.0 {
        len = len.min(PI / (-x).sqrt());
    }
    if xi != 0.0 {
        len = len.min(PI / xi.abs());
    }
    if x >= x_match {
        len = len.max(if xi != 0.0 { (PI / xi.abs()).min(8.0) } else { 8.0 });
    }
    len
}

/// `int_{-X}^{X} v(x) e^{-i xi x} dx` on Gauss panels sized to the local
/// oscillation of `v` and of the kernel.
fn core_transform(sol: &AsSolution, xi: f64, cutoff: f64) -> Result<Complex64> {
    let (nodes, weights) = gl20();
    let x_match = sol.config().x_match;
    let mut breaks = vec![-cutoff];
    let mut x = -cutoff;
    while x < cutoff {
        let stop = if x < x_match && cutoff > x_match { x_match } else { cutoff };
        let next = (x + panel_len(x, xi, x_match)).min(stop);
        breaks.push(next);
        x = next;
    }
    let mut total = Complex64::new(0.0, 0.0);
    for w in breaks.windows(2) {
        let (a, b) = (w[0], w[1]);
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut s = Complex64::new(0.0, 0.0);
        for (t, wt) in nodes.iter().zip(weights) {
            let xx = mid + half * t;
            let v = sol.evaluate(xx)?.0;
            s += *wt * v * Complex64::from_polar(1.0, -xi * xx);
        }
        total += half * s;
    }
    Ok(total)
}

/// `C` in `|v - model| <= C s^{-7/4}`, sampled on `[X/2, X]`.
fn remainder_constant(sol: &AsSolution, cutoff: f64) -> Result<f64> {
    let model = sol.model();
    let mut c: f64 = 0.0;
    let n = 400;
    for i in 0..=n {
        let s = cutoff * (0.5 + 0.5 * i as f64 / n as f64);
        let x = -s;
        if !sol.grid().contains(x) {
            continue;
        }
        let v = sol.grid().eval(x)?.0;
        c = c.max((v - model.eval(x, true).0).abs() * s.powf(1.75));
    }
    Ok(c)
}

fn check_policy(sol: &AsSolution, policy: &TailPolicy, xi: f64) -> Result<()> {
    let d = sol.model().d;
    let x = policy.cutoff;
    if x < 2.0 * psi_threshold(d) {
        return Err(Error::Domain(format!("cutoff {x} too small for d = {d}")));
    }
    let dpsi = x.sqrt() - 0.75 * d * d / x;
    if dpsi <= xi.abs() {
        return Err(Error::Domain(format!("tail phase is stationary beyond X = {x} at xi = {xi}")));
    }
    Ok(())
}

/// Fourier transform `int v(x) e^{-i xi x} dx` in the symmetric-limit sense,
/// for `0 < |xi| <= 1`.
pub fn v_hat(sol: &AsSolution, xi: f64, policy: &TailPolicy) -> Result<Estimate<Complex64>> {
    if !(xi != 0.0 && xi.abs() <= 1.0) {
        return Err(Error::Domain(format!("v_hat needs 0 < |xi| <= 1, got {xi}")));
    }
    transform(sol, xi, policy)
}

fn transform(sol: &AsSolution, xi: f64, policy: &TailPolicy) -> Result<Estimate<Complex64>> {
    let p = sol.params();
    if p.is_degenerate() {
        return Ok(Estimate { value: Complex64::new(0.0, 0.0), ibp_remainder: 0.0, h_tail_bound: 0.0, warning: None });
    }
    check_policy(sol, policy, xi)?;
    let x = policy.cutoff;
    let alpha = p.alpha();
    let model = sol.model();
    let core = core_transform(sol, xi, x)?;
    let mut left = Complex64::new(0.0, 0.0);
    let mut remainder = 0.0;
    for sign in [1.0, -1.0] {
        let phase = TailPhase { d: model.d, phi: model.phi, sign, xi };
        let (val, rem) = phase.integral(x, policy.ibp_levels);
        left += val;
        remainder += rem;
    }
    let value = core + left + f_tail(alpha, xi, x) + right_tail(alpha, xi, x);
    let h_tail_bound = remainder_constant(sol, x)? * 4.0 / 3.0 * x.powf(-0.75);
    let warning = (remainder > policy.tolerance)
        .then(|| format!("tail remainder estimate {remainder:e} exceeds tolerance {:e}", policy.tolerance));
    Ok(Estimate { value, ibp_remainder: remainder, h_tail_bound, warning })
}

/// `lim_{y -> inf} int_{-y}^{y} v dx`.
pub fn pv_total_integral(sol: &AsSolution, policy: &TailPolicy) -> Result<Estimate<f64>> {
    let e = transform(sol, 0.0, policy)?;
    Ok(Estimate { value: e.value.re, ibp_remainder: e.ibp_remainder, h_tail_bound: e.h_tail_bound, warning: e.warning })
}
