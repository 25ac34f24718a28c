//! Self-similar mKdV fields `u(t, x) = -2 (3t)^{-1/3} v(x (3t)^{-1/3})` and
//! their small-time limits.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::integrals::{v_hat, TailPolicy};
use crate::pii::{pii_rhs, AsSolution};
use crate::quad::gl20;
use crate::stokes::{make_params, ASParams};

/// Coefficients of the initial datum `a delta + b p.v.(1/x)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InitialDataCoefficients {
    pub a: f64,
    pub b: f64,
}

/// `alpha = -b/2`, `k = cos(pi alpha) tanh(-a/2)`.
pub fn ab_to_params(coeffs: InitialDataCoefficients) -> Result<ASParams> {
    let InitialDataCoefficients { a, b } = coeffs;
    if !(b.abs() < 1.0) || !a.is_finite() {
        return Err(Error::Domain(format!("need |b| < 1 and finite a, got ({a}, {b})")));
    }
    let alpha = -b / 2.0;
    make_params(alpha, (PI * alpha).cos() * (-a / 2.0).tanh())
}

/// A view of the self-similar field at a fixed time.
#[derive(Debug, Clone, Copy)]
pub struct SelfSimilarField<'a> {
    solution: &'a AsSolution,
    t: f64,
}

impl<'a> SelfSimilarField<'a> {
    pub fn new(solution: &'a AsSolution, t: f64) -> Result<Self> {
        if !(t > 0.0 && t.is_finite()) {
            return Err(Error::Domain(format!("time must be positive, got {t}")));
        }
        Ok(Self { solution, t })
    }

    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn params(&self) -> &ASParams {
        self.solution.params()
    }

    pub fn at_time(&self, t: f64) -> Result<Self> {
        Self::new(self.solution, t)
    }

    /// `(3t)^{-1/3}`.
    pub fn lambda(&self) -> f64 {
        (3.0 * self.t).cbrt().recip()
    }
}

pub fn u_eval(field: &SelfSimilarField, x: f64) -> Result<f64> {
    let l = field.lambda();
    Ok(-2.0 * l * field.solution.evaluate(x * l)?.0)
}

/// `u_hat(t, xi) = -2 v_hat(xi (3t)^{1/3})`.
pub fn u_hat(field: &SelfSimilarField, xi: f64, policy: &TailPolicy) -> Result<Complex64> {
    let scaled = xi / field.lambda();
    Ok(-2.0 * v_hat(field.solution, scaled, policy)?.value)
}

/// The distributional small-time limit of `u_hat(t, xi)`: `a - i pi b sgn(xi)`.
pub fn u_hat_limit(coeffs: InitialDataCoefficients, xi: f64) -> Complex64 {
    Complex64::new(coeffs.a, -PI * coeffs.b * xi.signum())
}

const WINDOW_SAMPLES: usize = 121;

fn window_points(window: (f64, f64)) -> Result<Vec<f64>> {
    let (lo, hi) = window;
    if !(lo < hi && lo.is_finite() && hi.is_finite()) {
        return Err(Error::Domain(format!("bad window ({lo}, {hi})")));
    }
    Ok((0..WINDOW_SAMPLES)
        .map(|i| lo + (hi - lo) * i as f64 / (WINDOW_SAMPLES - 1) as f64)
        .collect())
}

fn check_grid_window(field: &SelfSimilarField, lo: f64, hi: f64, t_lo: f64, t_hi: f64) -> Result<()> {
    let sol = field.solution;
    let (g_lo, g_hi) = (sol.config().x_left, sol.config().x_match);
    for t in [t_lo, t_hi] {
        let l = (3.0 * t).cbrt().recip();
        for x in [lo, hi] {
            let y = x * l;
            if !(y >= g_lo && y <= g_hi) {
                return Err(Error::WindowOutOfRange(format!(
                    "scaled point {y} outside the ODE grid [{g_lo}, {g_hi}]"
                )));
            }
        }
    }
    Ok(())
}

/// Max over the window of the central-difference residual of
/// `u_t + u_xxx - (3/2) u^2 u_x`.
pub fn pde_residual_fd(field: &SelfSimilarField, window: (f64, f64), h: f64) -> Result<f64> {
    if !(h > 0.0 && h < field.t) {
        return Err(Error::Domain(format!("step h = {h} must lie in (0, t)")));
    }
    let pts = window_points(window)?;
    if field.params().is_degenerate() {
        return Ok(0.0);
    }
    check_grid_window(field, window.0 - 2.0 * h, window.1 + 2.0 * h, field.t - h, field.t + h)?;
    let later = field.at_time(field.t + h)?;
    let earlier = field.at_time(field.t - h)?;
    let mut worst: f64 = 0.0;
    for x in pts {
        let u = |dx: f64| u_eval(field, x + dx);
        let u0 = u(0.0)?;
        let (up1, um1, up2, um2) = (u(h)?, u(-h)?, u(2.0 * h)?, u(-2.0 * h)?);
        let ut = (u_eval(&later, x)? - u_eval(&earlier, x)?) / (2.0 * h);
        let ux = (up1 - um1) / (2.0 * h);
        let uxxx = (up2 - 2.0 * up1 + 2.0 * um1 - um2) / (2.0 * h * h * h);
        worst = worst.max((ut + uxxx - 1.5 * u0 * u0 * ux).abs());
    }
    Ok(worst)
}

/// Same residual with exact derivatives built from `(v, v')` and the ODE:
/// `v'' = y v + 2 v^3 - alpha`, `v''' = v + y v' + 6 v^2 v'`.
pub fn pde_residual_closure(field: &SelfSimilarField, window: (f64, f64)) -> Result<f64> {
    let pts = window_points(window)?;
    if field.params().is_degenerate() {
        return Ok(0.0);
    }
    check_grid_window(field, window.0, window.1, field.t, field.t)?;
    let l = field.lambda();
    let dl = -l.powi(4);
    let alpha = field.params().alpha();
    let mut worst: f64 = 0.0;
    for x in pts {
        let y = x * l;
        let (v, dv) = field.solution.evaluate(y)?;
        let _ = pii_rhs(y, v, alpha);
        let dddv = v + y * dv + 6.0 * v * v * dv;
        let u = -2.0 * l * v;
        let ux = -2.0 * l * l * dv;
        let uxxx = -2.0 * l.powi(4) * dddv;
        let ut = -2.0 * dl * v - 2.0 * l * dv * x * dl;
        worst = worst.max((ut + uxxx - 1.5 * u * u * ux).abs());
    }
    Ok(worst)
}

/// Test functions with closed-form delta and principal-value pairings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TestFunction {
    /// `e^{-x^2}`: value 1 at 0, zero principal value against `1/x`.
    Gaussian,
    /// `x sech^2 x`: value 0 at 0, principal value 2 against `1/x`.
    XSech2,
}

impl TestFunction {
    pub fn eval(&self, x: f64) -> f64 {
        match self {
            Self::Gaussian => (-x * x).exp(),
            Self::XSech2 => x / x.cosh().powi(2),
        }
    }

    fn support(&self) -> f64 {
        match self {
            Self::Gaussian => 7.0,
            Self::XSech2 => 20.0,
        }
    }

    /// `a phi(0) + b p.v. int phi(x)/x dx`.
    pub fn limit_pairing(&self, coeffs: InitialDataCoefficients) -> f64 {
        match self {
            Self::Gaussian => coeffs.a,
            Self::XSech2 => 2.0 * coeffs.b,
        }
    }
}

/// `int u(t, x) phi(x) dx`, computed in the similarity variable.
pub fn pairing(field: &SelfSimilarField, phi: TestFunction) -> Result<f64> {
    let l = field.lambda();
    let ymax = phi.support() * l;
    let (nodes, weights) = gl20();
    let mut total = 0.0;
    let mut a = -ymax;
    while a < ymax {
        let len = if a < -1.0 { (PI / (-a).sqrt()).min(2.0) } else { 2.0 };
        let b = (a + len).min(ymax);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        let mut s = 0.0;
        for (t, w) in nodes.iter().zip(weights) {
            let y = mid + half * t;
            s += w * field.solution.evaluate(y)?.0 * phi.eval(y / l);
        }
        total += half * s;
        a = b;
    }
    Ok(-2.0 * total)
}
