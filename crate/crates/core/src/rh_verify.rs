//! Numerical checks of the computable Riemann-Hilbert identities: phase maps,
//! `N`, `beta`, `E11`, the contour identities at the origin and the stationary
//! points, and the parabolic-cylinder parametrix near `z = 1/2`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::Matrix2;
use crate::specfun::{pcf_d, rgamma};
use crate::stokes::{connection_constants, h_constants, rh_constants, stokes_triple, ASParams};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `(4 sqrt 3 / 3) e^{3 pi i / 4}`.
fn zeta_prefactor() -> Complex64 {
    Complex64::from_polar(4.0 * 3f64.sqrt() / 3.0, 0.75 * PI)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseMaps {
    pub theta_tilde: Complex64,
    pub eta: Complex64,
    pub zeta: Complex64,
}

fn on_sqrt_cut(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= -1.0
}

pub fn theta_tilde(z: Complex64) -> Complex64 {
    I * (4.0 * z * z * z / 3.0 - z)
}

pub fn eta(z: Complex64) -> Complex64 {
    z - 4.0 * z * z * z / 3.0
}

/// `zeta(z) = (4 sqrt 3/3) e^{3 pi i/4} (z - 1/2)(z + 1)^{1/2}`, principal root.
pub fn zeta(z: Complex64) -> Result<Complex64> {
    if on_sqrt_cut(z) {
        return Err(Error::BranchCut(format!("zeta: z = {z} lies on the cut of (z+1)^(1/2)")));
    }
    Ok(zeta_prefactor() * (z - 0.5) * (z + 1.0).sqrt())
}

pub fn phase_maps(z: Complex64) -> Result<PhaseMaps> {
    Ok(PhaseMaps { theta_tilde: theta_tilde(z), eta: eta(z), zeta: zeta(z)? })
}

fn on_segment(z: Complex64) -> bool {
    z.im == 0.0 && z.re.abs() <= 0.5
}

/// `ln((z + 1/2)/(z - 1/2))` with `arg(z +- 1/2)` in `(-pi, pi)`.
fn log_w(z: Complex64) -> Result<Complex64> {
    if on_segment(z) {
        return Err(Error::BranchCut(format!("z = {z} lies on [-1/2, 1/2]")));
    }
    Ok((z + 0.5).ln() - (z - 0.5).ln())
}

/// `N(z) = diag(w^nu, w^-nu)`, `w = (z + 1/2)/(z - 1/2)`.
pub fn n_matrix(z: Complex64, nu: Complex64) -> Result<Matrix2> {
    let e = (nu * log_w(z)?).exp();
    Ok(Matrix2::diag(e, e.inv()))
}

/// `beta(z) = (sqrt(t) zeta(z) (z + 1/2)/(z - 1/2))^nu`.
///
/// The base is formed as `sqrt(t) (4 sqrt 3/3) e^{3 pi i/4} (z+1)^{1/2} (z+1/2)`
/// so that it stays analytic through `z = 1/2`; the logarithm is principal.
pub fn beta_fn(z: Complex64, t: f64, nu: Complex64) -> Result<Complex64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("beta needs t > 0, got {t}")));
    }
    if on_sqrt_cut(z) {
        return Err(Error::BranchCut(format!("beta: z = {z} lies on the cut of (z+1)^(1/2)")));
    }
    let base = t.sqrt() * zeta_prefactor() * (z + 1.0).sqrt() * (z + 0.5);
    if base.norm() == 0.0 {
        return Err(Error::BranchCut("beta: base vanishes at z = -1/2".into()));
    }
    if base.im == 0.0 && base.re < 0.0 {
        return Err(Error::BranchCut(format!("beta: base {base} on the negative axis")));
    }
    Ok((nu * base.ln()).exp())
}

/// `E11(z) = ((z + 1/2)/(1/2 - z))^nu` with `arg(1/2 +- z)` in `(-pi, pi)`.
pub fn e11(z: Complex64, nu: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re.abs() >= 0.5 {
        return Err(Error::BranchCut(format!("E11: z = {z} lies on a cut")));
    }
    Ok((nu * ((z + 0.5).ln() - (0.5 - z).ln())).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContourCircle {
    pub center: Complex64,
    pub radius: f64,
    pub orientation: Orientation,
    pub n_nodes: usize,
}

const MIN_NODES: usize = 64;
const MAX_NODES: usize = 1 << 16;
const QUAD_TOL: f64 = 1e-10;

impl ContourCircle {
    pub fn new(center: Complex64, radius: f64, orientation: Orientation) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!("radius must be positive, got {radius}")));
        }
        Ok(Self { center, radius, orientation, n_nodes: MIN_NODES })
    }

    pub fn clockwise(center: Complex64, radius: f64) -> Result<Self> {
        Self::new(center, radius, Orientation::Clockwise)
    }

    fn trapezoid<F>(&self, n: usize, f: &F) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Result<Complex64>,
    {
        let sign = match self.orientation {
            Orientation::Counterclockwise => 1.0,
            Orientation::Clockwise => -1.0,
        };
        let mut sum = ZERO;
        for j in 0..n {
            let th = sign * 2.0 * PI * (j as f64 + 0.5) / n as f64;
            let e = Complex64::from_polar(1.0, th);
            sum += f(self.center + self.radius * e)? * e;
        }
        Ok(sum * I * sign * self.radius * 2.0 * PI / n as f64)
    }

    /// Periodic trapezoid rule, doubling the node count until successive
    /// values differ by less than `1e-10`.
    pub fn integrate<F>(&self, f: F) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Result<Complex64>,
    {
        let mut n = self.n_nodes.max(MIN_NODES);
        let mut prev = self.trapezoid(n, &f)?;
        while n < MAX_NODES {
            n *= 2;
            let next = self.trapezoid(n, &f)?;
            if (next - prev).norm() < QUAD_TOL {
                return Ok(next);
            }
            prev = next;
        }
        Err(Error::NonConvergence(format!("contour quadrature did not settle with {n} nodes")))
    }
}

/// `int_{C0} E11(z)^2 / eta(z) dz` over a clockwise circle about the origin;
/// the expected value is `-2 pi i`.
pub fn residue_check_origin(circle: &ContourCircle, nu: Complex64) -> Result<Complex64> {
    if circle.center.norm() != 0.0 || circle.radius >= 0.25 {
        return Err(Error::Domain("origin circle must be centred at 0 with radius < 1/4".into()));
    }
    circle.integrate(|z| Ok(e11(z, nu)?.powi(2) / eta(z)))
}

/// Both sides of the stationary-point contour identity.
pub fn stationary_identity(
    p: &ASParams,
    t: f64,
    circles: (&ContourCircle, &ContourCircle),
) -> Result<(Complex64, Complex64)> {
    let (cp, cm) = circles;
    for (circ, z0) in [(cp, 0.5), (cm, -0.5)] {
        if (circ.center - z0).norm() > 1e-15 || circ.radius > 0.2 {
            return Err(Error::Domain(format!("stationary circle must be centred at {z0} with radius <= 0.2")));
        }
    }
    if !(t > 0.0) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    if p.is_degenerate() {
        return Ok((ZERO, ZERO));
    }
    let rh = rh_constants(p);
    let s3 = stokes_triple(p).s3;
    let nu = rh.nu;
    let ip = cp.integrate(|z| Ok(beta_fn(z, t, nu)?.powi(2) / zeta(z)?))?;
    let im = cm.integrate(|z| Ok(beta_fn(-z, t, nu)?.powi(-2) / zeta(-z)?))?;
    let st = t.sqrt();
    let e = (I * 2.0 * t / 3.0).exp();
    let lhs = -(nu * s3 / rh.h1) * e * ip / st + (rh.h1 / s3) * e.inv() * im / st;
    let cc = connection_constants(p)?;
    let phase = 2.0 * t / 3.0 - 0.75 * cc.d * cc.d * (t.powf(2.0 / 3.0)).ln() + cc.phi;
    let rhs = c(0.0, -PI * cc.d / st) * phase.cos();
    Ok((lhs, rhs))
}

/// `[H0, H1, H2, H3]`.
pub fn h_matrices(nu: Complex64) -> [Matrix2; 4] {
    let (h0, h1) = h_constants(nu);
    let e = (2.0 * PI * I * nu).exp();
    [Matrix2::lower(h0), Matrix2::upper(h1), Matrix2::lower(-h0 / e), Matrix2::upper(-h1 * e)]
}

/// `arg w` taken in `[-pi/4, 7pi/4)`.
fn sector_arg(w: Complex64) -> f64 {
    let a = w.arg();
    if a < -0.25 * PI {
        a + 2.0 * PI
    } else {
        a
    }
}

/// Index `j` of the open sector containing `w`.
pub fn sector_of(w: Complex64) -> Result<usize> {
    if w.norm() == 0.0 {
        return Err(Error::SectorBoundary("w = 0".into()));
    }
    let a = sector_arg(w);
    let rays = [-0.25 * PI, 0.0, 0.5 * PI, PI, 1.5 * PI];
    if rays.contains(&a) {
        return Err(Error::SectorBoundary(format!("arg w = {a} lies on a sector ray")));
    }
    Ok(if a < 0.0 { 0 } else { 1 + (a / (0.5 * PI)) as usize })
}

/// `Z0(w)` exactly as defined, valid for any `w` (no sector logic).
pub fn z0_matrix(nu: Complex64, w: Complex64) -> Result<Matrix2> {
    let (f, fp) = pcf_d(-nu - 1.0, I * w)?;
    let (g, gp) = pcf_d(nu, w)?;
    let m = Matrix2::from_columns([f, I * fp], [g, gp]);
    let r2 = 2f64.sqrt();
    Ok(Matrix2::diag(c(1.0 / r2, 0.0), c(r2, 0.0)) * m * Matrix2::diag((I * PI / 2.0 * (nu + 1.0)).exp(), ONE))
}

/// `Z_j = Z0 H0 ... H_{j-1}` by literal multiplication.
pub fn z_sector_matrix(nu: Complex64, w: Complex64, j: usize) -> Result<Matrix2> {
    if j > 4 {
        return Err(Error::Domain(format!("sector index {j} > 4")));
    }
    let hs = h_matrices(nu);
    let mut z = z0_matrix(nu, w)?;
    for h in hs.iter().take(j) {
        z = z * *h;
    }
    Ok(z)
}

/// Sectionally holomorphic `Z(w)`. Each column is written as a single
/// parabolic-cylinder solution (or a dominant-plus-recessive pair) so that
/// no exponentially large cancellation occurs for large `|w|`.
pub fn z_parametrix(nu: Complex64, w: Complex64) -> Result<Matrix2> {
    let j = sector_of(w)?;
    let col_f = |arg: Complex64, sign: Complex64| -> Result<[Complex64; 2]> {
        let (f, fp) = pcf_d(-nu - 1.0, arg)?;
        Ok([f, sign * fp])
    };
    let a = || -> Result<[Complex64; 2]> {
        let e = (I * PI / 2.0 * (nu + 1.0)).exp();
        let [f, fp] = col_f(I * w, I)?;
        Ok([e * f, e * fp])
    };
    let b = || -> Result<[Complex64; 2]> {
        let e = (-I * PI / 2.0 * (nu + 1.0)).exp();
        let [f, fp] = col_f(-I * w, -I)?;
        Ok([e * f, e * fp])
    };
    let cc = || -> Result<[Complex64; 2]> {
        let e = I * (-1.5 * I * PI * nu).exp();
        let [f, fp] = col_f(I * w, I)?;
        Ok([e * f, e * fp])
    };
    let p = || -> Result<[Complex64; 2]> {
        let (g, gp) = pcf_d(nu, w)?;
        Ok([g, gp])
    };
    let q = || -> Result<[Complex64; 2]> {
        let e = (I * PI * nu).exp();
        let (g, gp) = pcf_d(nu, -w)?;
        Ok([e * g, -e * gp])
    };
    let r = || -> Result<[Complex64; 2]> {
        let [q0, q1] = q()?;
        let k = I * (2.0 * PI).sqrt() * rgamma(-nu) * (1.5 * I * PI * nu).exp();
        let [f, fp] = col_f(I * w, I)?;
        Ok([q0 - k * f, q1 - k * fp])
    };
    let (c1, c2) = match j {
        0 => (a()?, p()?),
        1 => (b()?, p()?),
        2 => (b()?, q()?),
        3 => (cc()?, q()?),
        _ => (cc()?, r()?),
    };
    let r2 = 2f64.sqrt();
    Ok(Matrix2::diag(c(1.0 / r2, 0.0), c(r2, 0.0)) * Matrix2::from_columns(c1, c2))
}

/// `ln w` with `arg w` in `[-pi/4, 7pi/4)`.
fn sector_log(w: Complex64) -> Complex64 {
    c(w.norm().ln(), sector_arg(w))
}

/// Two-term large-`|w|` expansion
/// `w^{-sigma3/2}/sqrt 2 (M0 + M2/w^2) e^{(w^2/4 - (nu + 1/2) ln w) sigma3}`.
pub fn z_asymptotic(nu: Complex64, w: Complex64) -> Result<Matrix2> {
    sector_of(w)?;
    let lw = sector_log(w);
    let w2 = w * w;
    let m = Matrix2::new(
        ONE + (nu + 1.0) * (nu + 2.0) / (2.0 * w2),
        ONE - nu * (nu - 1.0) / (2.0 * w2),
        ONE + (nu + 1.0) * (nu - 2.0) / (2.0 * w2),
        -ONE + nu * (nu + 3.0) / (2.0 * w2),
    );
    let half = (-0.5 * lw).exp();
    let ex = (w2 / 4.0 - (nu + 0.5) * lw).exp();
    Ok(Matrix2::diag(half, half.inv()) * m.scale(c(1.0 / 2f64.sqrt(), 0.0)) * Matrix2::diag(ex, ex.inv()))
}

struct LocalData {
    nu: Complex64,
    ratio: Complex64,
    s3: Complex64,
    h1: Complex64,
}

fn local_data(p: &ASParams) -> Result<LocalData> {
    if p.is_degenerate() {
        return Err(Error::Degenerate("parametrix undefined for (alpha, k) = (0, 0)".into()));
    }
    let rh = rh_constants(p);
    let s3 = stokes_triple(p).s3;
    Ok(LocalData { nu: rh.nu, ratio: -rh.h1 / s3, s3, h1: rh.h1 })
}

fn check_t(t: f64) -> Result<()> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    Ok(())
}

/// Local parametrix near `z = 1/2`:
/// `beta^s3 c^{-s3/2} e^{it s3/3} 2^{-s3/2} [[xi, 1], [1, 0]] Z(xi) e^{t theta s3} c^{s3/2}`
/// with `xi = sqrt(t) zeta(z)` and `c = -h1/s3`.
pub fn t_right_parametrix(p: &ASParams, t: f64, z: Complex64) -> Result<Matrix2> {
    check_t(t)?;
    let ld = local_data(p)?;
    let xi = t.sqrt() * zeta(z)?;
    let beta = beta_fn(z, t, ld.nu)?;
    let cr = ld.ratio.sqrt();
    let ph = (I * t / 3.0).exp();
    let r2 = 2f64.sqrt();
    let left = Matrix2::diag(beta / cr * ph / r2, cr / (beta * ph) * r2);
    let pre = Matrix2::new(xi, ONE, ONE, ZERO);
    let th = (t * theta_tilde(z)).exp();
    let right = Matrix2::diag(th * cr, 1.0 / (th * cr));
    let out = left * pre * z_parametrix(ld.nu, xi)? * right;
    if !out.is_finite() {
        return Err(Error::NonFinite("t_right_parametrix"));
    }
    Ok(out)
}

/// `T^(l)(z) = sigma2 T^(r)(-z) sigma2`.
pub fn t_left_parametrix(p: &ASParams, t: f64, z: Complex64) -> Result<Matrix2> {
    Ok(Matrix2::SIGMA2 * t_right_parametrix(p, t, -z)? * Matrix2::SIGMA2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Right,
    Left,
}

/// `I + t^{-1/2} F + t^{-1} G` for the requested stationary point.
pub fn m_pred(p: &ASParams, t: f64, z: Complex64, side: Side) -> Result<Matrix2> {
    check_t(t)?;
    if p.is_degenerate() {
        return Ok(Matrix2::IDENTITY);
    }
    let ld = local_data(p)?;
    let zz = match side {
        Side::Right => z,
        Side::Left => -z,
    };
    let zt = zeta(zz)?;
    if zt.norm() == 0.0 {
        return Err(Error::Domain("zeta vanishes at the stationary point".into()));
    }
    let nu = ld.nu;
    let beta = beta_fn(zz, t, nu)?;
    let e = (2.0 * I * t / 3.0).exp();
    let xi = t.sqrt() * zt;
    let right = Matrix2::new(
        ONE + nu * (nu + 1.0) / (2.0 * xi * xi),
        -nu * ld.s3 / ld.h1 * e * beta * beta / xi,
        -ld.h1 / ld.s3 / e / (beta * beta * xi),
        ONE - nu * (nu - 1.0) / (2.0 * xi * xi),
    );
    Ok(match side {
        Side::Right => right,
        Side::Left => Matrix2::SIGMA2 * right * Matrix2::SIGMA2,
    })
}

/// `max_j || T^(r)(z_j) N(z_j)^{-1} - M_pred(z_j) ||_F` over the given points.
pub fn parametrix_defect(p: &ASParams, t: f64, points: &[Complex64]) -> Result<f64> {
    let nu = rh_constants(p).nu;
    let mut worst: f64 = 0.0;
    for &z in points {
        let ninv = n_matrix(z, nu)?.inv().ok_or(Error::NonFinite("N inverse"))?;
        let d = t_right_parametrix(p, t, z)? * ninv - m_pred(p, t, z, Side::Right)?;
        worst = worst.max(d.frobenius());
    }
    Ok(worst)
}

/// `n` points on `|z - 1/2| = radius` at angles `(2j+1) pi / n`, away from
/// the images of the sector rays when `n` is a multiple of 8.
pub fn stationary_circle_points(radius: f64, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|j| c(0.5, 0.0) + Complex64::from_polar(radius, (2 * j + 1) as f64 * PI / n as f64))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stokes::make_params;

    #[test]
    fn phase_map_examples() {
        assert!((theta_tilde(c(0.5, 0.0)) - c(0.0, -1.0 / 3.0)).norm() < 1e-15);
        let z = c(0.7, 0.1);
        let m = phase_maps(z).unwrap();
        let r = m.zeta * m.zeta + 4.0 * (m.theta_tilde - theta_tilde(c(0.5, 0.0)));
        assert!(r.norm() < 1e-14);
        assert_eq!(eta(ZERO), ZERO);
        assert!(zeta(c(-2.0, 0.0)).is_err());
    }

    #[test]
    fn n_matrix_examples() {
        let nu = c(0.0, -0.0457859);
        let n = n_matrix(I, nu).unwrap();
        assert!((n.0[0][0] - c(0.958429, 0.0)).norm() < 1e-5);
        assert!((n.0[1][1] - c(1.043374, 0.0)).norm() < 1e-5);
        assert!((n.det() - ONE).norm() < 1e-15);
        assert_eq!(n_matrix(c(2.0, 1.0), ZERO).unwrap(), Matrix2::IDENTITY);
        assert!(n_matrix(c(0.2, 0.0), nu).is_err());
        let far = n_matrix(c(1e3, 0.0), nu).unwrap() - Matrix2::IDENTITY;
        assert!(far.frobenius() <= 2.0 * nu.norm() / 1e3);
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_fn(c(0.6, 0.1), 50.0, ZERO).unwrap(), ONE);
        let nu = c(0.0, -0.3);
        for z in stationary_circle_points(0.15, 16) {
            let b = beta_fn(z, 50.0, nu).unwrap().norm();
            assert!(b.is_finite() && b > 0.1 && b < 10.0);
        }
    }

    #[test]
    fn origin_residue_trivial_nu() {
        let circle = ContourCircle::clockwise(ZERO, 0.1).unwrap();
        let v = residue_check_origin(&circle, ZERO).unwrap();
        assert!((v + 2.0 * PI * I).norm() < 1e-12);
        let bad = ContourCircle::clockwise(ZERO, 0.3).unwrap();
        assert!(residue_check_origin(&bad, ZERO).is_err());
    }

    #[test]
    fn stationary_degenerate_is_zero() {
        let p = make_params(0.0, 0.0).unwrap();
        let cp = ContourCircle::clockwise(c(0.5, 0.0), 0.15).unwrap();
        let cm = ContourCircle::clockwise(c(-0.5, 0.0), 0.15).unwrap();
        assert_eq!(stationary_identity(&p, 30.0, (&cp, &cm)).unwrap(), (ZERO, ZERO));
    }

    #[test]
    fn z_seams_and_closed_forms() {
        let nu = c(0.0, -0.0457860238696);
        let hs = h_matrices(nu);
        for h in hs {
            assert!((h.det() - ONE).norm() < 1e-15);
        }
        for j in 0..4 {
            let w = Complex64::from_polar(1.3, j as f64 * 0.5 * PI + 1e-3);
            let lit = z_sector_matrix(nu, w, j + 1).unwrap();
            assert!((lit - z_parametrix(nu, w).unwrap()).frobenius() < 1e-12);
        }
        let w = Complex64::from_polar(1.3, -0.1);
        assert!((z_parametrix(nu, w).unwrap() - z0_matrix(nu, w).unwrap()).frobenius() < 1e-14);
        assert!(z_parametrix(nu, c(0.0, 2.0)).is_err());
    }

    #[test]
    fn m_pred_trace_and_degenerate() {
        let p = make_params(0.0, 0.5).unwrap();
        let z = c(0.6, 0.1);
        let t = 40.0;
        let m = m_pred(&p, t, z, Side::Right).unwrap();
        let nu = rh_constants(&p).nu;
        let zt = zeta(z).unwrap();
        let tr = m.0[0][0] + m.0[1][1];
        assert!((tr - (2.0 + nu / (t * zt * zt))).norm() < 1e-14);
        let deg = make_params(0.0, 0.0).unwrap();
        assert_eq!(m_pred(&deg, t, z, Side::Left).unwrap(), Matrix2::IDENTITY);
    }

    #[test]
    fn parametrix_leading_agreement() {
        let pts = stationary_circle_points(0.15, 16);
        for (a, k) in [(0.0, 0.5), (0.25, 0.3)] {
            let p = make_params(a, k).unwrap();
            assert!(parametrix_defect(&p, 100.0, &pts).unwrap() < 1e-2);
        }
    }
}
