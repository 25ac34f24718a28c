//! Asymptotic expansions of `v(x; alpha, k)` as `x -> -inf` and `x -> +inf`,
//! and log-log slope fitting for remainder orders.

use crate::error::{Error, Result};
use crate::stokes::{connection_constants, ASParams, ConnectionConstants};

/// `Psi(s) = (2/3) s^{3/2} - (3/4) d^2 ln s + phi` and `dPsi/ds`.
pub fn psi_tilde(s: f64, c: &ConnectionConstants) -> (f64, f64) {
    let d2 = c.d * c.d;
    let value = 2.0 / 3.0 * s.powf(1.5) - 0.75 * d2 * s.ln() + c.phi;
    let derivative = s.sqrt() - 0.75 * d2 / s;
    (value, derivative)
}

/// Threshold `s0 = ((3/4) d^2)^{2/3}` beyond which `dPsi/ds > 0`.
pub fn psi_threshold(d: f64) -> f64 {
    (0.75 * d * d).powf(2.0 / 3.0)
}

/// Oscillatory model for `x -> -inf`; the zero model for degenerate params.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatoryModel {
    pub d: f64,
    pub phi: f64,
    pub alpha: f64,
}

impl OscillatoryModel {
    pub fn for_params(p: &ASParams) -> Result<Self> {
        if p.is_degenerate() {
            return Ok(Self { d: 0.0, phi: 0.0, alpha: 0.0 });
        }
        let c = connection_constants(p)?;
        Ok(Self { d: c.d, phi: c.phi, alpha: p.alpha() })
    }

    pub fn constants(&self) -> ConnectionConstants {
        ConnectionConstants { d: self.d, phi: self.phi }
    }

    /// `(v, dv/dx)` of `d s^{-1/4} cos Psi(s)` (+ `alpha/x`), `s = -x`.
    pub fn eval(&self, x: f64, include_alpha_term: bool) -> (f64, f64) {
        let s = -x;
        let (psi, dpsi) = psi_tilde(s, &self.constants());
        let amp = self.d * s.powf(-0.25);
        let (sn, cs) = psi.sin_cos();
        let mut v = amp * cs;
        // d/ds then chain rule dx = -ds
        let dv_ds = amp * (-0.25 / s * cs - sn * dpsi);
        let mut dv = -dv_ds;
        if include_alpha_term {
            v += self.alpha / x;
            dv -= self.alpha / (x * x);
        }
        (v, dv)
    }
}

/// Oscillatory asymptotics as `x -> -inf`; requires `x <= -1`.
pub fn v_neg_asym(x: f64, p: &ASParams, c: &ConnectionConstants, include_alpha_term: bool) -> Result<(f64, f64)> {
    if x > -1.0 || x.is_nan() {
        return Err(Error::Domain(format!("v_neg_asym needs x <= -1, got {x}")));
    }
    if p.is_degenerate() {
        return Ok((0.0, 0.0));
    }
    let m = OscillatoryModel { d: c.d, phi: c.phi, alpha: p.alpha() };
    Ok(m.eval(x, include_alpha_term))
}

/// Algebraic asymptotics as `x -> +inf`; requires `x >= 1`.
pub fn v_pos_asym(x: f64, alpha: f64) -> Result<(f64, f64)> {
    if x < 1.0 || x.is_nan() {
        return Err(Error::Domain(format!("v_pos_asym needs x >= 1, got {x}")));
    }
    let b = 2.0 * alpha * (1.0 - alpha * alpha);
    Ok((alpha / x + b / x.powi(4), -alpha / (x * x) - 4.0 * b / x.powi(5)))
}

/// Least-squares slope of `ln value` against `ln abscissa`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Result<f64> {
    if points.len() < 5 {
        return Err(Error::Domain(format!("loglog_slope needs >= 5 points, got {}", points.len())));
    }
    if points.iter().any(|&(x, y)| !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite())) {
        return Err(Error::Domain("loglog_slope needs positive finite data".into()));
    }
    let n = points.len() as f64;
    let lx: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ly: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    if sxx <= 1e-24 * (1.0 + mx * mx) * n {
        return Err(Error::Degenerate("loglog_slope abscissas coincide".into()));
    }
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    Ok(sxy / sxx)
}

/// Per-bin maxima of `|residual(s)|` over `nbins` logarithmic bins of
/// `[s_lo, s_hi]`, tagged with the geometric bin centre.
pub fn envelope_maxima<F>(s_lo: f64, s_hi: f64, nbins: usize, per_bin: usize, mut residual: F) -> Result<Vec<(f64, f64)>>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(0.0 < s_lo && s_lo < s_hi) || nbins == 0 || per_bin < 2 {
        return Err(Error::Domain(format!("bad envelope request on [{s_lo}, {s_hi}]")));
    }
    let (l0, l1) = (s_lo.ln(), s_hi.ln());
    let edge = |b: usize| (l0 + (l1 - l0) * b as f64 / nbins as f64).exp();
    let mut out = Vec::with_capacity(nbins);
    for b in 0..nbins {
        let (a, z) = (edge(b), edge(b + 1));
        let mut m: f64 = 0.0;
        for i in 0..per_bin {
            let s = a + (z - a) * i as f64 / (per_bin - 1) as f64;
            m = m.max(residual(s)?.abs());
        }
        out.push(((a * z).sqrt(), m));
    }
    Ok(out)
}
