//! Numerical evaluation of `v(x; alpha, k)` on the real line.

use std::f64::consts::PI;

use crate::asymptotics::{v_neg_asym, v_pos_asym, OscillatoryModel};
use crate::error::{Error, Result};
use crate::ode::{integrate, DenseStep, Options, State};
use crate::specfun::airy_ai;
use crate::stokes::{make_params, reduce_angle, ASParams, ConnectionConstants};

/// `|v|` above which an integration is declared to have blown up.
pub const BLOWUP_LIMIT: f64 = 1e6;
pub const DEFAULT_TOL: f64 = 1e-10;

/// `v'' = x v + 2 v^3 - alpha`.
pub fn pii_rhs(x: f64, v: f64, alpha: f64) -> f64 {
    x * v + 2.0 * v * v * v - alpha
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LaunchSide {
    Left,
    Right,
}

/// Dense ODE output: accepted step end points with states, plus the
/// interpolating polynomial of every step.
#[derive(Debug, Clone)]
pub struct SolutionGrid {
    abscissas: Vec<f64>,
    states: Vec<State>,
    dense: Vec<DenseStep>,
    launch_point: f64,
    launch_side: LaunchSide,
    tolerance: f64,
    alpha: f64,
    warnings: Vec<String>,
}

impl SolutionGrid {
    pub fn abscissas(&self) -> &[f64] {
        &self.abscissas
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn launch_point(&self) -> f64 {
        self.launch_point
    }

    pub fn launch_side(&self) -> LaunchSide {
        self.launch_side
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn dense_steps(&self) -> &[DenseStep] {
        &self.dense
    }

    /// Covered interval `(lo, hi)` regardless of integration direction.
    pub fn range(&self) -> (f64, f64) {
        let a = self.abscissas[0];
        let b = *self.abscissas.last().unwrap();
        (a.min(b), a.max(b))
    }

    pub fn contains(&self, x: f64) -> bool {
        let (lo, hi) = self.range();
        x >= lo && x <= hi
    }

    fn segment(&self, x: f64) -> Result<&DenseStep> {
        if !self.contains(x) {
            let (lo, hi) = self.range();
            return Err(Error::WindowOutOfRange(format!("x = {x} outside grid [{lo}, {hi}]")));
        }
        let increasing = self.abscissas.len() < 2 || self.abscissas[1] > self.abscissas[0];
        let idx = if increasing {
            self.abscissas.partition_point(|&a| a <= x)
        } else {
            self.abscissas.partition_point(|&a| a >= x)
        };
        let i = idx.saturating_sub(1).min(self.dense.len() - 1);
        Ok(&self.dense[i])
    }

    /// Dense-output `(v, v')` at `x`.
    pub fn eval(&self, x: f64) -> Result<(f64, f64)> {
        let y = self.segment(x)?.eval(x);
        Ok((y[0], y[1]))
    }

    /// Dense-output `(v, v', v'')`, the last from differentiating the
    /// interpolant of `v'`.
    pub fn eval_with_second(&self, x: f64) -> Result<(f64, f64, f64)> {
        let (y, dy) = self.segment(x)?.eval_with_derivative(x);
        Ok((y[0], y[1], dy[1]))
    }
}

/// Local oscillation frequency used for the step cap.
fn frequency(x: f64, d: f64) -> f64 {
    if x >= -1.0 {
        return 3.0;
    }
    let s = -x;
    let w = s.sqrt() - 0.75 * d * d / s;
    w.max(0.5 * s.sqrt()).max(3.0)
}

fn step_cap(d: f64) -> impl Fn(f64) -> f64 {
    move |x| 2.0 * PI / (40.0 * frequency(x, d))
}

#[allow(clippy::too_many_arguments)]
fn run(
    alpha: f64,
    d: f64,
    x_start: f64,
    y0: State,
    x_end: f64,
    tol: f64,
    record_from: Option<f64>,
    side: LaunchSide,
) -> Result<SolutionGrid> {
    if !(tol > 0.0 && tol < 1e-2) {
        return Err(Error::Domain(format!("tolerance {tol} out of range")));
    }
    let dir = if x_end > x_start { 1.0 } else { -1.0 };
    let keep = |d: &DenseStep| match record_from {
        None => true,
        Some(xr) => (d.x1() - xr) * dir > 0.0,
    };
    let mut abscissas = Vec::new();
    let mut states = Vec::new();
    let mut dense = Vec::new();
    if record_from.is_none_or(|xr| (x_start - xr) * dir >= 0.0) {
        abscissas.push(x_start);
        states.push(y0);
    }
    let f = move |x: f64, y: &State| [y[1], pii_rhs(x, y[0], alpha)];
    integrate(f, x_start, y0, x_end, &Options::with_tol(tol), step_cap(d), |step, y_new| {
        if !(y_new[0].abs() <= BLOWUP_LIMIT) || !y_new[1].is_finite() {
            return Err(Error::Blowup { x: step.x1(), v: y_new[0].abs() });
        }
        if keep(step) {
            if abscissas.is_empty() {
                abscissas.push(step.x0);
                states.push(step.eval(step.x0));
            }
            abscissas.push(step.x1());
            states.push(*y_new);
            dense.push(*step);
        }
        Ok(())
    })?;
    Ok(SolutionGrid {
        abscissas,
        states,
        dense,
        launch_point: x_start,
        launch_side: side,
        tolerance: tol,
        alpha,
        warnings: Vec::new(),
    })
}

/// Launch from the oscillatory asymptotics at `x_start <= -20` and integrate
/// rightward to `x_end <= 6`.
pub fn solve_left_launch(p: &ASParams, x_start: f64, x_end: f64, tol: f64) -> Result<SolutionGrid> {
    solve_left_launch_windowed(p, x_start, None, x_end, tol)
}

/// As [`solve_left_launch`], storing dense output only to the right of
/// `record_from` (useful for very distant launches).
pub fn solve_left_launch_windowed(
    p: &ASParams,
    x_start: f64,
    record_from: Option<f64>,
    x_end: f64,
    tol: f64,
) -> Result<SolutionGrid> {
    if !(x_start <= -20.0) {
        return Err(Error::Domain(format!("left launch needs x_start <= -20, got {x_start}")));
    }
    if !(x_start < x_end && x_end <= 6.0) {
        return Err(Error::Domain(format!("left launch needs x_start < x_end <= 6, got {x_end}")));
    }
    let model = OscillatoryModel::for_params(p)?;
    let (v0, dv0) = v_neg_asym(x_start, p, &model.constants(), true)?;
    run(p.alpha(), model.d, x_start, [v0, dv0], x_end, tol, record_from, LaunchSide::Left)
}

/// Homogeneous (`alpha = 0`) solution seeded by `k Ai` at `x_start >= 8` and
/// integrated leftward.
pub fn solve_right_launch_homogeneous(k: f64, x_start: f64, x_end: f64, tol: f64) -> Result<SolutionGrid> {
    if !(k.abs() < 1.0) {
        return Err(Error::Domain(format!("right launch needs |k| < 1, got {k}")));
    }
    if !(x_start >= 8.0 && x_end < x_start) {
        return Err(Error::Domain(format!("right launch needs x_start >= 8 > x_end, got ({x_start}, {x_end})")));
    }
    let d = crate::stokes::amplitude(&make_params(0.0, k)?);
    let (ai, aip) = airy_ai(x_start);
    let mut grid = run(0.0, d, x_start, [k * ai, k * aip], x_end, tol, None, LaunchSide::Right)?;
    if k.abs() > 0.99 {
        grid.warnings.push(format!(
            "|k| = {} is close to the Hastings-McLeod boundary; accuracy of the backward solve is degraded",
            k.abs()
        ));
    }
    Ok(grid)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveConfig {
    /// Launch point of the ODE solve; `<= x_left`.
    pub x_launch: f64,
    /// Left end `-X` of the stored grid; the oscillatory model is used below it.
    pub x_left: f64,
    /// Right seam where the algebraic asymptotics take over.
    pub x_match: f64,
    pub tol: f64,
}

impl SolveConfig {
    /// Launch far to the left of the stored grid so the launch error reaching
    /// `x_match` is well below `1e-3`.
    pub fn far_launch() -> Self {
        Self { x_launch: -8000.0, tol: 1e-12, ..Self::default() }
    }
}

impl Default for SolveConfig {
    fn default() -> Self {
        Self { x_launch: -60.0, x_left: -60.0, x_match: 4.0, tol: DEFAULT_TOL }
    }
}

/// `v(x; alpha, k)` on the whole real line: oscillatory asymptotics left of
/// the grid, dense ODE output on `[x_left, x_match]`, algebraic asymptotics to
/// the right.
#[derive(Debug, Clone)]
pub struct AsSolution {
    params: ASParams,
    model: OscillatoryModel,
    grid: SolutionGrid,
    config: SolveConfig,
}

impl AsSolution {
    pub fn new(p: &ASParams) -> Result<Self> {
        Self::with_config(p, SolveConfig::default())
    }

    pub fn with_config(p: &ASParams, config: SolveConfig) -> Result<Self> {
        if !(config.x_match >= 1.0 && config.x_match <= 6.0) {
            return Err(Error::Domain(format!("x_match = {} must lie in [1, 6]", config.x_match)));
        }
        if !(config.x_launch <= config.x_left) {
            return Err(Error::Domain(format!(
                "x_launch = {} must not exceed x_left = {}",
                config.x_launch, config.x_left
            )));
        }
        let record = (config.x_launch < config.x_left).then_some(config.x_left);
        let grid = solve_left_launch_windowed(p, config.x_launch, record, config.x_match, config.tol)?;
        Ok(Self { params: *p, model: OscillatoryModel::for_params(p)?, grid, config })
    }

    pub fn params(&self) -> &ASParams {
        &self.params
    }

    pub fn model(&self) -> &OscillatoryModel {
        &self.model
    }

    pub fn grid(&self) -> &SolutionGrid {
        &self.grid
    }

    pub fn config(&self) -> &SolveConfig {
        &self.config
    }

    pub fn evaluate(&self, x: f64) -> Result<(f64, f64)> {
        if x.is_nan() {
            return Err(Error::NonFinite("evaluate_v input"));
        }
        if self.params.is_degenerate() {
            return Ok((0.0, 0.0));
        }
        if x < self.config.x_left {
            Ok(self.model.eval(x, true))
        } else if x > self.config.x_match {
            v_pos_asym(x, self.params.alpha())
        } else {
            self.grid.eval(x)
        }
    }

    /// Jumps `(left, right)` of `v` across the two seams.
    pub fn seam_jumps(&self) -> Result<(f64, f64)> {
        let xl = self.config.x_left;
        let xr = self.config.x_match;
        let left = (self.grid.eval(xl)?.0 - self.model.eval(xl, true).0).abs();
        let right = (self.grid.eval(xr)?.0 - v_pos_asym(xr, self.params.alpha())?.0).abs();
        Ok((left, right))
    }
}

/// `(v, v')` from a built solution.
pub fn evaluate_v(solution: &AsSolution, x: f64) -> Result<(f64, f64)> {
    solution.evaluate(x)
}

const FIT_C: f64 = 0.75;

fn oscillation_periods(s_lo: f64, s_hi: f64) -> f64 {
    2.0 / 3.0 * (s_hi.powf(1.5) - s_lo.powf(1.5)) / (2.0 * PI)
}

/// Least-squares fit of `d s^{-1/4} cos Psi(s) + alpha/x` to samples `(x, v)`
/// with `x <= -1`. Returns `(d, phi)` with `d >= 0`, `phi` in `(-pi, pi]`.
pub fn fit_oscillation_samples(samples: &[(f64, f64)], alpha: f64) -> Result<(f64, f64)> {
    if samples.len() < 16 {
        return Err(Error::Domain("fit needs at least 16 samples".into()));
    }
    let mut pts: Vec<(f64, f64)> = samples.iter().map(|&(x, v)| (-x, v - alpha / x)).collect();
    if pts.iter().any(|&(s, y)| !(s >= 1.0) || !y.is_finite()) {
        return Err(Error::Domain("fit samples must satisfy x <= -1".into()));
    }
    pts.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (s_lo, s_hi) = (pts[0].0, pts[pts.len() - 1].0);
    if oscillation_periods(s_lo, s_hi) < 3.0 {
        return Err(Error::Domain("fit window spans fewer than 3 oscillation periods".into()));
    }
    // initial amplitude from the envelope maximum
    let d0 = pts.iter().map(|&(s, y)| y.abs() * s.powf(0.25)).fold(0.0, f64::max);
    if d0 == 0.0 {
        return Ok((0.0, 0.0));
    }
    // initial phase from the first downward zero crossing
    let crossing = pts
        .windows(2)
        .find(|w| w[0].1 > 0.0 && w[1].1 <= 0.0)
        .map(|w| w[0].0 + (w[1].0 - w[0].0) * w[0].1 / (w[0].1 - w[1].1))
        .ok_or_else(|| Error::NonConvergence("no zero crossing in fit window".into()))?;
    let phi0 = PI / 2.0 - 2.0 / 3.0 * crossing.powf(1.5) + FIT_C * d0 * d0 * crossing.ln();

    let residuals = |d: f64, phi: f64| -> (f64, Vec<[f64; 3]>) {
        let mut cost = 0.0;
        let rows = pts
            .iter()
            .map(|&(s, y)| {
                let w = s.powf(-0.25);
                let ls = s.ln();
                let th = 2.0 / 3.0 * s.powf(1.5) - FIT_C * d * d * ls + phi;
                let (sn, cs) = th.sin_cos();
                let r = y - d * w * cs;
                cost += r * r;
                let jd = -w * (cs + 2.0 * FIT_C * d * d * ls * sn);
                let jp = d * w * sn;
                [r, jd, jp]
            })
            .collect();
        (cost, rows)
    };

    let (mut d, mut phi) = (d0, phi0);
    let (mut cost, mut rows) = residuals(d, phi);
    let mut mu = 1e-3;
    let mut converged = false;
    for _ in 0..500 {
        let (mut a11, mut a12, mut a22, mut g1, mut g2) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for [r, jd, jp] in &rows {
            a11 += jd * jd;
            a12 += jd * jp;
            a22 += jp * jp;
            g1 += jd * r;
            g2 += jp * r;
        }
        let b11 = a11 * (1.0 + mu);
        let b22 = a22 * (1.0 + mu);
        let det = b11 * b22 - a12 * a12;
        if det == 0.0 || !det.is_finite() {
            return Err(Error::NonConvergence("singular normal equations in oscillation fit".into()));
        }
        let dd = -(b22 * g1 - a12 * g2) / det;
        let dp = -(b11 * g2 - a12 * g1) / det;
        let (nd, np) = (d + dd, phi + dp);
        let (ncost, nrows) = residuals(nd, np);
        if ncost <= cost {
            d = nd;
            phi = np;
            let small = dd.abs() <= 1e-15 * d.abs().max(1e-3) && dp.abs() <= 1e-14;
            let flat = cost - ncost <= 1e-30 + 1e-16 * cost;
            cost = ncost;
            rows = nrows;
            mu = (mu / 3.0).max(1e-12);
            if small || (flat && mu <= 1e-9) {
                converged = true;
                break;
            }
        } else {
            mu *= 4.0;
            if mu > 1e12 {
                converged = true;
                break;
            }
        }
    }
    if !converged {
        return Err(Error::NonConvergence("oscillation fit did not converge".into()));
    }
    if d < 0.0 {
        d = -d;
        phi += PI;
    }
    Ok((d, reduce_angle(phi)))
}

/// Fit `(d, phi)` of the oscillatory model to a grid over `window`.
pub fn fit_oscillation(grid: &SolutionGrid, window: (f64, f64), alpha: f64) -> Result<(f64, f64)> {
    let (x_lo, x_hi) = window;
    if !(x_lo < x_hi && x_hi <= -1.0) {
        return Err(Error::Domain(format!("fit window ({x_lo}, {x_hi}) must lie in x <= -1")));
    }
    if !(grid.contains(x_lo) && grid.contains(x_hi)) {
        return Err(Error::WindowOutOfRange(format!("fit window ({x_lo}, {x_hi}) not covered by grid")));
    }
    let periods = oscillation_periods(-x_hi, -x_lo);
    let n = ((periods * 60.0) as usize).max(2000);
    let samples = (0..=n)
        .map(|i| {
            let x = x_lo + (x_hi - x_lo) * i as f64 / n as f64;
            grid.eval(x).map(|(v, _)| (x, v))
        })
        .collect::<Result<Vec<_>>>()?;
    fit_oscillation_samples(&samples, alpha)
}

/// Model value helper for callers that only hold constants.
pub fn oscillatory_value(x: f64, c: &ConnectionConstants, alpha: f64, include_alpha_term: bool) -> f64 {
    OscillatoryModel { d: c.d, phi: c.phi, alpha }.eval(x, include_alpha_term).0
}
