use std::f64::consts::PI;
use std::time::Instant;

use painleve::asymptotics::{loglog_slope, v_pos_asym};
use painleve::integrals::{pv_total_integral, total_integral_formula, v_hat, TailPolicy};
use painleve::matrix::Matrix2;
use painleve::mkdv::{ab_to_params, pde_residual_closure, pde_residual_fd, u_hat, u_hat_limit, InitialDataCoefficients, SelfSimilarField};
use painleve::pii::{fit_oscillation, solve_right_launch_homogeneous, AsSolution};
use painleve::rh_verify::{
    parametrix_defect, residue_check_origin, stationary_circle_points, stationary_identity, t_left_parametrix,
    t_right_parametrix, ContourCircle,
};
use painleve::specfun::internals::{ai_continued_from_asymptotic, ai_maclaurin};
use painleve::specfun::{gamma, pcf_d};
use painleve::stokes::{connection_constants, make_params, reduce_angle, rh_constants, stokes_triple, ASParams};
use painleve::{Complex64, Result};
use rayon::prelude::*;

use crate::config::{ParamSpec, RunConfig};
use crate::report::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Connection,
    TotalIntegral,
    FourierLimit,
    Pde,
    RhChecks,
    Specfun,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Connection, Suite::TotalIntegral, Suite::FourierLimit, Suite::Pde, Suite::RhChecks, Suite::Specfun];
}

type Job<'a> = Box<dyn Fn() -> Result<Vec<CheckReport>> + Send + Sync + 'a>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tag(p: &ASParams) -> String {
    format!("alpha={},k={}", p.alpha(), p.k())
}

fn default_matrix() -> Vec<ASParams> {
    [(0.0, 0.3), (0.0, 0.5), (0.25, 0.3), (-0.3, -0.4), (0.4, 0.5 * (0.4 * PI).cos())]
        .into_iter()
        .map(|(a, k)| make_params(a, k).expect("valid default parameters"))
        .collect()
}

fn chosen_or(cfg: &RunConfig, defaults: Vec<ASParams>) -> Vec<ASParams> {
    match cfg.params {
        Some(spec) => vec![spec.params()],
        None => defaults,
    }
}

fn solve(cfg: &RunConfig, p: &ASParams) -> Result<AsSolution> {
    AsSolution::with_config(p, cfg.solve)
}

fn connection_jobs(cfg: &RunConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job> = Vec::new();
    for p in chosen_or(cfg, default_matrix()) {
        jobs.push(Box::new(move || {
            let t = Instant::now();
            let sol = solve(cfg, &p)?;
            let xm = cfg.solve.x_match;
            let lhs = sol.grid().eval(xm)?.0;
            let rhs = v_pos_asym(xm, p.alpha())?.0;
            let id = format!("connection.round_trip[{},x_launch={}]", tag(&p), cfg.solve.x_launch);
            Ok(vec![CheckReport::close(id, lhs, rhs, 5e-3, t)])
        }));
        if p.alpha() == 0.0 && !p.is_degenerate() {
            jobs.push(Box::new(move || {
                let t = Instant::now();
                let cc = connection_constants(&p)?;
                let grid = solve_right_launch_homogeneous(p.k(), 12.0, -60.0, cfg.solve.tol)?;
                let (d, phi) = fit_oscillation(&grid, (-60.0, -30.0), 0.0)?;
                let id = tag(&p);
                let dphi = reduce_angle(phi - cc.phi);
                Ok(vec![
                    CheckReport::close(format!("connection.homogeneous_d[{id}]"), d, cc.d, 1e-2, t),
                    CheckReport::close(format!("connection.homogeneous_phi[{id}]"), cc.phi + dphi, cc.phi, 5e-2, t),
                ])
            }));
        }
    }
    jobs
}

fn total_integral_jobs(cfg: &RunConfig) -> Vec<Job<'_>> {
    let mut defaults = default_matrix();
    defaults.push(make_params(0.3, 0.0).unwrap());
    chosen_or(cfg, defaults)
        .into_iter()
        .map(|p| -> Job {
            Box::new(move || {
                let t = Instant::now();
                let sol = solve(cfg, &p)?;
                let est = pv_total_integral(&sol, &TailPolicy::new(cfg.cutoff, 2)?)?;
                let id = format!("total_integral[{},X={}]", tag(&p), cfg.cutoff);
                Ok(vec![CheckReport::close(id, est.value, total_integral_formula(&p), 1e-3, t)])
            })
        })
        .collect()
}

fn fourier_jobs(cfg: &RunConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job> = Vec::new();
    let (vparams, coeffs) = match cfg.params {
        Some(ParamSpec::AlphaK(p)) => (vec![p], None),
        Some(ParamSpec::Coefficients(co, p)) => (vec![p], Some(co)),
        None => (vec![make_params(0.25, 0.3).unwrap()], Some(InitialDataCoefficients { a: 1.0, b: 0.5 })),
    };
    for p in vparams {
        jobs.push(Box::new(move || {
            let sol = solve(cfg, &p)?;
            let cval = total_integral_formula(&p);
            let policy = TailPolicy::new(cfg.cutoff, 2)?;
            let mut out = Vec::new();
            for xi in [1e-3, -1e-3] {
                let t = Instant::now();
                let v = v_hat(&sol, xi, &policy)?.value;
                let id = format!("fourier.v_hat_limit[{},xi={xi}]", tag(&p));
                out.push(CheckReport::close_complex(id, v, c(cval, -xi.signum() * PI * p.alpha()), 1e-2, t));
            }
            Ok(out)
        }));
    }
    if let Some(co) = coeffs {
        jobs.push(Box::new(move || {
            let t0 = Instant::now();
            let p = ab_to_params(co)?;
            let sol = solve(cfg, &p)?;
            let policy = TailPolicy::new(cfg.cutoff, 2)?;
            let id = format!("a={},b={}", co.a, co.b);
            let mut errs = Vec::new();
            let mut out = Vec::new();
            for time in [1e-2, 1e-4, 1e-6] {
                let field = SelfSimilarField::new(&sol, time)?;
                let mut worst: (f64, Complex64, Complex64) = (-1.0, c(0.0, 0.0), c(0.0, 0.0));
                for xi in [1.0, -1.0] {
                    let t = Instant::now();
                    let u = u_hat(&field, xi, &policy)?;
                    let lim = u_hat_limit(co, xi);
                    if (u - lim).norm() > worst.0 {
                        worst = ((u - lim).norm(), u, lim);
                    }
                    if time == 1e-6 {
                        out.push(CheckReport::close_complex(format!("fourier.u_hat_limit[{id},t={time},xi={xi}]"), u, lim, 5e-2, t));
                    }
                }
                errs.push(worst.0);
            }
            let increases = errs.windows(2).filter(|w| w[1] > w[0]).count() as f64;
            out.push(CheckReport::close(format!("fourier.u_hat_monotone[{id}]"), increases, 0.0, 0.0, t0));
            Ok(out)
        }));
    }
    jobs
}

fn pde_jobs(cfg: &RunConfig) -> Vec<Job<'_>> {
    chosen_or(cfg, vec![make_params(0.0, 0.5).unwrap()])
        .into_iter()
        .map(|p| -> Job {
            Box::new(move || {
                let t = Instant::now();
                let sol = solve(cfg, &p)?;
                let field = SelfSimilarField::new(&sol, 1.0)?;
                let w = (-3.0, 3.0);
                let r1 = pde_residual_fd(&field, w, 0.05)?;
                let r2 = pde_residual_fd(&field, w, 0.025)?;
                let ratio = if p.is_degenerate() { 4.0 } else { r1 / r2 };
                let closure = pde_residual_closure(&field, w)?;
                Ok(vec![
                    CheckReport::close(format!("pde.fd_order[{}]", tag(&p)), ratio, 4.0, 0.5, t),
                    CheckReport::close(format!("pde.closure[{}]", tag(&p)), closure, 0.0, 1e-9, t),
                ])
            })
        })
        .collect()
}

fn rh_jobs(cfg: &RunConfig) -> Vec<Job<'_>> {
    let mut defaults = default_matrix();
    defaults.push(make_params(0.3, 0.0).unwrap());
    let residue_params = chosen_or(cfg, defaults);
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(move || {
        let mut out = Vec::new();
        for p in &residue_params {
            let nu = rh_constants(p).nu;
            for r in [0.05, 0.1, 0.2] {
                let t = Instant::now();
                let v = residue_check_origin(&ContourCircle::clockwise(c(0.0, 0.0), r)?, nu)?;
                out.push(CheckReport::close_complex(format!("rh.origin_residue[{},r={r}]", tag(p)), v, c(0.0, -2.0 * PI), 1e-8, t));
            }
        }
        Ok(out)
    }));
    for p in chosen_or(cfg, vec![make_params(0.0, 0.5).unwrap(), make_params(0.25, 0.3).unwrap()]) {
        jobs.push(Box::new(move || {
            let cp = ContourCircle::clockwise(c(0.5, 0.0), 0.15)?;
            let cm = ContourCircle::clockwise(c(-0.5, 0.0), 0.15)?;
            let mut out = Vec::new();
            for time in [20.0, 50.0, 100.0] {
                let t = Instant::now();
                let (l, r) = stationary_identity(&p, time, (&cp, &cm))?;
                out.push(CheckReport::close_complex(format!("rh.stationary[{},t={time}]", tag(&p)), l, r, 1e-6, t));
            }
            if p.is_degenerate() {
                return Ok(out);
            }
            let t = Instant::now();
            let pts = stationary_circle_points(0.15, 16);
            let mut data = Vec::new();
            for i in 0..9 {
                let time = 10f64.powf(1.0 + i as f64 / 4.0);
                data.push((time, parametrix_defect(&p, time, &pts)?));
            }
            out.push(CheckReport::at_most(format!("rh.parametrix_decay_slope[{}]", tag(&p)), loglog_slope(&data)?, -1.4, t));
            let t = Instant::now();
            let mut sym: f64 = 0.0;
            for z in &pts {
                let left = t_left_parametrix(&p, 100.0, -*z)?;
                let right = t_right_parametrix(&p, 100.0, *z)?;
                sym = sym.max((left - Matrix2::SIGMA2 * right * Matrix2::SIGMA2).frobenius() / left.frobenius());
            }
            out.push(CheckReport::close(format!("rh.sigma2_symmetry[{}]", tag(&p)), sym, 0.0, 1e-14, t));
            Ok(out)
        }));
    }
    jobs
}

fn specfun_jobs(_cfg: &RunConfig) -> Vec<Job<'_>> {
    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(|| {
        let t = Instant::now();
        let mut worst: f64 = 0.0;
        for z in [c(0.3, 0.0), c(-1.7, 0.4), c(2.5, -2.0), c(0.0, 3.0), c(5.0, 1.0), c(11.0, -2.0)] {
            let got = pcf_d(c(0.0, 0.0), z)?.0;
            let want = (-z * z / 4.0).exp();
            worst = worst.max((got - want).norm() / want.norm());
        }
        Ok(vec![CheckReport::close("specfun.pcf_d0_gaussian".into(), worst, 0.0, 1e-14, t)])
    }));
    jobs.push(Box::new(|| {
        let t = Instant::now();
        let mut worst: f64 = 0.0;
        for nu in [c(0.0, -0.5), c(0.3, 0.0), c(1.0, 0.2)] {
            for i in 0..9 {
                for j in 0..9 {
                    let z = c(-4.0 + i as f64, -4.0 + j as f64);
                    let (d, dp) = pcf_d(nu, z)?;
                    let up = pcf_d(nu + 1.0, z)?.0;
                    let dm = pcf_d(nu - 1.0, z)?.0;
                    let scale = 1.0 + d.norm() + up.norm() + dm.norm();
                    worst = worst.max((up - z * d + nu * dm).norm() / scale);
                    worst = worst.max((dp + z / 2.0 * d - nu * dm).norm() / scale);
                }
            }
        }
        Ok(vec![CheckReport::close("specfun.pcf_recurrences".into(), worst, 0.0, 1e-10, t)])
    }));
    jobs.push(Box::new(|| {
        let t = Instant::now();
        let g = gamma(c(0.0, 1.0))?.norm();
        let mut out = vec![CheckReport::close("specfun.gamma_reflection_abs_gamma_i".into(), g, (PI / PI.sinh()).sqrt(), 1e-10, t)];
        let t = Instant::now();
        let mut worst: f64 = 0.0;
        for p in default_matrix() {
            let rh = rh_constants(&p);
            let s = stokes_triple(&p);
            let s13 = s.s1 * s.s3;
            worst = worst.max((rh.h0 * rh.h1 * (1.0 - s13) - s13).norm());
        }
        out.push(CheckReport::close("specfun.h0h1_identity".into(), worst, 0.0, 1e-12, t));
        let t = Instant::now();
        let mut seam: f64 = 0.0;
        for x in [2.0, -2.0] {
            let (a, ap) = ai_maclaurin(x);
            let (b, bp) = ai_continued_from_asymptotic(x);
            seam = seam.max((a - b).abs()).max((ap - bp).abs());
        }
        out.push(CheckReport::close("specfun.airy_seam".into(), seam, 0.0, 1e-12, t));
        Ok(out)
    }));
    jobs
}

/// Run the requested suites; jobs run concurrently, reports keep job order.
pub fn run(cfg: &RunConfig, suites: &[Suite]) -> Result<Vec<CheckReport>> {
    let jobs: Vec<Job> = suites
        .iter()
        .flat_map(|s| match s {
            Suite::Connection => connection_jobs(cfg),
            Suite::TotalIntegral => total_integral_jobs(cfg),
            Suite::FourierLimit => fourier_jobs(cfg),
            Suite::Pde => pde_jobs(cfg),
            Suite::RhChecks => rh_jobs(cfg),
            Suite::Specfun => specfun_jobs(cfg),
        })
        .collect();
    let chunks: Vec<Vec<CheckReport>> = jobs.par_iter().map(|j| j()).collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}
