use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use painleve::mkdv::{ab_to_params, InitialDataCoefficients};
use painleve::pii::SolveConfig;
use painleve::stokes::{make_params, ASParams};
use serde::Deserialize;

/// Environment variable that replaces the output path.
pub const OUT_ENV: &str = "PAINLEVE_MKDV_OUT";

/// Keys accepted in the TOML config file. All are optional.
#[derive(Debug, Clone, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub alpha: Option<f64>,
    pub k: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub x_lo: Option<f64>,
    pub x_hi: Option<f64>,
    pub step: Option<f64>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub x_launch: Option<f64>,
    pub x_match: Option<f64>,
    pub cutoff: Option<f64>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }
}

/// Values given on the command line; they take precedence over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub alpha: Option<f64>,
    pub k: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub out: Option<PathBuf>,
    pub tol: Option<f64>,
}

#[derive(Debug, Clone, Copy)]
pub enum ParamSpec {
    AlphaK(ASParams),
    Coefficients(InitialDataCoefficients, ASParams),
}

impl ParamSpec {
    pub fn params(&self) -> ASParams {
        match self {
            Self::AlphaK(p) | Self::Coefficients(_, p) => *p,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: Option<ParamSpec>,
    pub x_lo: f64,
    pub x_hi: f64,
    pub step: f64,
    pub solve: SolveConfig,
    pub cutoff: f64,
    pub out: Option<PathBuf>,
}

pub const DEFAULT_X_LAUNCH: f64 = -8000.0;
pub const DEFAULT_TOL: f64 = 1e-12;

fn pair(name: &str, x: Option<f64>, y: Option<f64>) -> Result<Option<(f64, f64)>> {
    match (x, y) {
        (Some(x), Some(y)) => Ok(Some((x, y))),
        (None, None) => Ok(None),
        _ => bail!("{name} must be given together"),
    }
}

impl RunConfig {
    pub fn resolve(file: FileConfig, cli: Overrides, env_out: Option<PathBuf>) -> Result<Self> {
        let ak = pair("alpha and k", cli.alpha.or(file.alpha), cli.k.or(file.k))?;
        let ab = pair("a and b", cli.a.or(file.a), cli.b.or(file.b))?;
        let params = match (ak, ab) {
            (Some(_), Some(_)) => bail!("give either (alpha, k) or (a, b), not both"),
            (Some((alpha, k)), None) => Some(ParamSpec::AlphaK(make_params(alpha, k)?)),
            (None, Some((a, b))) => {
                let co = InitialDataCoefficients { a, b };
                Some(ParamSpec::Coefficients(co, ab_to_params(co)?))
            }
            (None, None) => None,
        };
        let x_lo = file.x_lo.unwrap_or(-60.0);
        let x_hi = file.x_hi.unwrap_or(4.0);
        let step = file.step.unwrap_or(0.01);
        if !(x_lo < x_hi && x_lo.is_finite() && x_hi.is_finite()) {
            bail!("need finite x_lo < x_hi, got [{x_lo}, {x_hi}]");
        }
        if !(step > 0.0 && step.is_finite()) {
            bail!("step must be positive, got {step}");
        }
        if (x_hi - x_lo) / step > 1e8 {
            bail!("grid of more than 1e8 rows requested");
        }
        let tol = cli.tol.or(file.tol).unwrap_or(DEFAULT_TOL);
        if !(tol > 0.0 && tol < 1e-3) {
            bail!("tol must lie in (0, 1e-3), got {tol}");
        }
        let x_left = x_lo.min(-60.0);
        let x_launch = file.x_launch.unwrap_or(DEFAULT_X_LAUNCH).min(x_left);
        if x_launch < -20000.0 {
            bail!("x_launch below -20000 is not supported");
        }
        let x_match = file.x_match.unwrap_or(4.0);
        if !(1.0..=6.0).contains(&x_match) {
            bail!("x_match must lie in [1, 6], got {x_match}");
        }
        let cutoff = file.cutoff.unwrap_or(60.0);
        if !(cutoff >= 20.0 && cutoff.is_finite()) {
            bail!("cutoff must be at least 20, got {cutoff}");
        }
        Ok(Self {
            params,
            x_lo,
            x_hi,
            step,
            solve: SolveConfig { x_launch, x_left, x_match, tol },
            cutoff,
            out: cli.out.or(env_out).or(file.out),
        })
    }
}
