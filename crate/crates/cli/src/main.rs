mod config;
mod grid;
mod output;
mod report;
mod suites;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use painleve::pii::AsSolution;

use config::{FileConfig, Overrides, RunConfig, OUT_ENV};
use suites::Suite;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Command {
    Connection,
    TotalIntegral,
    FourierLimit,
    Pde,
    RhChecks,
    Specfun,
    All,
    Grid,
}

/// Verification suites and solution grids for real Ablowitz-Segur solutions
/// of Painleve II and the associated self-similar mKdV fields.
#[derive(Debug, Parser)]
#[command(name = "painleve-mkdv", version)]
struct Cli {
    /// Suite to run, or `grid` to tabulate a solution.
    command: Command,
    /// TOML configuration file.
    #[arg(long)]
    config: PathBuf,
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["a", "b"])]
    alpha: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<f64>,
    /// Delta coefficient of the mKdV initial datum.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Principal-value coefficient of the mKdV initial datum.
    #[arg(long, allow_hyphen_values = true)]
    b: Option<f64>,
    /// Output path (report for suites, CSV for `grid`); stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// ODE tolerance.
    #[arg(long)]
    tol: Option<f64>,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

fn emit<F>(out: &Option<PathBuf>, fill: F) -> anyhow::Result<()>
where
    F: FnOnce(&mut dyn Write) -> anyhow::Result<()>,
{
    match out {
        Some(path) => output::write_atomic(path, fill),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            fill(&mut lock)
        }
    }
}

fn run(cli: Cli) -> Result<bool, (u8, anyhow::Error)> {
    let usage = |e: anyhow::Error| (EXIT_USAGE, e);
    let numeric = |e: painleve::Error| (EXIT_NUMERIC, anyhow::Error::new(e));
    let file = FileConfig::load(&cli.config).map_err(usage)?;
    let overrides = Overrides { alpha: cli.alpha, k: cli.k, a: cli.a, b: cli.b, out: cli.out, tol: cli.tol };
    let env_out = std::env::var_os(OUT_ENV).map(PathBuf::from);
    let cfg = RunConfig::resolve(file, overrides, env_out).map_err(usage)?;

    if cli.command == Command::Grid {
        let spec = cfg.params.ok_or_else(|| usage(anyhow::anyhow!("grid needs (alpha, k) or (a, b)")))?;
        let sol = AsSolution::with_config(&spec.params(), cfg.solve).map_err(numeric)?;
        emit(&cfg.out, |w| grid::write_grid(w, &sol, &cfg)).map_err(|e| (EXIT_NUMERIC, e))?;
        return Ok(true);
    }

    let suites: Vec<Suite> = match cli.command {
        Command::Connection => vec![Suite::Connection],
        Command::TotalIntegral => vec![Suite::TotalIntegral],
        Command::FourierLimit => vec![Suite::FourierLimit],
        Command::Pde => vec![Suite::Pde],
        Command::RhChecks => vec![Suite::RhChecks],
        Command::Specfun => vec![Suite::Specfun],
        Command::All => Suite::ALL.to_vec(),
        Command::Grid => unreachable!(),
    };
    let reports = suites::run(&cfg, &suites).map_err(numeric)?;
    emit(&cfg.out, |w| report::write_jsonl(w, &reports)).map_err(|e| (EXIT_NUMERIC, e))?;
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!("FAIL {}: abs_err {:e} > tol {:e}", r.check_id, r.abs_err, r.tol);
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err((code, e)) => {
            eprintln!("painleve-mkdv: {e:#}");
            ExitCode::from(code)
        }
    }
}
