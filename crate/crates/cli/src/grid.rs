use std::io::Write;

use anyhow::Result;
use painleve::asymptotics::{v_neg_asym, v_pos_asym};
use painleve::pii::{oscillatory_value, AsSolution};
use painleve::stokes::{connection_constants, ConnectionConstants};

use crate::config::RunConfig;

pub const COLUMNS: [&str; 7] = ["x", "v", "v_prime", "v_neg_asym", "v_pos_asym", "residual_osc", "residual_full"];

pub fn abscissas(cfg: &RunConfig) -> Vec<f64> {
    let n = ((cfg.x_hi - cfg.x_lo) / cfg.step + 1e-9).floor() as usize;
    (0..=n).map(|i| ((cfg.x_lo + i as f64 * cfg.step) * 1e9).round() / 1e9).collect()
}

fn field(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

/// Writes the `#` preamble, the header row and one row per abscissa. Fields
/// outside a model's domain are left blank.
pub fn write_grid<W: Write>(mut w: W, sol: &AsSolution, cfg: &RunConfig) -> Result<()> {
    let p = sol.params();
    let s = &cfg.solve;
    writeln!(
        w,
        "# painleve-mkdv {} alpha={} k={} x_launch={} x_left={} x_match={} tol={:e}",
        env!("CARGO_PKG_VERSION"),
        p.alpha(),
        p.k(),
        s.x_launch,
        s.x_left,
        s.x_match,
        s.tol
    )?;
    let consts = if p.is_degenerate() { ConnectionConstants { d: 0.0, phi: 0.0 } } else { connection_constants(p)? };
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
    out.write_record(COLUMNS)?;
    for x in abscissas(cfg) {
        let (v, dv) = sol.evaluate(x)?;
        let neg = (x <= -1.0).then(|| v_neg_asym(x, p, &consts, true)).transpose()?.map(|m| m.0);
        let pos = (x >= 1.0).then(|| v_pos_asym(x, p.alpha())).transpose()?.map(|m| m.0);
        let osc = (x <= -1.0).then(|| (v - oscillatory_value(x, &consts, p.alpha(), false)).abs());
        let full = (x <= -1.0).then(|| (v - oscillatory_value(x, &consts, p.alpha(), true)).abs());
        out.write_record([x.to_string(), v.to_string(), dv.to_string(), field(neg), field(pos), field(osc), field(full)])?;
    }
    out.flush()?;
    Ok(())
}
