use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use painleve::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

/// One verification result. `pass` holds exactly when `abs_err <= tol`.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub check_id: String,
    pub lhs: Value,
    pub rhs: Value,
    pub abs_err: f64,
    pub tol: f64,
    pub pass: bool,
    pub runtime_ms: f64,
}

pub fn real(x: f64) -> Value {
    json!(x)
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

impl CheckReport {
    fn build(check_id: String, lhs: Value, rhs: Value, abs_err: f64, tol: f64, started: Instant) -> Self {
        Self {
            check_id,
            lhs,
            rhs,
            abs_err,
            tol,
            pass: abs_err <= tol,
            runtime_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    /// `|lhs - rhs| <= tol`.
    pub fn close(check_id: String, lhs: f64, rhs: f64, tol: f64, started: Instant) -> Self {
        Self::build(check_id, real(lhs), real(rhs), (lhs - rhs).abs(), tol, started)
    }

    pub fn close_complex(check_id: String, lhs: Complex64, rhs: Complex64, tol: f64, started: Instant) -> Self {
        Self::build(check_id, complex(lhs), complex(rhs), (lhs - rhs).norm(), tol, started)
    }

    /// `lhs <= rhs`, reported as an excess over the bound with zero tolerance.
    pub fn at_most(check_id: String, lhs: f64, rhs: f64, started: Instant) -> Self {
        let excess = if lhs.is_nan() { f64::INFINITY } else { (lhs - rhs).max(0.0) };
        Self::build(check_id, real(lhs), real(rhs), excess, 0.0, started)
    }
}

pub fn write_jsonl<W: Write>(mut w: W, reports: &[CheckReport]) -> Result<()> {
    for r in reports {
        serde_json::to_writer(&mut w, r)?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_matches_tolerance() {
        let t = Instant::now();
        assert!(CheckReport::close("x".into(), 1.0, 1.0005, 1e-3, t).pass);
        assert!(!CheckReport::close("x".into(), 1.0, 1.1, 1e-3, t).pass);
        assert!(CheckReport::at_most("s".into(), -1.5, -1.4, t).pass);
        let r = CheckReport::at_most("s".into(), -1.3, -1.4, t);
        assert!(!r.pass && (r.abs_err - 0.1).abs() < 1e-12);
        assert!(!CheckReport::at_most("s".into(), f64::NAN, -1.4, t).pass);
    }

    #[test]
    fn jsonl_layout() {
        let r = CheckReport::close("id".into(), 0.5, 0.5, 1e-3, Instant::now());
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &[r.clone(), r]).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 2);
        let v: Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        for key in ["check_id", "lhs", "rhs", "abs_err", "tol", "pass", "runtime_ms"] {
            assert!(v.get(key).is_some(), "{key}");
        }
    }
}
