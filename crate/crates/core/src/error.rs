use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate parameters: {0}")]
    Degenerate(String),
    #[error("pole of the gamma function at {0}")]
    Pole(f64),
    #[error("argument outside the supported range: {0}")]
    Overflow(String),
    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),
    #[error("solution blew up at x = {x} (|v| = {v:e})")]
    Blowup { x: f64, v: f64 },
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("point on or too close to a branch cut: {0}")]
    BranchCut(String),
    #[error("point on a sector boundary ray: {0}")]
    SectorBoundary(String),
    #[error("window outside the available range: {0}")]
    WindowOutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn finite_c(z: num_complex::Complex64, what: &'static str) -> Result<num_complex::Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}
