//! Special-function kernels: Airy Ai, complex log-Gamma, parabolic cylinder
//! functions `D_nu(z)` and the sine integral.

mod airy;
mod gamma;
mod pcf;
mod sici;
pub(crate) mod taylor;

pub use airy::airy_ai;
pub use gamma::{gamma, log_gamma, rgamma};
pub use pcf::{pcf_d, PCF_MAX_ABS_Z};
pub use sici::sine_integral;

#[doc(hidden)]
pub mod internals {
    pub use super::airy::{ai_asymptotic, ai_maclaurin, ai_continued_from_asymptotic};
    pub use super::pcf::{pcf_asymptotic, pcf_maclaurin};
}
