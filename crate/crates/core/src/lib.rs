//! Noise-budget engine for weak-force sensing in a hybrid optomechanical
//! cavity.
//!
//! The system: a laser-driven cavity whose movable end mirror is the force
//! sensor, an intracavity degenerate parametric amplifier acting on the
//! optical quadratures, and a collective quantum-dot mode coupled to the
//! cavity field. Tuning the quantum-dot response against the mechanical one
//! makes the radiation-pressure back-action paths interfere destructively
//! (coherent quantum noise cancellation), which removes the back-action
//! term from the detected phase quadrature and lets the force sensitivity
//! pass the standard quantum limit.
//!
//! Two independent computational routes are built and cross-checked:
//!
//! * closed-form spectral densities assembled from the complex
//!   susceptibilities ([`spectra`]), and
//! * a 6-state linear input–output model solved by dense LU at each
//!   frequency ([`model`], [`response`]).
//!
//! [`sweep`] orchestrates frequency/power/mismatch scans and the
//! minimum-power search, [`config`]/[`output`] handle the key–value config
//! format and CSV/JSON series files, and [`validate`] runs the full
//! cross-check suite between the two routes.

pub mod appendix;
pub mod config;
pub mod constants;
pub mod error;
pub mod model;
pub mod output;
pub mod params;
pub mod response;
pub mod spectra;
pub mod susceptibility;
pub mod sweep;
pub mod validate;

pub use error::{Error, Result};
pub use params::{coupling_from_power, power_from_coupling, thermal_occupation, SystemParams};
pub use spectra::{
    s_f_added, s_f_cqnc, s_f_mismatch, s_f_standard, sql_reference, MismatchSpec, Normalization,
    SpectrumOptions,
};
pub use susceptibility::{cqnc_residual, susceptibilities, SusceptibilitySet};

/// Crate version embedded in every output metadata block.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
