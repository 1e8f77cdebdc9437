//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by parameter validation, spectrum evaluation, sweeps,
/// configuration parsing, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A physical parameter violated its validity rule.
    #[error("invalid parameter `{name}`: {reason} (got {value})")]
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
        value: f64,
    },

    /// A feature the formulas do not cover was requested.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A response function has an exactly vanishing denominator.
    #[error("susceptibility `{which}` diverges at omega = {omega} rad/s")]
    Divergent { which: &'static str, omega: f64 },

    /// Non-finite frequency argument.
    #[error("non-finite frequency argument: {0}")]
    NonFiniteFrequency(f64),

    /// Enhanced coupling vanished, so noise cannot be referred to a force.
    #[error("no optomechanical transduction: enhanced coupling g = {0} rad/s")]
    NoTransduction(f64),

    /// The linear solve at one frequency is numerically singular.
    #[error("near-singular frequency response at omega = {omega} rad/s (pivot {pivot:e})")]
    SingularResponse { omega: f64, pivot: f64 },

    /// The eigensolver did not converge; stability is indeterminate.
    #[error("eigenvalue iteration did not converge; stability indeterminate")]
    EigenIndeterminate,

    /// A sweep or search configuration is unusable.
    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),

    /// A minimum search found no interior minimum (monotone channel).
    #[error("no interior minimum on the power bracket; boundary value s = {boundary_value} at P = {boundary_power} W")]
    NoInteriorMinimum {
        boundary_power: f64,
        boundary_value: f64,
    },

    /// Config-file parse failure, with 1-based line number.
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },

    /// I/O failure writing or reading results.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Malformed data while reading back a series file.
    #[error("malformed series file: {0}")]
    MalformedSeries(String),
}

pub type Result<T> = std::result::Result<T, Error>;
