//! Closed-form added-force noise spectral densities.
//!
//! Everything here is expressed in the dimensionless force units in which
//! the external force is rescaled by √(ħmΩγ_m); a spectral density of 1 at
//! resonance is the standard quantum limit there. `Normalization::Physical`
//! multiplies back by ħmΩγ_m to give N²/Hz.
//!
//! Noise weights: each vacuum quadrature input carries unit effective white
//! strength and the rescaled thermal force carries n̄ = k_B T/ħΩ. This is
//! the one convention under which the CQNC floor equals
//! (ω² + Ω² + γ_qE²/4)/(2Ω²), the standard-cavity budget minimizes to
//! exactly 1/(γ_m|χ_m|) at g = √κ/(2√|χ_m|) in the broadband-cavity limit,
//! and the thermal term enters as exactly n̄ — the three anchors every
//! other quantity is checked against. The matrix-inversion oracle in
//! [`crate::response`] uses the same weights, so the two routes are
//! directly comparable.

use crate::constants::HBAR;
use crate::error::{Error, Result};
use crate::params::{power_from_coupling, SystemParams};
use crate::susceptibility::susceptibilities;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Output normalization for spectral densities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Units of ħmΩγ_m (the figure convention).
    #[default]
    Dimensionless,
    /// N²/Hz; requires a valid mass.
    Physical,
}

/// Options shared by the spectral-density evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SpectrumOptions {
    /// Include the thermal Brownian term n̄ = k_B T/ħΩ. Off by default:
    /// the reference figures all show the quantum-limited budget.
    pub include_thermal: bool,
    /// Dimensionless (default) or physical units.
    pub normalization: Normalization,
}

impl SpectrumOptions {
    fn scale(&self, params: &SystemParams) -> f64 {
        match self.normalization {
            Normalization::Dimensionless => 1.0,
            Normalization::Physical => normalization_scale(params),
        }
    }

    fn thermal(&self, params: &SystemParams) -> f64 {
        if self.include_thermal {
            params.thermal_occupation()
        } else {
            0.0
        }
    }
}

/// The factor ħmΩγ_m converting dimensionless spectra to N²/Hz.
pub fn normalization_scale(params: &SystemParams) -> f64 {
    HBAR * params.mass * params.omega_m * params.gamma_m
}

/// Which matching condition of the cancellation scheme is broken.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum MismatchSpec {
    /// Decay-rate mismatch δ = (γ_qE − γ_m)/γ_m.
    DecayRate { delta: f64 },
    /// Coupling mismatch ε = (G′ − g)/g.
    Coupling { epsilon: f64 },
}

impl MismatchSpec {
    /// Rates and couplings must stay positive: δ > −1, ε > −1.
    pub fn validate(&self) -> Result<()> {
        let (name, v) = match self {
            MismatchSpec::DecayRate { delta } => ("delta", *delta),
            MismatchSpec::Coupling { epsilon } => ("epsilon", *epsilon),
        };
        if !(v > -1.0) || !v.is_finite() {
            return Err(Error::InvalidParameter {
                name: if name == "delta" { "delta" } else { "epsilon" },
                reason: "relative mismatch must be finite and > -1",
                value: v,
            });
        }
        Ok(())
    }
}

/// Ideal cancellation floor S_F,CQNC = (ω² + Ω² + γ_qE²/4)/(2Ω²).
pub fn s_f_cqnc(omega: f64, params: &SystemParams) -> f64 {
    let om2 = params.omega_m * params.omega_m;
    0.5 * (omega * omega + om2 + params.gamma_qe * params.gamma_qe / 4.0) / om2
}

/// Optical shot-noise term of the budget, |(λ_−κ − 1)/λ_−|²/(2γ_mκ g²|χ_m|²).
///
/// The numerator simplifies to ω² + (κ/2 − 2𝒢)², i.e. exactly 1/|λ_+|², so
/// the shot and back-action terms multiply to a gain- and filter-independent
/// constant — which is why the SQL envelope survives the parametric drive.
fn shot_term(omega: f64, params: &SystemParams, g: f64) -> Result<f64> {
    let s = susceptibilities(omega, params)?;
    let feed = (s.lambda_minus * params.kappa - 1.0) / s.lambda_minus;
    Ok(feed.norm_sqr()
        / (2.0 * params.gamma_m * params.kappa * g * g * s.chi_m.norm_sqr()))
}

/// Added-noise budget of the cancellation scheme (back-action removed):
/// [n̄] + shot + S_F,CQNC.
pub fn s_f_added(
    omega: f64,
    params: &SystemParams,
    g: f64,
    opts: &SpectrumOptions,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::NoTransduction(g));
    }
    let value = opts.thermal(params) + shot_term(omega, params, g)? + s_f_cqnc(omega, params);
    Ok(value * opts.scale(params))
}

/// Budget of the cavity without the QD path (any parametric gain):
/// [n̄] + shot + κ g²|λ_+|²/(2γ_m).
///
/// The third term is the uncancelled radiation-pressure back-action. In the
/// broadband-cavity limit ω, 𝒢 ≪ κ it reduces to the textbook pair
/// κ/(8γ_m g²|χ_m|²) + 2g²/(κγ_m), whose minimum over drive reproduces
/// [`sql_reference`] exactly.
pub fn s_f_standard(
    omega: f64,
    params: &SystemParams,
    g: f64,
    opts: &SpectrumOptions,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::NoTransduction(g));
    }
    let s = susceptibilities(omega, params)?;
    let back_action =
        params.kappa * g * g * s.lambda_plus.norm_sqr() / (2.0 * params.gamma_m);
    let value = opts.thermal(params) + shot_term(omega, params, g)? + back_action;
    Ok(value * opts.scale(params))
}

/// Standard-quantum-limit reference at one frequency.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqlReference {
    /// Envelope S_SQL = 1/(γ_m|χ_m|), dimensionless.
    pub s_sql: f64,
    /// Coupling at the dip, g_SQL = √κ/(2√|χ_m|), rad/s.
    pub g_sql: f64,
    /// Drive power producing g_SQL, watts.
    pub p_sql: f64,
}

/// SQL envelope, dip coupling, and dip power at `omega`.
pub fn sql_reference(omega: f64, params: &SystemParams) -> Result<SqlReference> {
    let s = susceptibilities(omega, params)?;
    let chi_mag = s.chi_m.norm();
    let s_sql = 1.0 / (params.gamma_m * chi_mag);
    let g_sql = params.kappa.sqrt() / (2.0 * chi_mag.sqrt());
    Ok(SqlReference {
        s_sql,
        g_sql,
        p_sql: power_from_coupling(g_sql, params),
    })
}

/// Budget under an imperfect matching condition, floor + residual term.
///
/// Decay-rate kind: γ_qE = (1+δ)γ_m inside both the floor and the residual
/// factor |1 + χ′_S/χ_m|², with χ′_S taken at the matched operating point
/// −Ω/(Ω² − ω² + iωγ_qE) so that δ = 0 restores the floor identically.
/// Coupling kind: residual factor |1 − G′²/g²|² with G′ = (1+ε)g.
/// λ_+² in the residual prefactor is read as |λ_+|²; a spectral density is
/// real.
pub fn s_f_mismatch(
    omega: f64,
    params: &SystemParams,
    g: f64,
    spec: &MismatchSpec,
    opts: &SpectrumOptions,
) -> Result<f64> {
    spec.validate()?;
    if !(g > 0.0) {
        return Err(Error::NoTransduction(g));
    }
    let s = susceptibilities(omega, params)?;
    let prefactor =
        s.lambda_plus.norm_sqr() * params.kappa * g * g / params.gamma_m;
    let om = params.omega_m;
    let om2 = om * om;
    let value = match spec {
        MismatchSpec::DecayRate { delta } => {
            let gamma_qe = (1.0 + delta) * params.gamma_m;
            let floor = 0.5 * (omega * omega + om2 + gamma_qe * gamma_qe / 4.0) / om2;
            let chi_s_prime_matched =
                -om / Complex64::new(om2 - omega * omega, omega * gamma_qe);
            let factor = (1.0 + chi_s_prime_matched / s.chi_m).norm_sqr();
            floor + prefactor * factor
        }
        MismatchSpec::Coupling { epsilon } => {
            let floor = s_f_cqnc(omega, params);
            let ratio2 = (1.0 + epsilon) * (1.0 + epsilon);
            floor + prefactor * (1.0 - ratio2) * (1.0 - ratio2)
        }
    };
    Ok((opts.thermal(params) + value) * opts.scale(params))
}

/// Full first-principles budget assembled from susceptibility products:
/// shot + uncancelled back-action + QD input noise [+ n̄].
///
/// Unlike [`s_f_added`] (which bakes in the matched condition) this carries
/// the stored G_cs, Δ_qe and γ_qE, so it stays valid for arbitrary
/// mismatches. It is the transfer-function route to the same quantity the
/// drift-matrix oracle computes by LU inversion, and the two are compared
/// point by point in the validation suite.
pub fn added_noise_closed(
    omega: f64,
    params: &SystemParams,
    g: f64,
    opts: &SpectrumOptions,
) -> Result<f64> {
    if !(g > 0.0) {
        return Err(Error::NoTransduction(g));
    }
    let s = susceptibilities(omega, params)?;
    let gcs = params.g_cs;
    let denom = 2.0 * params.gamma_m * g * g * s.chi_m.norm_sqr();
    let residual = g * g * s.chi_m + gcs * gcs * s.chi_s_prime;
    let back_action = params.kappa * s.lambda_plus.norm_sqr() * residual.norm_sqr() / denom;
    let qd_noise = gcs * gcs
        * params.gamma_qe
        * (s.xi.norm_sqr() + s.chi_s_prime.norm_sqr())
        / denom;
    let value = opts.thermal(params) + shot_term(omega, params, g)? + back_action + qd_noise;
    Ok(value * opts.scale(params))
}
