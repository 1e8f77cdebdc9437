//! Six-state linear model of the quadrature dynamics.
//!
//! State ordering (x_b, p_b, x_a, p_a, x_S, p_S); inputs
//! (x_a,in, p_a,in, x_S,in, p_S,in, F) where F = F_th + F_ext drives the
//! mechanical momentum with weight √(2γ_m). The drift matrix is transcribed
//! row by row from the linearized Langevin equations:
//!
//! ```text
//! ẋ_b =  Ω p_b
//! ṗ_b = −Ω x_b − γ_m p_b − g x_a + √(2γ_m) F
//! ẋ_a = (−κ/2 + 2𝒢) x_a + √κ x_a,in
//! ṗ_a = −g x_b + (−κ/2 − 2𝒢) p_a − G_cs x_S + √κ p_a,in
//! ẋ_S = −(γ_qE/2) x_S − Δ_qe p_S + √γ_qE x_S,in
//! ṗ_S = −G_cs x_a + Δ_qe x_S − (γ_qE/2) p_S + √γ_qE p_S,in
//! ```
//!
//! Note the feed-forward structure: the amplitude quadrature x_a is
//! dynamically decoupled (its row holds a single diagonal entry), so
//! −κ/2 + 2𝒢 is an exact eigenvalue and the parametric instability
//! threshold sits at 𝒢 = κ/4 regardless of the couplings.

use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::spectra::normalization_scale;
use nalgebra::{SMatrix, Schur};
use serde::Serialize;

/// Number of quadrature states.
pub const STATE_DIM: usize = 6;
/// Number of input channels.
pub const INPUT_DIM: usize = 5;

/// State indices.
pub const X_B: usize = 0;
pub const P_B: usize = 1;
pub const X_A: usize = 2;
pub const P_A: usize = 3;
pub const X_S: usize = 4;
pub const P_S: usize = 5;

/// Input indices.
pub const IN_X_A: usize = 0;
pub const IN_P_A: usize = 1;
pub const IN_X_S: usize = 2;
pub const IN_P_S: usize = 3;
pub const IN_F: usize = 4;

/// Drift matrix, input matrix and noise weights of the linear model.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearModel {
    /// 6×6 real drift matrix A.
    pub drift: SMatrix<f64, 6, 6>,
    /// 6×5 real input matrix B.
    pub input: SMatrix<f64, 6, 5>,
    /// Effective white noise strength per input: 1 for each vacuum
    /// quadrature, n̄ in the force slot (the thermal part of F; the
    /// external signal F_ext carries none). The thermal entry is applied
    /// only when a spectrum is requested with the thermal flag on.
    pub noise_psd: [f64; 5],
    /// Cavity decay rate, needed by the input–output boundary rule.
    pub kappa: f64,
    /// ħmΩγ_m, for physical normalization of oracle spectra.
    pub norm_scale: f64,
}

/// Populate the model for the stored parameters and enhanced coupling `g`.
pub fn build_linear_model(params: &SystemParams, g: f64) -> LinearModel {
    let mut a = SMatrix::<f64, 6, 6>::zeros();
    a[(X_B, P_B)] = params.omega_m;

    a[(P_B, X_B)] = -params.omega_m;
    a[(P_B, P_B)] = -params.gamma_m;
    a[(P_B, X_A)] = -g;

    a[(X_A, X_A)] = -params.kappa / 2.0 + 2.0 * params.opa_gain;

    a[(P_A, X_B)] = -g;
    a[(P_A, P_A)] = -params.kappa / 2.0 - 2.0 * params.opa_gain;
    a[(P_A, X_S)] = -params.g_cs;

    a[(X_S, X_S)] = -params.gamma_qe / 2.0;
    a[(X_S, P_S)] = -params.delta_qe;

    a[(P_S, X_A)] = -params.g_cs;
    a[(P_S, X_S)] = params.delta_qe;
    a[(P_S, P_S)] = -params.gamma_qe / 2.0;

    let mut b = SMatrix::<f64, 6, 5>::zeros();
    b[(X_A, IN_X_A)] = params.kappa.sqrt();
    b[(P_A, IN_P_A)] = params.kappa.sqrt();
    b[(X_S, IN_X_S)] = params.gamma_qe.sqrt();
    b[(P_S, IN_P_S)] = params.gamma_qe.sqrt();
    b[(P_B, IN_F)] = (2.0 * params.gamma_m).sqrt();

    LinearModel {
        drift: a,
        input: b,
        noise_psd: [1.0, 1.0, 1.0, 1.0, params.thermal_occupation()],
        kappa: params.kappa,
        norm_scale: normalization_scale(params),
    }
}

/// Result of the dynamical stability test.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Stability {
    /// True iff every drift eigenvalue has negative real part.
    pub stable: bool,
    /// Largest real part among the eigenvalues, 1/s.
    pub max_real_eigenvalue: f64,
}

/// Stability of the drift matrix via its eigenvalue spectrum.
pub fn stability_check(model: &LinearModel) -> Result<Stability> {
    let schur = Schur::try_new(model.drift, f64::EPSILON, 10_000)
        .ok_or(Error::EigenIndeterminate)?;
    let eigs = schur.complex_eigenvalues();
    let max_real = eigs.iter().map(|e| e.re).fold(f64::NEG_INFINITY, f64::max);
    Ok(Stability {
        stable: max_real < 0.0,
        max_real_eigenvalue: max_real,
    })
}
