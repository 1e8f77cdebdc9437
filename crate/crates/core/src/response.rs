//! Frequency response and added-noise spectrum of the linear model.
//!
//! This is the independent route to the noise budget: instead of the
//! closed-form susceptibility products, each frequency solves
//! (iω𝟙 − A) H = B by partial-pivot LU and applies the input–output rule
//! P_a,out = √κ P_a − P_a,in. Referred to the external-force transfer, the
//! weighted transfer magnitudes give the added spectral density that
//! [`crate::spectra`] predicts analytically; the validation suite diffs the
//! two routes point by point.
//!
//! Spectra of a dynamically unstable model (𝒢 ≥ κ/4) are still well
//! defined as formal frequency-domain objects and are evaluated without
//! complaint; stability is reported separately so outputs can carry the
//! annotation.

use crate::error::{Error, Result};
use crate::model::{LinearModel, IN_F, IN_P_A, P_A};
use crate::spectra::{Normalization, SpectrumOptions};
use nalgebra::SMatrix;
use num_complex::Complex64;

type CMatrix66 = SMatrix<Complex64, 6, 6>;
type CMatrix65 = SMatrix<Complex64, 6, 5>;

/// Transfer functions from the five inputs to the detected output.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferSet {
    /// Row mapping (x_a,in, p_a,in, x_S,in, p_S,in, F) to P_a,out.
    pub to_output: [Complex64; 5],
    /// The F → P_a,out entry: what a unit external force looks like at the
    /// detector.
    pub signal_gain: Complex64,
}

/// Internal state transfer H(ω) = (iω𝟙 − A)⁻¹ B.
pub fn state_transfer(model: &LinearModel, omega: f64) -> Result<CMatrix65> {
    if !omega.is_finite() {
        return Err(Error::NonFiniteFrequency(omega));
    }
    let mut m = CMatrix66::zeros();
    for i in 0..6 {
        for j in 0..6 {
            m[(i, j)] = Complex64::new(-model.drift[(i, j)], if i == j { omega } else { 0.0 });
        }
    }
    let b = model.input.map(|v| Complex64::new(v, 0.0));
    let lu = m.lu();
    let min_pivot = (0..6)
        .map(|i| lu.u()[(i, i)].norm())
        .fold(f64::INFINITY, f64::min);
    lu.solve(&b).ok_or(Error::SingularResponse {
        omega,
        pivot: min_pivot,
    })
}

/// Output transfer row at `omega`: √κ·(p_a row of H) with the unit
/// feedthrough subtracted on the p_a,in column.
pub fn frequency_response(model: &LinearModel, omega: f64) -> Result<TransferSet> {
    let h = state_transfer(model, omega)?;
    let sqrt_kappa = model.kappa.sqrt();
    let mut to_output = [Complex64::ZERO; 5];
    for (j, out) in to_output.iter_mut().enumerate() {
        *out = sqrt_kappa * h[(P_A, j)];
    }
    to_output[IN_P_A] -= 1.0;
    Ok(TransferSet {
        to_output,
        signal_gain: to_output[IN_F],
    })
}

/// Added-force noise spectral density from the transfer row:
/// S(ω) = Σᵢ Nᵢ |Tᵢ(ω)/T_F(ω)|², with the thermal force contributing
/// n̄ (its transfer equals the signal transfer) when enabled.
pub fn oracle_added_spectrum(
    model: &LinearModel,
    omega: f64,
    opts: &SpectrumOptions,
) -> Result<f64> {
    let t = frequency_response(model, omega)?;
    let gain2 = t.signal_gain.norm_sqr();
    if gain2 == 0.0 || !gain2.is_finite() {
        return Err(Error::NoTransduction(gain2.sqrt()));
    }
    let mut s = 0.0;
    for i in 0..4 {
        s += model.noise_psd[i] * t.to_output[i].norm_sqr() / gain2;
    }
    if opts.include_thermal {
        s += model.noise_psd[IN_F];
    }
    let scale = match opts.normalization {
        Normalization::Dimensionless => 1.0,
        Normalization::Physical => model.norm_scale,
    };
    Ok(s * scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_linear_model, IN_X_A, P_B, X_A, X_B};
    use crate::params::SystemParams;
    use crate::spectra::{s_f_added, s_f_standard, SpectrumOptions};
    use crate::susceptibility::susceptibilities;
    use approx::assert_relative_eq;

    const OFF: SpectrumOptions = SpectrumOptions {
        include_thermal: false,
        normalization: Normalization::Dimensionless,
    };

    fn c_rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn amplitude_quadrature_transfer_is_lambda_plus() {
        let mut p = SystemParams::table1();
        p.opa_gain = 0.1 * p.kappa;
        let m = build_linear_model(&p, 4.0e4);
        for omega in [0.2 * p.omega_m, p.omega_m, 2.5 * p.omega_m] {
            let h = state_transfer(&m, omega).unwrap();
            let s = susceptibilities(omega, &p).unwrap();
            let expect = p.kappa.sqrt() * s.lambda_plus;
            assert!(c_rel(h[(X_A, IN_X_A)], expect) < 1e-9);
        }
    }

    #[test]
    fn momentum_row_is_rotated_position_row() {
        let p = SystemParams::fig2();
        let m = build_linear_model(&p, p.enhanced_coupling());
        let omega = 0.8 * p.omega_m;
        let h = state_transfer(&m, omega).unwrap();
        let rot = Complex64::new(0.0, omega / p.omega_m);
        let scale = (0..5).map(|j| h[(P_B, j)].norm()).fold(0.0, f64::max);
        for j in 0..5 {
            let expect = rot * h[(X_B, j)];
            if expect.norm() > 1e-12 * scale {
                assert!(c_rel(h[(P_B, j)], expect) < 1e-9, "column {j}");
            } else {
                // only x_a,in and F reach the mechanics; the rest is solver dust
                assert!(h[(P_B, j)].norm() < 1e-12 * scale, "column {j}");
            }
        }
    }

    #[test]
    fn signal_gain_matches_closed_form() {
        let p = SystemParams::fig2();
        let g = p.enhanced_coupling();
        let m = build_linear_model(&p, g);
        for omega in [0.3 * p.omega_m, 1.1 * p.omega_m] {
            let t = frequency_response(&m, omega).unwrap();
            let s = susceptibilities(omega, &p).unwrap();
            let expect = -g
                * s.chi_m
                * s.lambda_minus
                * (2.0 * p.gamma_m * p.kappa).sqrt();
            assert!(c_rel(t.signal_gain, expect) < 1e-9);
        }
    }

    #[test]
    fn pa_in_entry_carries_unit_feedthrough() {
        let p = SystemParams::table1();
        let m = build_linear_model(&p, 3.0e4);
        let omega = 1.7 * p.omega_m;
        let h = state_transfer(&m, omega).unwrap();
        let t = frequency_response(&m, omega).unwrap();
        let expect = p.kappa.sqrt() * h[(P_A, IN_P_A)] - 1.0;
        assert!(c_rel(t.to_output[IN_P_A], expect) < 1e-12);
    }

    /// Bare cavity limit: the back-action transfer x_a,in → P_a,out reduces
    /// to g²χ_mχ_a²κ.
    #[test]
    fn bare_cavity_back_action_transfer() {
        let mut p = SystemParams::table1();
        p.g_cs = 0.0;
        p.opa_gain = 0.0;
        let g = 2.0e4;
        let m = build_linear_model(&p, g);
        for omega in [0.4 * p.omega_m, 1.5 * p.omega_m] {
            let t = frequency_response(&m, omega).unwrap();
            let s = susceptibilities(omega, &p).unwrap();
            let expect = g * g * s.chi_m * s.chi_a * s.chi_a * p.kappa;
            assert!(c_rel(t.to_output[IN_X_A], expect) < 1e-9);
        }
    }

    /// H(−ω) = conj H(ω), entry-wise.
    #[test]
    fn response_reality() {
        let p = SystemParams::fig2();
        let m = build_linear_model(&p, p.enhanced_coupling());
        for omega in [0.37 * p.omega_m, 2.2 * p.omega_m] {
            let h = state_transfer(&m, omega).unwrap();
            let hm = state_transfer(&m, -omega).unwrap();
            for i in 0..6 {
                for j in 0..5 {
                    let a = h[(i, j)];
                    assert!(
                        (hm[(i, j)] - a.conj()).norm() <= 1e-12 * a.norm().max(1e-300),
                        "entry ({i},{j})"
                    );
                }
            }
        }
    }

    #[test]
    fn thermal_flag_adds_nbar() {
        let p = SystemParams::fig2();
        let m = build_linear_model(&p, p.enhanced_coupling());
        let on = SpectrumOptions {
            include_thermal: true,
            normalization: Normalization::Dimensionless,
        };
        for omega in [0.6 * p.omega_m, 1.4 * p.omega_m] {
            let diff = oracle_added_spectrum(&m, omega, &on).unwrap()
                - oracle_added_spectrum(&m, omega, &OFF).unwrap();
            assert_relative_eq!(diff, p.thermal_occupation(), max_relative = 1e-12);
        }
    }

    #[test]
    fn oracle_agrees_with_standard_budget() {
        let mut p = SystemParams::table1();
        p.g_cs = 0.0;
        p.opa_gain = 0.0;
        let g = 1.3e3;
        let m = build_linear_model(&p, g);
        for omega in [0.05 * p.omega_m, p.omega_m * 1.001, 5.0 * p.omega_m] {
            let a = oracle_added_spectrum(&m, omega, &OFF).unwrap();
            let b = s_f_standard(omega, &p, g, &OFF).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-10);
        }
    }

    #[test]
    fn oracle_agrees_with_added_budget_when_matched() {
        let mut p = SystemParams::table1();
        p.gamma_qe = p.gamma_m;
        p.delta_qe = p.omega_m;
        p.power = 0.1;
        p.g_cs = p.enhanced_coupling();
        let g = p.g_cs;
        let m = build_linear_model(&p, g);
        for omega in [0.05 * p.omega_m, 0.9 * p.omega_m, 4.0 * p.omega_m] {
            let a = oracle_added_spectrum(&m, omega, &OFF).unwrap();
            let b = s_f_added(omega, &p, g, &OFF).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-6);
        }
    }
}
