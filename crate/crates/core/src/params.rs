//! Physical parameter set for the hybrid optomechanical system.
//!
//! The system is a driven optical cavity (amplitude decay rate κ) containing
//! a movable mirror (mechanical mode at Ω, viscous damping γ_m), a collective
//! quantum-dot mode (linewidth γ_qE, drive detuning Δ_qe, cavity coupling
//! G_cs) and a degenerate intracavity parametric amplifier (gain 𝒢, pump
//! phase θ). Everything downstream is a pure function of [`SystemParams`].
//!
//! Unit convention: every rate and frequency stored here is **angular**
//! (rad/s). Presets and config files quote Hz and are converted once at the
//! boundary.

use crate::constants::{hz_to_angular, wavelength_to_angular, HBAR, K_B};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Full parameter set, all rates angular (rad/s).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemParams {
    /// Cavity amplitude decay rate κ, rad/s.
    pub kappa: f64,
    /// Mechanical frequency Ω, rad/s.
    pub omega_m: f64,
    /// Mechanical damping rate γ_m, rad/s.
    pub gamma_m: f64,
    /// Collective quantum-dot linewidth γ_qE, rad/s.
    pub gamma_qe: f64,
    /// Single-photon optomechanical coupling g₀, rad/s.
    pub g0: f64,
    /// Cavity–QD collective coupling G_cs, rad/s.
    pub g_cs: f64,
    /// Parametric gain 𝒢, rad/s. Often quoted as a fraction of κ.
    pub opa_gain: f64,
    /// Parametric pump phase θ, radians. Only θ = 0 is supported; the
    /// quadrature formulas below are specific to that phase.
    pub opa_phase: f64,
    /// Cavity detuning Δ_c = ω_L − ω_c, rad/s. Stored for the record; the
    /// linearized model is written for a resonantly driven cavity, so this
    /// value never enters the dynamics.
    pub delta_c: f64,
    /// Drive–QD detuning Δ_qe = ω_L − ω_qe, rad/s.
    pub delta_qe: f64,
    /// Drive laser angular frequency ω_L, rad/s.
    pub omega_l: f64,
    /// Input laser power P_L, watts.
    pub power: f64,
    /// Bath temperature T, kelvin.
    pub temperature: f64,
    /// Effective mechanical mass m, kg. Used only to convert the
    /// dimensionless spectral densities (units of ħmΩγ_m) back to N²/Hz.
    pub mass: f64,
}

/// Couplings derived from the drive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedCouplings {
    /// Field-enhanced optomechanical coupling g = √2 g₀ α, rad/s.
    pub g: f64,
    /// Effective cavity–QD coupling G′ = √2 G_cs α_s, rad/s. The steady
    /// state is never solved here; G′ is a free knob of the
    /// coupling-mismatch study and defaults to the matched value g.
    pub g_prime: f64,
    /// Mean thermal phonon occupation n̄ = k_B T / ħΩ.
    pub nbar: f64,
}

impl SystemParams {
    /// Validate every stored value against its physical domain.
    ///
    /// Rates, frequencies, power, temperature and mass must be strictly
    /// positive; the detunings and pump phase may be any real; the
    /// parametric gain must be non-negative; G_cs may be zero (no QD path).
    pub fn validate(&self) -> Result<()> {
        let positive: [(&'static str, f64); 7] = [
            ("kappa", self.kappa),
            ("omega_m", self.omega_m),
            ("gamma_m", self.gamma_m),
            ("gamma_qe", self.gamma_qe),
            ("g0", self.g0),
            ("omega_l", self.omega_l),
            ("power", self.power),
        ];
        for (name, value) in positive {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "must be strictly positive and finite",
                    value,
                });
            }
        }
        if !(self.temperature > 0.0) || !self.temperature.is_finite() {
            return Err(Error::InvalidParameter {
                name: "temperature",
                reason: "must be strictly positive and finite",
                value: self.temperature,
            });
        }
        if !(self.mass > 0.0) || !self.mass.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mass",
                reason: "must be strictly positive and finite",
                value: self.mass,
            });
        }
        if !(self.g_cs >= 0.0) || !self.g_cs.is_finite() {
            return Err(Error::InvalidParameter {
                name: "g_cs",
                reason: "must be non-negative and finite",
                value: self.g_cs,
            });
        }
        if !(self.opa_gain >= 0.0) || !self.opa_gain.is_finite() {
            return Err(Error::InvalidParameter {
                name: "opa_gain",
                reason: "must be non-negative and finite",
                value: self.opa_gain,
            });
        }
        for (name, value) in [
            ("delta_c", self.delta_c),
            ("delta_qe", self.delta_qe),
            ("opa_phase", self.opa_phase),
        ] {
            if !value.is_finite() {
                return Err(Error::InvalidParameter {
                    name,
                    reason: "must be finite",
                    value,
                });
            }
        }
        if self.opa_phase != 0.0 {
            return Err(Error::Unsupported(format!(
                "opa_phase = {} rad: the quadrature equations are written for \
                 pump phase 0; refusing to compute with formulas that would \
                 silently be wrong",
                self.opa_phase
            )));
        }
        Ok(())
    }

    /// Enhanced coupling g implied by the stored drive power.
    pub fn enhanced_coupling(&self) -> f64 {
        // power > 0 and g0 > 0 are guaranteed by validate()
        self.g0 * (self.power / (2.0 * HBAR * self.omega_l * self.kappa)).sqrt()
    }

    /// Mean thermal phonon occupation for the stored bath temperature.
    pub fn thermal_occupation(&self) -> f64 {
        thermal_occupation(self.temperature, self.omega_m)
    }

    /// Couplings derived from the stored drive (G′ matched to g).
    pub fn derived(&self) -> DerivedCouplings {
        let g = self.enhanced_coupling();
        DerivedCouplings {
            g,
            g_prime: g,
            nbar: self.thermal_occupation(),
        }
    }
}

/// Enhanced coupling from drive power, P_L = 2ħω_Lκ (g/g₀)².
///
/// Returns the matched [`DerivedCouplings`] (g′ = g) together with the
/// thermal occupation for the stored temperature.
pub fn coupling_from_power(power: f64, params: &SystemParams) -> Result<DerivedCouplings> {
    if !(params.g0 > 0.0) {
        return Err(Error::InvalidParameter {
            name: "g0",
            reason: "enhanced coupling undefined for vanishing single-photon coupling",
            value: params.g0,
        });
    }
    if !(power >= 0.0) || !power.is_finite() {
        return Err(Error::InvalidParameter {
            name: "power",
            reason: "must be non-negative and finite",
            value: power,
        });
    }
    let g = params.g0 * (power / (2.0 * HBAR * params.omega_l * params.kappa)).sqrt();
    Ok(DerivedCouplings {
        g,
        g_prime: g,
        nbar: thermal_occupation(params.temperature, params.omega_m),
    })
}

/// Inverse of [`coupling_from_power`]: the drive power that produces a given
/// enhanced coupling.
pub fn power_from_coupling(g: f64, params: &SystemParams) -> f64 {
    2.0 * HBAR * params.omega_l * params.kappa * (g / params.g0).powi(2)
}

/// Mean thermal phonon occupation n̄ = k_B T / ħΩ.
pub fn thermal_occupation(temperature: f64, omega_m: f64) -> f64 {
    K_B * temperature / (HBAR * omega_m)
}

impl SystemParams {
    /// Benchmark parameter set of the feasibility table: κ = 2π·1 MHz,
    /// Ω = 2π·10 MHz, γ_m = 2π·100 Hz, γ_qE = 2π·200 Hz, g₀ = G_cs = 2π·10 Hz,
    /// 𝒢 = 0.3 κ, λ_L = 1064 nm, T = 300 K. The quoted drive range is
    /// 10⁻³–10⁶ pW; the stored default is 1 pW. Δ_qe sits at the operating
    /// point Ω. Mass is a placeholder used only for physical normalization.
    pub fn table1() -> Self {
        let kappa = hz_to_angular(1.0e6);
        SystemParams {
            kappa,
            omega_m: hz_to_angular(10.0e6),
            gamma_m: hz_to_angular(100.0),
            gamma_qe: hz_to_angular(200.0),
            g0: hz_to_angular(10.0),
            g_cs: hz_to_angular(10.0),
            opa_gain: 0.3 * kappa,
            opa_phase: 0.0,
            delta_c: 0.0,
            delta_qe: hz_to_angular(10.0e6),
            omega_l: wavelength_to_angular(1064e-9),
            power: 1.0e-12,
            temperature: 300.0,
            mass: 1.0e-12,
        }
    }

    /// Frequency-sweep showcase preset: g₀ = 2π·300 Hz, Ω = 2π·300 kHz,
    /// γ_m = 2π·30 Hz, κ = 2π·1 MHz, P = 100 mW, ω_L = 2π·384 THz, 𝒢 = 0.1 κ.
    /// The QD channel is tuned to the matched point: γ_qE = γ_m, Δ_qe = Ω and
    /// G_cs equal to the enhanced coupling at 100 mW.
    pub fn fig2() -> Self {
        let kappa = hz_to_angular(1.0e6);
        let mut p = SystemParams {
            kappa,
            omega_m: hz_to_angular(300.0e3),
            gamma_m: hz_to_angular(30.0),
            gamma_qe: hz_to_angular(30.0),
            g0: hz_to_angular(300.0),
            g_cs: 0.0,
            opa_gain: 0.1 * kappa,
            opa_phase: 0.0,
            delta_c: 0.0,
            delta_qe: hz_to_angular(300.0e3),
            omega_l: hz_to_angular(384.0e12),
            power: 0.1,
            temperature: 300.0,
            mass: 1.0e-12,
        };
        p.g_cs = p.enhanced_coupling();
        p
    }

    /// Mismatch-study preset: the benchmark rates with a matched QD channel
    /// at small coupling (g = G_cs = 2π·10 Hz, i.e. the drive that makes the
    /// enhanced coupling equal g₀) and 𝒢 = 0.1 κ. Decay-rate or coupling
    /// mismatches are applied on top of this baseline.
    pub fn fig4() -> Self {
        let mut p = SystemParams::table1();
        p.gamma_qe = p.gamma_m;
        p.opa_gain = 0.1 * p.kappa;
        p.g_cs = p.g0;
        p.power = power_from_coupling(p.g0, &p);
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::TWO_PI;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    #[test]
    fn presets_validate() {
        SystemParams::table1().validate().unwrap();
        SystemParams::fig2().validate().unwrap();
        SystemParams::fig4().validate().unwrap();
    }

    #[test]
    fn zero_power_gives_zero_coupling() {
        let p = SystemParams::table1();
        assert_eq!(coupling_from_power(0.0, &p).unwrap().g, 0.0);
    }

    /// Hand-evaluated from P = 2ħω_Lκ(g/g₀)² with CODATA ħ:
    /// g₀ = 2π·300 Hz, ω_L = 2π·384 THz, κ = 2π·1 MHz, P = 100 mW
    /// gives g = 3.3335161561e8 rad/s = 2π·53.05 MHz.
    #[test]
    fn enhanced_coupling_fig2_value() {
        let p = SystemParams::fig2();
        assert_relative_eq!(p.enhanced_coupling(), 3.333_516_156_1e8, max_relative = 1e-9);
        assert_relative_eq!(
            p.enhanced_coupling() / TWO_PI,
            5.3e7,
            max_relative = 2e-3
        );
    }

    #[test]
    fn coupling_power_round_trip() {
        let p = SystemParams::table1();
        for power in [1e-12, 1e-6, 0.1] {
            let g = coupling_from_power(power, &p).unwrap().g;
            assert_relative_eq!(power_from_coupling(g, &p), power, max_relative = 1e-12);
        }
    }

    #[test]
    fn coupling_rejects_zero_g0() {
        let mut p = SystemParams::table1();
        p.g0 = 0.0;
        assert!(coupling_from_power(1e-12, &p).is_err());
    }

    /// Direct evaluation with CODATA constants: T = 300 K, Ω = 2π·300 kHz.
    #[test]
    fn thermal_occupation_value() {
        let n = thermal_occupation(300.0, TWO_PI * 300.0e3);
        assert_relative_eq!(n, 2.083_661_913_6e7, max_relative = 1e-9);
        assert_eq!(thermal_occupation(0.0, TWO_PI * 300.0e3), 0.0);
    }

    #[test]
    fn thermal_occupation_linear_in_temperature() {
        let omega = TWO_PI * 1.0e7;
        let n1 = thermal_occupation(123.0, omega);
        let n2 = thermal_occupation(246.0, omega);
        assert_eq!(n2, 2.0 * n1);
    }

    #[test]
    fn negative_rate_rejected() {
        let mut p = SystemParams::table1();
        p.gamma_m = -5.0;
        let err = p.validate().unwrap_err();
        assert!(err.to_string().contains("gamma_m"));
        assert!(err.to_string().contains("strictly positive"));
    }

    #[test]
    fn nonzero_pump_phase_unsupported() {
        let mut p = SystemParams::table1();
        p.opa_phase = 0.5;
        assert!(matches!(p.validate(), Err(Error::Unsupported(_))));
    }

    proptest! {
        /// coupling_from_power is monotone in power and inverts exactly.
        #[test]
        fn coupling_monotone_and_invertible(p1 in 1e-15f64..1e-1, p2 in 1e-15f64..1e-1) {
            let params = SystemParams::table1();
            let g1 = coupling_from_power(p1, &params).unwrap().g;
            let g2 = coupling_from_power(p2, &params).unwrap().g;
            prop_assert_eq!(p1 < p2, g1 < g2);
            let back = power_from_coupling(g1, &params);
            prop_assert!((back - p1).abs() <= 1e-12 * p1);
        }
    }
}
