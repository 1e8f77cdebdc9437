//! Physical constants (CODATA 2018) and unit helpers.
//!
//! All internal math uses angular frequencies in rad/s. Configuration files
//! and presets quote frequencies in Hz; the loader multiplies by 2π once,
//! at the boundary, so no 2π can leak into the formulas.

/// Reduced Planck constant, J·s (CODATA 2018).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K (exact, 2019 SI).
pub const K_B: f64 = 1.380_649e-23;

/// Speed of light in vacuum, m/s (exact).
pub const C_LIGHT: f64 = 299_792_458.0;

/// 2π, the Hz → rad/s conversion factor.
pub const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

/// Convert an ordinary frequency in Hz to angular rad/s.
#[inline]
pub fn hz_to_angular(f_hz: f64) -> f64 {
    TWO_PI * f_hz
}

/// Convert an angular frequency in rad/s back to Hz.
#[inline]
pub fn angular_to_hz(omega: f64) -> f64 {
    omega / TWO_PI
}

/// Angular frequency of a laser with vacuum wavelength `lambda_m` (meters).
#[inline]
pub fn wavelength_to_angular(lambda_m: f64) -> f64 {
    TWO_PI * C_LIGHT / lambda_m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wavelength_1064nm() {
        let w = wavelength_to_angular(1064e-9);
        // nu = c/lambda = 281.76 THz
        assert!((angular_to_hz(w) - 2.817_598_29e14).abs() / 2.817_598_29e14 < 1e-8);
    }

    #[test]
    fn hz_round_trip() {
        assert_eq!(angular_to_hz(hz_to_angular(1.0e6)), 1.0e6);
    }
}
