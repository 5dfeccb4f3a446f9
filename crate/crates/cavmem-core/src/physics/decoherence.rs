//! Decoherence time scales and the time-dependent retrieval-decay factor.
//!
//! Three mechanisms reduce the retrieval efficiency over the storage time:
//!
//! * ballistic transit of thermal atoms out of the detection mode,
//! * spin-wave dephasing from atomic motion along the wave vector mismatch,
//! * Larmor precession of residual population outside the clock states,
//!   which shows up as a slight oscillation of the efficiency.
//!
//! The transit model treats the spin wave as weighted by the Gaussian
//! amplitude mode function `u(r) = exp(-r²/w²)` over a cloud much larger than
//! the waist; the retrieved efficiency is the square of the normalized
//! ensemble-beam overlap, `[1 + (σ_v t/w)²]⁻²` for Maxwell-Boltzmann
//! transverse motion with `σ_v = √(k_B T/m)`.

use super::{require, PhysicsError};
use crate::constants::{BOLTZMANN, STANDARD_GRAVITY};

/// 1/e point of the squared overlap `[1+(σ_v t/w)²]⁻²`: `√(√e − 1)`.
fn transit_shape_constant() -> f64 {
    (std::f64::consts::E.sqrt() - 1.0).sqrt()
}

/// Functional form of the storage-time decay envelope.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecayModel {
    /// Single exponential `exp(-t/τ)` per mechanism. The simple form used for
    /// lifetime fits; default for figure reproduction.
    Exponential,
    /// Ballistic forms: squared Gaussian-overlap transit decay and Gaussian
    /// motional dephasing.
    BallisticGaussian,
}

/// Ensemble and field parameters governing the memory decoherence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceParams {
    /// Optical-pumping efficiency into the clock state, in [0, 1].
    pub pumping_efficiency: f64,
    /// Larmor angular frequency of the residual Zeeman population (rad/s).
    pub larmor_angular_frequency: f64,
    /// Ensemble temperature in kelvin.
    pub temperature: f64,
    /// Atomic mass in kg.
    pub atomic_mass: f64,
    /// 1/e² intensity waist of the detection mode, in meters.
    pub beam_waist: f64,
    /// Wave-vector mismatch of the stored spin wave (rad/m).
    pub spin_wave_delta_k: f64,
    /// Free-fall distance available below the ensemble, in meters.
    pub fall_distance: f64,
    /// Envelope model for the storage-time decay.
    pub decay_model: DecayModel,
    /// Calibration constant of the modulation-amplitude map (dimensionless).
    pub modulation_calibration: f64,
}

impl DecoherenceParams {
    pub fn validate(&self) -> Result<(), PhysicsError> {
        require(
            (0.0..=1.0).contains(&self.pumping_efficiency),
            "pumping_efficiency",
            self.pumping_efficiency,
        )?;
        require(
            self.larmor_angular_frequency >= 0.0,
            "larmor_angular_frequency",
            self.larmor_angular_frequency,
        )?;
        require(self.temperature > 0.0, "temperature", self.temperature)?;
        require(self.atomic_mass > 0.0, "atomic_mass", self.atomic_mass)?;
        require(self.beam_waist > 0.0, "beam_waist", self.beam_waist)?;
        require(
            self.spin_wave_delta_k >= 0.0,
            "spin_wave_delta_k",
            self.spin_wave_delta_k,
        )?;
        require(
            self.fall_distance > 0.0,
            "fall_distance",
            self.fall_distance,
        )?;
        require(
            self.modulation_calibration >= 0.0,
            "modulation_calibration",
            self.modulation_calibration,
        )?;
        // The full decay factor must stay non-negative for every t.
        let amplitude = self.modulation_amplitude();
        if amplitude > 1.0 {
            return Err(PhysicsError::InvalidParameter {
                name: "modulation amplitude",
                value: amplitude,
            });
        }
        Ok(())
    }

    /// One-dimensional rms thermal velocity `√(k_B T/m)` in m/s.
    pub fn thermal_velocity(&self) -> f64 {
        (BOLTZMANN * self.temperature / self.atomic_mass).sqrt()
    }

    /// 1/e lifetime of the ensemble-beam overlap under transverse thermal
    /// motion: `√(√e − 1) · w / σ_v`.
    pub fn transit_lifetime(&self) -> f64 {
        transit_shape_constant() * self.beam_waist / self.thermal_velocity()
    }

    /// 1/e lifetime of the motional spin-wave dephasing, `1/(Δk·σ_v)`.
    pub fn dephasing_lifetime(&self) -> f64 {
        dephasing_lifetime(self.spin_wave_delta_k, self.thermal_velocity())
    }

    /// Relative oscillation amplitude of the retrieval efficiency caused by
    /// residual population precessing outside the clock states.
    pub fn modulation_amplitude(&self) -> f64 {
        modulation_amplitude(self.pumping_efficiency, self.modulation_calibration)
    }
}

/// 1/e dephasing time `1/(Δk·v_rms)` of a spin wave with wave-vector mismatch
/// `Δk` for 1D rms velocity `v_rms`.
///
/// For Gaussian velocities the ensemble-averaged efficiency decays as
/// `exp(-(Δk·v_rms·t)²)`, whose 1/e point is exactly this time. Collinear
/// operation (Δk = 0) never dephases; the saturating `+∞` sentinel represents
/// that design point rather than an error.
pub fn dephasing_lifetime(delta_k: f64, v_rms: f64) -> f64 {
    let rate = delta_k * v_rms;
    if rate == 0.0 {
        f64::INFINITY
    } else {
        1.0 / rate
    }
}

/// Free-fall time `√(2d/g)` over a drop distance `d` in meters.
pub fn free_fall_time(distance: f64) -> f64 {
    (2.0 * distance / STANDARD_GRAVITY).sqrt()
}

/// Oscillation amplitude of the retrieval efficiency for pumping efficiency
/// `p0`, under the default two-population precession model.
///
/// Residual population `1 - p0` is assumed split equally over the m_F = ±1
/// sublevels (none in m_F = ±2), each contributing a precessing interference
/// term: `A = calibration · 2(1-p0)/p0`. `calibration = 1.33` reproduces the
/// measured pair (p0 = 95%, A = 14%) exactly.
pub fn modulation_amplitude(p0: f64, calibration: f64) -> f64 {
    if p0 <= 0.0 {
        return f64::INFINITY;
    }
    calibration * 2.0 * (1.0 - p0) / p0
}

/// Retrieval-efficiency modulation factor `1 + A·cos(ω_L t)`.
///
/// The phase convention places the maximum at t = 0, and the time average
/// over a Larmor period is 1. Errors if the factor would be negative
/// (amplitude above 1, i.e. pumping too poor for the two-population model).
pub fn magnetic_modulation(
    t: f64,
    p0: f64,
    larmor_angular_frequency: f64,
    calibration: f64,
) -> Result<f64, PhysicsError> {
    let amplitude = modulation_amplitude(p0, calibration);
    let factor = 1.0 + amplitude * (larmor_angular_frequency * t).cos();
    if factor < 0.0 {
        return Err(PhysicsError::NegativeModulation { factor, time_s: t });
    }
    Ok(factor)
}

/// Multiplicative retrieval-efficiency factor after a storage time `t`.
///
/// Combines the transit and dephasing envelopes of the configured
/// [`DecayModel`] with the magnetic modulation. The envelope is 1 at t = 0,
/// so the full factor starts at `1 + A` (modulation maximum).
///
/// Callers must hold validated parameters; the factor is then non-negative
/// for every t.
pub fn retrieval_decay(t: f64, params: &DecoherenceParams) -> f64 {
    let sigma_v = params.thermal_velocity();
    let envelope = match params.decay_model {
        DecayModel::Exponential => {
            let transit_rate = 1.0 / params.transit_lifetime();
            let dephasing_rate = params.spin_wave_delta_k * sigma_v;
            (-t * (transit_rate + dephasing_rate)).exp()
        }
        DecayModel::BallisticGaussian => {
            let x = sigma_v * t / params.beam_waist;
            let overlap = 1.0 / (1.0 + x * x);
            let phase = params.spin_wave_delta_k * sigma_v * t;
            overlap * overlap * (-(phase * phase)).exp()
        }
    };
    let modulation = 1.0
        + params.modulation_amplitude() * (params.larmor_angular_frequency * t).cos();
    debug_assert!(modulation >= 0.0, "modulation amplitude exceeds 1");
    envelope * modulation
}
