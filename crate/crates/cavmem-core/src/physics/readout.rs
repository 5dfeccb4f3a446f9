//! Phenomenological read-out pulse-width model.

use super::{require, PhysicsError};

/// Width of the retrieved photon versus read power: `FWHM = a/I_r + τ₀`.
///
/// The inverse-power term follows from the EIT group velocity scaling with
/// read intensity; the floor `τ₀` collects the cavity decay time and the rise
/// time of the read pulse.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReadoutModel {
    /// Width coefficient `a` in seconds·watt.
    pub width_coefficient: f64,
    /// Width floor `τ₀` in seconds.
    pub width_floor: f64,
    /// Rise time of the read pulse in seconds (documentation of the floor).
    pub read_rise_time: f64,
}

impl ReadoutModel {
    pub fn validate(&self) -> Result<(), PhysicsError> {
        require(
            self.width_coefficient >= 0.0,
            "width_coefficient",
            self.width_coefficient,
        )?;
        require(self.width_floor > 0.0, "width_floor", self.width_floor)?;
        require(
            self.read_rise_time >= 0.0,
            "read_rise_time",
            self.read_rise_time,
        )
    }

    /// FWHM of the read-out photon at read power `read_power` (watts).
    pub fn pulse_width(&self, read_power: f64) -> Result<f64, PhysicsError> {
        if read_power <= 0.0 {
            return Err(PhysicsError::NonPositiveReadPower(read_power));
        }
        Ok(self.width_coefficient / read_power + self.width_floor)
    }
}
