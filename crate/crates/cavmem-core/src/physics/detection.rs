//! Detection-chain efficiencies and background parameterization.

use super::{require, PhysicsError};

/// Losses and spurious counts between the cavity and the detector tallies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectionChain {
    /// Fraction of intracavity photons escaping through the output coupler.
    pub escape_efficiency: f64,
    /// Path transmission from the coupler to the detectors.
    pub path_transmission: f64,
    /// Detector quantum efficiency.
    pub detector_quantum_efficiency: f64,
    /// Power-independent background probability per gate (stray light, dark
    /// counts, leakage of the auxiliary beams).
    pub constant_background: f64,
    /// Write-leak background as a fraction of the signal write-out
    /// probability; scales linearly with write power.
    pub write_leak_fraction: f64,
    /// Optional read-side background per gate; defaults to the constant
    /// background when absent.
    pub read_background: Option<f64>,
    /// Coincidence gate length in seconds.
    pub coincidence_window: f64,
}

impl DetectionChain {
    pub fn validate(&self) -> Result<(), PhysicsError> {
        for (name, value) in [
            ("escape_efficiency", self.escape_efficiency),
            ("path_transmission", self.path_transmission),
            (
                "detector_quantum_efficiency",
                self.detector_quantum_efficiency,
            ),
        ] {
            require(value > 0.0 && value <= 1.0, name, value)?;
        }
        require(
            (0.0..1.0).contains(&self.constant_background),
            "constant_background",
            self.constant_background,
        )?;
        require(
            (0.0..1.0).contains(&self.write_leak_fraction),
            "write_leak_fraction",
            self.write_leak_fraction,
        )?;
        if let Some(bg) = self.read_background {
            require((0.0..1.0).contains(&bg), "read_background", bg)?;
        }
        require(
            self.coincidence_window > 0.0,
            "coincidence_window",
            self.coincidence_window,
        )?;
        Ok(())
    }

    /// Total detection efficiency, the product of the three chain factors.
    pub fn total_efficiency(&self) -> f64 {
        self.escape_efficiency * self.path_transmission * self.detector_quantum_efficiency
    }

    /// Read-side background per gate (explicit override or the constant one).
    pub fn read_side_background(&self) -> f64 {
        self.read_background.unwrap_or(self.constant_background)
    }
}
