//! Physical constants used throughout the crate (SI units).

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Standard gravitational acceleration (m/s²).
pub const STANDARD_GRAVITY: f64 = 9.81;

/// Boltzmann constant (J/K).
pub const BOLTZMANN: f64 = 1.380_649e-23;

/// Mass of a ⁸⁷Rb atom (kg). Convenience default for the ensemble species.
pub const RUBIDIUM_87_MASS: f64 = 1.443_16e-25;
