//! Repeater time-overhead scaling and the light-travel bound.

use super::PhysicsError;
use crate::constants::SPEED_OF_LIGHT;

/// Time overhead `T₀·R⁻ⁿ` of a protocol whose cost scales as a power law of
/// the retrieval efficiency `R`.
pub fn repeater_overhead(
    retrieval: f64,
    exponent: f64,
    base_time: f64,
) -> Result<f64, PhysicsError> {
    if retrieval <= 0.0 || retrieval > 1.0 {
        return Err(PhysicsError::RetrievalOutOfRange(retrieval));
    }
    Ok(base_time * retrieval.powf(-exponent))
}

/// One-way light travel time `d/c` for a distance in meters.
pub fn light_time(distance: f64) -> f64 {
    distance / SPEED_OF_LIGHT
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_relative_eq, assert_ulps_eq};

    #[test]
    fn light_time_over_1000_km() {
        assert_relative_eq!(light_time(1.0e6), 3.33e-3, max_relative = 2e-3);
    }

    #[test]
    fn power_law_scaling() {
        let t = repeater_overhead(0.8, 2.0, 1.0).unwrap();
        let t_half = repeater_overhead(0.4, 2.0, 1.0).unwrap();
        assert_ulps_eq!(t_half, 4.0 * t, max_ulps = 4);
        assert_ulps_eq!(repeater_overhead(1.0, 3.0, 0.7).unwrap(), 0.7);
        assert_ulps_eq!(repeater_overhead(0.3, 0.0, 0.7).unwrap(), 0.7);
    }

    #[test]
    fn rejects_non_positive_retrieval() {
        assert!(repeater_overhead(0.0, 2.0, 1.0).is_err());
        assert!(repeater_overhead(-0.2, 2.0, 1.0).is_err());
        assert!(repeater_overhead(1.2, 2.0, 1.0).is_err());
    }
}
