//! Ring-cavity figures of merit and Purcell-enhanced retrieval.

use std::f64::consts::PI;

use super::{require, PhysicsError};
use crate::constants::SPEED_OF_LIGHT;

/// Parameters of the ring cavity placed around the ensemble.
///
/// The decay time is a stored, independently measured quantity. It is *not*
/// derived from the finesse and round-trip time (the naive `F·t_rt/2π`
/// estimate disagrees with the measured value); the stored number is
/// authoritative wherever a cavity time scale is needed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    /// Output-coupler transmission, as a fraction of circulating power.
    pub coupler_transmission: f64,
    /// Remaining intracavity loss per round trip (mirrors, cell windows, lenses).
    pub intracavity_loss_per_round_trip: f64,
    /// Geometric round-trip length in meters.
    pub round_trip_length: f64,
    /// Measured cavity field decay time in seconds.
    pub decay_time: f64,
}

impl CavityParams {
    /// Checks the structural invariants, naming the offending field on failure.
    pub fn validate(&self) -> Result<(), PhysicsError> {
        require(
            self.coupler_transmission > 0.0 && self.coupler_transmission < 1.0,
            "coupler_transmission",
            self.coupler_transmission,
        )?;
        require(
            self.intracavity_loss_per_round_trip >= 0.0
                && self.intracavity_loss_per_round_trip < 1.0,
            "intracavity_loss_per_round_trip",
            self.intracavity_loss_per_round_trip,
        )?;
        require(
            self.round_trip_length > 0.0,
            "round_trip_length",
            self.round_trip_length,
        )?;
        require(self.decay_time > 0.0, "decay_time", self.decay_time)?;
        let total = self.coupler_transmission + self.intracavity_loss_per_round_trip;
        if total <= 0.0 || total >= 1.0 {
            return Err(PhysicsError::LossOutOfRange { total });
        }
        Ok(())
    }

    fn total_loss(&self) -> Result<f64, PhysicsError> {
        let total = self.coupler_transmission + self.intracavity_loss_per_round_trip;
        // Ops accept total = 1 (formula still evaluates); a real cavity config
        // is held to the stricter validate() above.
        if total <= 0.0 || total > 1.0 {
            return Err(PhysicsError::LossOutOfRange { total });
        }
        Ok(total)
    }

    /// Finesse `2π / (T_oc + loss)`.
    pub fn finesse(&self) -> Result<f64, PhysicsError> {
        Ok(2.0 * PI / self.total_loss()?)
    }

    /// Free spectral range `c / L` in hertz.
    pub fn free_spectral_range(&self) -> f64 {
        SPEED_OF_LIGHT / self.round_trip_length
    }

    /// Round-trip time `L / c` in seconds.
    pub fn round_trip_time(&self) -> f64 {
        self.round_trip_length / SPEED_OF_LIGHT
    }

    /// Fraction of intracavity photons that leave through the output coupler,
    /// `T_oc / (T_oc + loss)`.
    pub fn escape_efficiency(&self) -> Result<f64, PhysicsError> {
        Ok(self.coupler_transmission / self.total_loss()?)
    }
}

/// Intensity buildup factor `2·F·η_esp/π` for a resonant drive beam.
pub fn intensity_buildup(finesse: f64, escape_efficiency: f64) -> f64 {
    2.0 * finesse * escape_efficiency / PI
}

/// Enhancement `2F/π` of the emission rate into the cavity mode.
pub fn emission_enhancement(finesse: f64) -> f64 {
    2.0 * finesse / PI
}

/// Maximal Purcell-limited retrieval efficiency `C/(C+1)`.
///
/// Strictly increasing in the cooperativity and bounded by 1.
pub fn purcell_retrieval(cooperativity: f64) -> Result<f64, PhysicsError> {
    if cooperativity < 0.0 {
        return Err(PhysicsError::NegativeCooperativity(cooperativity));
    }
    Ok(cooperativity / (cooperativity + 1.0))
}

/// Cooperativity `k·F·d` for finesse `F` and optical depth `d`.
///
/// Only the proportionality is physical; `k` is a configuration constant
/// calibrated so the derived retrieval matches a measured value.
pub fn cooperativity(finesse: f64, optical_depth: f64, proportionality: f64) -> f64 {
    proportionality * finesse * optical_depth
}

/// Inverts `purcell_retrieval`: the cooperativity that yields `retrieval`.
pub fn cooperativity_for_retrieval(retrieval: f64) -> f64 {
    retrieval / (1.0 - retrieval)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_relative_eq, assert_ulps_eq};

    fn cavity(t: f64, loss: f64) -> CavityParams {
        CavityParams {
            coupler_transmission: t,
            intracavity_loss_per_round_trip: loss,
            round_trip_length: 0.5038,
            decay_time: 8.9e-9,
        }
    }

    #[test]
    fn finesse_matches_measured_value() {
        // 2π/F = 0.1309 for F = 48, so T = 0.0881 pairs with loss = 0.0428.
        let f = cavity(0.0881, 0.0428).finesse().unwrap();
        assert_relative_eq!(f, 48.0, max_relative = 1e-3);
    }

    #[test]
    fn finesse_formula_points() {
        assert_relative_eq!(
            cavity(0.5, 0.5).finesse().unwrap(),
            2.0 * PI,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            cavity(0.0881, 0.0).finesse().unwrap(),
            71.3,
            max_relative = 1e-3
        );
    }

    #[test]
    fn finesse_domain_errors() {
        assert!(matches!(
            cavity(0.7, 0.5).finesse(),
            Err(PhysicsError::LossOutOfRange { .. })
        ));
        assert!(cavity(0.0, 0.0).finesse().is_err());
    }

    #[test]
    fn finesse_times_total_loss_is_two_pi() {
        for (t, l) in [(0.0881, 0.0428), (0.0881, 0.036), (0.2, 0.1), (0.01, 0.0)] {
            let c = cavity(t, l);
            assert_ulps_eq!(c.finesse().unwrap() * (t + l), 2.0 * PI, max_ulps = 4);
        }
    }

    #[test]
    fn free_spectral_range_points() {
        assert_relative_eq!(
            cavity(0.0881, 0.0428).free_spectral_range(),
            595.1e6,
            max_relative = 2e-3
        );
        let mut c = cavity(0.0881, 0.0428);
        c.round_trip_length = 0.503;
        assert_relative_eq!(c.free_spectral_range(), 596.0e6, max_relative = 2e-3);
        c.round_trip_length = SPEED_OF_LIGHT;
        assert_ulps_eq!(c.free_spectral_range(), 1.0);
    }

    #[test]
    fn escape_efficiency_points() {
        // loss = T·(1/η − 1) with η = 0.71 gives loss = 0.0360.
        assert_relative_eq!(
            cavity(0.0881, 0.0360).escape_efficiency().unwrap(),
            0.710,
            max_relative = 1e-3
        );
        assert_ulps_eq!(cavity(0.0881, 0.0).escape_efficiency().unwrap(), 1.0);
        assert_ulps_eq!(cavity(0.3, 0.3).escape_efficiency().unwrap(), 0.5);
    }

    #[test]
    fn escape_times_total_equals_transmission() {
        for (t, l) in [(0.0881, 0.036), (0.5, 0.25), (0.02, 0.8)] {
            let c = cavity(t, l);
            assert_ulps_eq!(
                c.escape_efficiency().unwrap() * (t + l),
                t,
                max_ulps = 4
            );
        }
    }

    #[test]
    fn buildup_and_emission_factors() {
        assert_relative_eq!(intensity_buildup(48.0, 0.71), 21.7, max_relative = 1e-3);
        assert_ulps_eq!(intensity_buildup(PI / 2.0, 1.0), 1.0);
        assert_ulps_eq!(intensity_buildup(48.0, 0.0), 0.0);
        assert_relative_eq!(emission_enhancement(48.0), 30.6, max_relative = 2e-3);
        assert_ulps_eq!(emission_enhancement(PI / 2.0), 1.0);
    }

    #[test]
    fn purcell_retrieval_points() {
        assert_ulps_eq!(purcell_retrieval(1.0).unwrap(), 0.5);
        assert!(purcell_retrieval(1e6).unwrap() > 0.999999);
        assert!(purcell_retrieval(-0.1).is_err());
        // Inversion against the measured 73% retrieval.
        assert_relative_eq!(cooperativity_for_retrieval(0.73), 2.70, max_relative = 2e-3);
    }

    #[test]
    fn purcell_round_trips_through_inverse() {
        for i in 1..100 {
            let chi = i as f64 / 100.0;
            let back = purcell_retrieval(cooperativity_for_retrieval(chi)).unwrap();
            assert_relative_eq!(back, chi, epsilon = 1e-12);
        }
    }

    #[test]
    fn purcell_strictly_increasing() {
        let mut prev = purcell_retrieval(0.0).unwrap();
        for i in 1..=1000 {
            let next = purcell_retrieval(i as f64 * 0.01).unwrap();
            assert!(next > prev && next < 1.0);
            prev = next;
        }
    }

    #[test]
    fn cooperativity_is_linear() {
        assert_ulps_eq!(cooperativity(48.0, 7.0, 0.0), 0.0);
        let c1 = cooperativity(48.0, 7.0, 0.013);
        let c2 = cooperativity(96.0, 7.0, 0.013);
        assert_ulps_eq!(c2, 2.0 * c1);
    }

    #[test]
    fn cooperativity_constant_calibrates_to_measured_retrieval() {
        // Brute-force inversion: bisect C such that C/(C+1) = 0.73, then pick
        // k for the measured finesse and a nominal optical depth.
        let target = 0.73;
        let (mut lo, mut hi) = (0.0_f64, 100.0_f64);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if purcell_retrieval(mid).unwrap() < target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let c_star = 0.5 * (lo + hi);
        assert_relative_eq!(c_star, 2.7037, max_relative = 1e-3);
        let k = c_star / (48.0 * 10.0);
        let chi = purcell_retrieval(cooperativity(48.0, 10.0, k)).unwrap();
        assert_relative_eq!(chi, 0.73, epsilon = 1e-9);
    }

    #[test]
    fn validate_rejects_bad_fields() {
        assert!(cavity(0.0881, 0.0428).validate().is_ok());
        assert!(cavity(0.0, 0.1).validate().is_err());
        assert!(cavity(0.5, 0.5).validate().is_err()); // total loss saturates
        let mut c = cavity(0.0881, 0.0428);
        c.round_trip_length = 0.0;
        assert!(c.validate().is_err());
    }
}
