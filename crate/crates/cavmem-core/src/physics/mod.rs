//! Deterministic physics calculators.
//!
//! Everything in this module is a pure function of its inputs: cavity figures
//! of merit, Purcell-enhanced retrieval, decoherence time scales and the
//! time-dependent retrieval-decay factor, the read-out pulse-width model and
//! repeater overhead arithmetic. Safe for unrestricted concurrent use.

mod cavity;
mod decoherence;
mod detection;
mod readout;
mod repeater;

pub use cavity::{
    cooperativity, cooperativity_for_retrieval, emission_enhancement, intensity_buildup,
    purcell_retrieval, CavityParams,
};
pub use decoherence::{
    dephasing_lifetime, free_fall_time, magnetic_modulation, modulation_amplitude,
    retrieval_decay, DecayModel, DecoherenceParams,
};
pub use detection::DetectionChain;
pub use readout::ReadoutModel;
pub use repeater::{light_time, repeater_overhead};

/// Domain and validation failures of the physics calculators.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PhysicsError {
    /// Combined coupler transmission and intracavity loss outside (0, 1].
    #[error("total round-trip loss {total} outside (0, 1]")]
    LossOutOfRange { total: f64 },
    /// Cooperativity must be non-negative.
    #[error("cooperativity must be >= 0, got {0}")]
    NegativeCooperativity(f64),
    /// Read power must be strictly positive.
    #[error("read power must be > 0, got {0} W")]
    NonPositiveReadPower(f64),
    /// Retrieval efficiency for overhead scaling must lie in (0, 1].
    #[error("retrieval efficiency must lie in (0, 1], got {0}")]
    RetrievalOutOfRange(f64),
    /// The magnetic modulation factor dipped below zero.
    #[error("modulation factor {factor} < 0 at t = {time_s} s")]
    NegativeModulation { factor: f64, time_s: f64 },
    /// Generic parameter-validation failure, named after the offending field.
    #[error("invalid {name}: {value}")]
    InvalidParameter { name: &'static str, value: f64 },
}

pub(crate) fn require(ok: bool, name: &'static str, value: f64) -> Result<(), PhysicsError> {
    if ok {
        Ok(())
    } else {
        Err(PhysicsError::InvalidParameter { name, value })
    }
}
