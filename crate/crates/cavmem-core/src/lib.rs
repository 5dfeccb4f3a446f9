//! Core library for simulating and analysing a cavity-enhanced atomic-ensemble
//! (write/read heralded) quantum memory.
//!
//! The crate is organised around the stages of a counting experiment:
//!
//! * [`physics`] — deterministic calculators: cavity figures of merit, Purcell
//!   retrieval, decoherence time scales, repeater overhead arithmetic.
//! * [`sim`] — a Monte Carlo kernel producing photon-detection tallies for the
//!   correlation and feedback measurement modes, plus an exact enumeration
//!   oracle ([`sim::analytic_expectations`]) used as ground truth in tests.
//! * [`estimators`] — turn a [`CountsTable`] into the published quantities
//!   (cross-correlation, retrieval efficiencies, anti-correlation) with
//!   Poisson-propagated uncertainties.
//! * [`fitting`] — weighted nonlinear least squares and the three named fit
//!   models (exponential decay, reciprocal width, line).
//! * [`ingest`] — timestamped detector-event streams and the windowed
//!   coincidence search that reduces them to a [`CountsTable`].

pub mod constants;
pub mod estimators;
pub mod fitting;
pub mod ingest;
pub mod physics;
pub mod sim;

pub use estimators::EstimateWithError;
pub use fitting::{DataSeries, FitResult};
pub use ingest::{Channel, EventRecord};
pub use physics::{
    CavityParams, DecayModel, DecoherenceParams, DetectionChain, ReadoutModel,
};
pub use sim::{
    CountsTable, ExperimentConfig, MeasurementMode, PairSource, TimingConfig, TrialCounts,
    TrialOutcome,
};
