//! Monte-Carlo simulator for joint relay and jammer selection in secure
//! two-way amplify-and-forward relay networks.
//!
//! Two sources exchange data through a selected AF relay while one or two
//! selected intermediate nodes jam a passive eavesdropper. The crate models
//! the block-Rayleigh-fading channels, the per-link SNR components and MRC
//! eavesdropper SINRs, the instantaneous secrecy rates, and nine selection
//! schemes (plus a known-jamming control), and estimates ergodic secrecy
//! rate and secrecy outage probability versus transmit power.
//!
//! The usual entry points are [`topology::preset_scenario`] to build a
//! scenario, [`montecarlo::ergodic_curve`] / [`montecarlo::outage_curve`] to
//! sweep a scheme, and [`cli`] for config-driven batch runs (also available
//! through the `secrelay` binary).

pub mod channel;
pub mod cli;
pub mod error;
pub mod montecarlo;
pub mod secrecy;
pub mod selection;
pub mod sinr;
pub mod topology;

pub use channel::{average_gain_view, draw_realization, AverageGainView, FadingRealization};
pub use error::{ConfigError, Result, SimError};
pub use montecarlo::{
    ergodic_curve, find_crossover, fit_high_power_slope, outage_curve, run_sweep, PowerGrid,
    SweepOptions, SweepPoint, SweepResult,
};
pub use secrecy::{secrecy_rate, sum_secrecy_rate, SecrecyRates};
pub use selection::{
    candidate_triples, run_scheme, scheme_metric, select, select_switching, SchemeId,
    SelectionOutcome,
};
pub use sinr::{
    amplification_gain, component_snrs, destination_sinr, eavesdropper_sinr_average,
    eavesdropper_sinr_instant, CandidateTriple, GammaSet, JammingMode, PowerConfig, SourceNode,
};
pub use topology::{
    preset_scenario, NetworkTopology, NodeId, NodePosition, Scenario, TopologyViolation,
};
