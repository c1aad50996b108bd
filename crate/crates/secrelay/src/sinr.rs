//! Amplify-and-forward gain, per-link SNR components, destination SINRs and
//! eavesdropper MRC SINRs.
//!
//! All noise powers are normalized to 1, so transmit powers are linear SNRs.
//! The eavesdropper overhears both transmission phases and combines them with
//! maximal ratio combining; its SINR can be evaluated either from the
//! instantaneous gains (full channel knowledge) or with the eavesdropper-link
//! gains replaced by their long-term means (averaged knowledge).

use crate::channel::{AverageGainView, FadingRealization};
use crate::error::{Result, SimError};
use crate::topology::NodeId;

/// Source/relay/jammer transmit powers, all linear and noise-normalized.
///
/// The jammer power is derived: `P_J = P_R / L` with `L >= 1`. An infinite
/// ratio yields silent jammers, which is occasionally useful in tests.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerConfig {
    source: f64,
    relay: f64,
    ratio: f64,
}

impl PowerConfig {
    pub fn new(source: f64, relay: f64, ratio: f64) -> Result<Self> {
        if !(source > 0.0) || !(relay > 0.0) {
            return Err(SimError::InvalidPower(format!(
                "transmit powers must be positive (P_S = {source}, P_R = {relay})"
            )));
        }
        if !(ratio >= 1.0) {
            return Err(SimError::InvalidPower(format!(
                "relay-to-jammer power ratio must satisfy L >= 1, got {ratio}"
            )));
        }
        Ok(Self {
            source,
            relay,
            ratio,
        })
    }

    /// Equal source and relay power specified in dB over unit noise.
    pub fn symmetric_db(ps_db: f64, ratio: f64) -> Result<Self> {
        let p = db_to_linear(ps_db);
        Self::new(p, p, ratio)
    }

    pub fn source(&self) -> f64 {
        self.source
    }

    pub fn relay(&self) -> f64 {
        self.relay
    }

    pub fn ratio(&self) -> f64 {
        self.ratio
    }

    /// Jammer transmit power `P_R / L`.
    pub fn jammer(&self) -> f64 {
        self.relay / self.ratio
    }
}

/// `10^(dB/10)` relative to unit noise power.
pub fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

/// One relay plus, in jamming modes, the two per-phase jammers.
///
/// The jammers must differ from the relay but may equal each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CandidateTriple {
    pub relay: usize,
    pub jammers: Option<(usize, usize)>,
}

impl CandidateTriple {
    pub fn relay_only(relay: usize) -> Self {
        Self {
            relay,
            jammers: None,
        }
    }

    pub fn with_jammers(relay: usize, jammer1: usize, jammer2: usize) -> Result<Self> {
        if relay == jammer1 || relay == jammer2 {
            return Err(SimError::InvalidTriple(format!(
                "relay {relay} cannot also serve as a jammer"
            )));
        }
        Ok(Self {
            relay,
            jammers: Some((jammer1, jammer2)),
        })
    }

    pub fn jammer1(&self) -> Option<usize> {
        self.jammers.map(|(j1, _)| j1)
    }

    pub fn jammer2(&self) -> Option<usize> {
        self.jammers.map(|(_, j2)| j2)
    }

    /// Lexicographic key used for deterministic tie-breaking.
    pub(crate) fn index_key(&self) -> (usize, usize, usize) {
        match self.jammers {
            Some((j1, j2)) => (self.relay, j1, j2),
            None => (self.relay, 0, 0),
        }
    }
}

/// Whether and how the artificial interference is present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JammingMode {
    /// Jammers transmit in both phases; nobody can cancel the interference.
    Continuous,
    /// No jammers at all.
    Off,
    /// Jammers transmit, destinations can decode and cancel the jamming but
    /// the eavesdropper cannot. The relay still amplifies the jamming, so
    /// the AF gain keeps its jamming term.
    Known,
}

impl JammingMode {
    pub fn uses_jammers(self) -> bool {
        !matches!(self, JammingMode::Off)
    }
}

/// Which source terminal an SINR refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceNode {
    S1,
    S2,
}

impl SourceNode {
    pub fn index(self) -> usize {
        match self {
            SourceNode::S1 => 0,
            SourceNode::S2 => 1,
        }
    }

    pub fn other(self) -> SourceNode {
        match self {
            SourceNode::S1 => SourceNode::S2,
            SourceNode::S2 => SourceNode::S1,
        }
    }

    pub const BOTH: [SourceNode; 2] = [SourceNode::S1, SourceNode::S2];
}

/// Instantaneous power gains of every link one candidate evaluation needs.
///
/// Jammer entries are zero in non-jamming mode so that a single set of
/// closed forms serves all modes.
#[derive(Debug, Clone, Copy, Default)]
struct LinkPowers {
    s1_to_relay: f64,
    s2_to_relay: f64,
    j1_to_relay: f64,
    relay_to_s1: f64,
    relay_to_s2: f64,
    j2_to_s1: f64,
    j2_to_s2: f64,
    s1_to_eve: f64,
    s2_to_eve: f64,
    j1_to_eve: f64,
    j2_to_eve: f64,
    relay_to_eve: f64,
}

fn check_triple(triple: &CandidateTriple, mode: JammingMode) -> Result<()> {
    match (mode.uses_jammers(), triple.jammers) {
        (true, None) => Err(SimError::MissingJammers),
        (false, Some(_)) => Err(SimError::UnexpectedJammers),
        _ => Ok(()),
    }
}

fn gather_powers(
    realization: &FadingRealization,
    triple: &CandidateTriple,
    mode: JammingMode,
) -> Result<LinkPowers> {
    check_triple(triple, mode)?;
    let relay = NodeId::Intermediate(triple.relay);
    let mut p = LinkPowers {
        s1_to_relay: realization.power_gain(NodeId::Source1, relay)?,
        s2_to_relay: realization.power_gain(NodeId::Source2, relay)?,
        relay_to_s1: realization.power_gain(relay, NodeId::Source1)?,
        relay_to_s2: realization.power_gain(relay, NodeId::Source2)?,
        s1_to_eve: realization.power_gain(NodeId::Source1, NodeId::Eve)?,
        s2_to_eve: realization.power_gain(NodeId::Source2, NodeId::Eve)?,
        relay_to_eve: realization.power_gain(relay, NodeId::Eve)?,
        ..LinkPowers::default()
    };
    if let Some((j1, j2)) = triple.jammers {
        let jam1 = NodeId::Intermediate(j1);
        let jam2 = NodeId::Intermediate(j2);
        p.j1_to_relay = realization.power_gain(jam1, relay)?;
        p.j2_to_s1 = realization.power_gain(jam2, NodeId::Source1)?;
        p.j2_to_s2 = realization.power_gain(jam2, NodeId::Source2)?;
        p.j1_to_eve = realization.power_gain(jam1, NodeId::Eve)?;
        p.j2_to_eve = realization.power_gain(jam2, NodeId::Eve)?;
    }
    Ok(p)
}

/// Same as [`gather_powers`] but with every eavesdropper-link gain replaced
/// by its long-term mean. Non-eavesdropper links stay instantaneous.
fn gather_powers_averaged(
    realization: &FadingRealization,
    avg: &AverageGainView,
    triple: &CandidateTriple,
    mode: JammingMode,
) -> Result<LinkPowers> {
    let mut p = gather_powers(realization, triple, mode)?;
    let relay = NodeId::Intermediate(triple.relay);
    p.s1_to_eve = avg.mean_power_gain(NodeId::Source1, NodeId::Eve)?;
    p.s2_to_eve = avg.mean_power_gain(NodeId::Source2, NodeId::Eve)?;
    p.relay_to_eve = avg.mean_power_gain(relay, NodeId::Eve)?;
    if let Some((j1, j2)) = triple.jammers {
        p.j1_to_eve = avg.mean_power_gain(NodeId::Intermediate(j1), NodeId::Eve)?;
        p.j2_to_eve = avg.mean_power_gain(NodeId::Intermediate(j2), NodeId::Eve)?;
    }
    Ok(p)
}

fn alpha_from(powers: &LinkPowers, power: &PowerConfig) -> f64 {
    // jammer entries are zero when jamming is off, so the J1 term vanishes
    let denom = 1.0
        + powers.s1_to_relay * power.source()
        + powers.s2_to_relay * power.source()
        + powers.j1_to_relay * power.jammer();
    (1.0 / denom).sqrt()
}

/// Every instantaneous SNR component of one candidate evaluation, plus the
/// AF amplification gain.
///
/// Destination-side arrays are indexed by the destination (0 = S1);
/// eavesdropper-side arrays by the originating source.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaSet {
    /// AF amplification gain `alpha`.
    pub alpha: f64,
    /// Relayed data signal at each destination.
    pub signal: [f64; 2],
    /// Phase-1 jamming amplified by the relay, seen at each destination.
    pub jam1_relayed: [f64; 2],
    /// Phase-2 jamming received directly at each destination.
    pub jam2_direct: [f64; 2],
    /// Relay-amplified noise at each destination.
    pub relay_noise: [f64; 2],
    /// Direct source signal overheard by the eavesdropper, per source.
    pub source_at_eve: [f64; 2],
    /// Phase-1 jamming at the eavesdropper.
    pub jam1_at_eve: f64,
    /// Phase-2 jamming at the eavesdropper.
    pub jam2_at_eve: f64,
    /// Relayed source signal overheard by the eavesdropper, per source.
    pub source_relay_at_eve: [f64; 2],
    /// Relay-amplified phase-1 jamming at the eavesdropper.
    pub jam1_relay_at_eve: f64,
    /// Relay-amplified noise at the eavesdropper.
    pub relay_noise_at_eve: f64,
}

fn gammas_from(powers: &LinkPowers, power: &PowerConfig) -> GammaSet {
    let alpha = alpha_from(powers, power);
    let a2 = alpha * alpha;
    let ps = power.source();
    let pr = power.relay();
    let pj = power.jammer();
    GammaSet {
        alpha,
        // at S1 the data came from S2 and vice versa
        signal: [
            a2 * pr * ps * powers.s2_to_relay * powers.relay_to_s1,
            a2 * pr * ps * powers.s1_to_relay * powers.relay_to_s2,
        ],
        jam1_relayed: [
            a2 * pr * pj * powers.j1_to_relay * powers.relay_to_s1,
            a2 * pr * pj * powers.j1_to_relay * powers.relay_to_s2,
        ],
        jam2_direct: [pj * powers.j2_to_s1, pj * powers.j2_to_s2],
        relay_noise: [a2 * pr * powers.relay_to_s1, a2 * pr * powers.relay_to_s2],
        source_at_eve: [ps * powers.s1_to_eve, ps * powers.s2_to_eve],
        jam1_at_eve: pj * powers.j1_to_eve,
        jam2_at_eve: pj * powers.j2_to_eve,
        source_relay_at_eve: [
            a2 * pr * ps * powers.s1_to_relay * powers.relay_to_eve,
            a2 * pr * ps * powers.s2_to_relay * powers.relay_to_eve,
        ],
        jam1_relay_at_eve: a2 * pr * pj * powers.j1_to_relay * powers.relay_to_eve,
        relay_noise_at_eve: a2 * pr * powers.relay_to_eve,
    }
}

/// AF amplification gain `alpha` for one candidate.
///
/// Jamming and known-jamming modes include the phase-1 jamming in the relay's
/// received power; non-jamming mode does not.
pub fn amplification_gain(
    realization: &FadingRealization,
    power: &PowerConfig,
    triple: &CandidateTriple,
    mode: JammingMode,
) -> Result<f64> {
    let powers = gather_powers(realization, triple, mode)?;
    Ok(alpha_from(&powers, power))
}

/// All instantaneous SNR components for one candidate evaluation.
pub fn component_snrs(
    realization: &FadingRealization,
    power: &PowerConfig,
    triple: &CandidateTriple,
    mode: JammingMode,
) -> Result<GammaSet> {
    let powers = gather_powers(realization, triple, mode)?;
    Ok(gammas_from(&powers, power))
}

/// Overall SINR at destination `dest` for data relayed from the other source.
///
/// Continuous jamming leaves both jamming terms in the denominator; with no
/// jamming or decodable jamming only the relay-amplified noise interferes.
pub fn destination_sinr(gammas: &GammaSet, dest: SourceNode, mode: JammingMode) -> f64 {
    let j = dest.index();
    let denom = match mode {
        JammingMode::Continuous => {
            gammas.jam1_relayed[j] + gammas.jam2_direct[j] + gammas.relay_noise[j] + 1.0
        }
        JammingMode::Off | JammingMode::Known => gammas.relay_noise[j] + 1.0,
    };
    gammas.signal[j] / denom
}

fn eavesdropper_sinr_from(gammas: &GammaSet, victim: SourceNode) -> f64 {
    let i = victim.index();
    let j = victim.other().index();
    // MRC over the two phases: direct overhear plus the relayed copy.
    // Jammer terms are zero when jamming is off, which collapses this to the
    // non-jamming expression; the eavesdropper can never cancel the jamming.
    let phase1 = gammas.source_at_eve[i] / (gammas.source_at_eve[j] + gammas.jam1_at_eve + 1.0);
    let phase2 = gammas.source_relay_at_eve[i]
        / (gammas.source_relay_at_eve[j]
            + gammas.jam1_relay_at_eve
            + gammas.jam2_at_eve
            + gammas.relay_noise_at_eve
            + 1.0);
    phase1 + phase2
}

/// MRC-combined eavesdropper SINR on `victim`'s data, instantaneous gains.
pub fn eavesdropper_sinr_instant(
    realization: &FadingRealization,
    power: &PowerConfig,
    triple: &CandidateTriple,
    victim: SourceNode,
    mode: JammingMode,
) -> Result<f64> {
    let gammas = component_snrs(realization, power, triple, mode)?;
    Ok(eavesdropper_sinr_from(&gammas, victim))
}

/// MRC-combined eavesdropper SINR with averaged eavesdropper-link knowledge.
///
/// Every `|h_{.,E}|^2` is replaced by its mean from `avg`; the remaining
/// gains, including those inside `alpha`, stay instantaneous.
pub fn eavesdropper_sinr_average(
    realization: &FadingRealization,
    avg: &AverageGainView,
    power: &PowerConfig,
    triple: &CandidateTriple,
    victim: SourceNode,
    mode: JammingMode,
) -> Result<f64> {
    let powers = gather_powers_averaged(realization, avg, triple, mode)?;
    let gammas = gammas_from(&powers, power);
    Ok(eavesdropper_sinr_from(&gammas, victim))
}

/// Destination and eavesdropper SINRs of one candidate evaluation.
///
/// `dest[i]` is the SINR at terminal `i`; `eve[i]` the eavesdropper's SINR on
/// source `i`'s data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SinrBundle {
    pub dest: [f64; 2],
    pub eve: [f64; 2],
}

/// Computes all four SINRs for one candidate, optionally with averaged
/// eavesdropper knowledge for the eavesdropper side.
pub(crate) fn sinr_bundle(
    realization: &FadingRealization,
    avg: Option<&AverageGainView>,
    power: &PowerConfig,
    triple: &CandidateTriple,
    mode: JammingMode,
) -> Result<SinrBundle> {
    let powers = gather_powers(realization, triple, mode)?;
    let gammas = gammas_from(&powers, power);
    let dest = [
        destination_sinr(&gammas, SourceNode::S1, mode),
        destination_sinr(&gammas, SourceNode::S2, mode),
    ];
    let eve_gammas = match avg {
        None => gammas,
        Some(view) => {
            let averaged = gather_powers_averaged(realization, view, triple, mode)?;
            gammas_from(&averaged, power)
        }
    };
    let eve = [
        eavesdropper_sinr_from(&eve_gammas, SourceNode::S1),
        eavesdropper_sinr_from(&eve_gammas, SourceNode::S2),
    ];
    Ok(SinrBundle { dest, eve })
}
