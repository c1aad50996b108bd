//! Block-fading channel realizations and the averaged eavesdropper view.
//!
//! Each coherence interval draws one zero-mean circularly-symmetric complex
//! Gaussian gain per link with variance `d^(-beta)`, so the power gain
//! `|h|^2` is exponential with that mean. Channels are reciprocal within a
//! coherence interval by default; an opt-out exists for sensitivity studies.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Result, SimError};
use crate::topology::{NetworkTopology, NodeId};

/// Complex channel gains for every node pair of one coherence interval.
///
/// Storage is one gain per unordered pair. With reciprocity disabled a second
/// set of independent draws covers the reverse directions; the forward draw
/// then applies to the low-to-high dense-index direction.
#[derive(Debug, Clone, PartialEq)]
pub struct FadingRealization {
    intermediate_count: usize,
    forward: Vec<Complex64>,
    forward_power: Vec<f64>,
    reverse: Option<Vec<Complex64>>,
    reverse_power: Option<Vec<f64>>,
}

fn pair_count(nodes: usize) -> usize {
    nodes * (nodes - 1) / 2
}

/// Triangular index of the unordered pair `(lo, hi)`, `lo < hi < nodes`.
fn pair_index(lo: usize, hi: usize, nodes: usize) -> usize {
    debug_assert!(lo < hi && hi < nodes);
    lo * (2 * nodes - lo - 1) / 2 + (hi - lo - 1)
}

impl FadingRealization {
    /// Number of intermediate nodes the realization covers.
    pub fn intermediate_count(&self) -> usize {
        self.intermediate_count
    }

    fn nodes(&self) -> usize {
        self.intermediate_count + 3
    }

    /// Instantaneous complex gain of the directed link `from -> to`.
    pub fn gain(&self, from: NodeId, to: NodeId) -> Result<Complex64> {
        let (idx, reversed) = self.directed_index(from, to)?;
        let table = match (&self.reverse, reversed) {
            (Some(rev), true) => rev,
            _ => &self.forward,
        };
        Ok(table[idx])
    }

    /// Instantaneous power gain `|h|^2` of the directed link `from -> to`.
    pub fn power_gain(&self, from: NodeId, to: NodeId) -> Result<f64> {
        let (idx, reversed) = self.directed_index(from, to)?;
        let table = match (&self.reverse_power, reversed) {
            (Some(rev), true) => rev,
            _ => &self.forward_power,
        };
        Ok(table[idx])
    }

    fn directed_index(&self, from: NodeId, to: NodeId) -> Result<(usize, bool)> {
        if from == to {
            return Err(SimError::SelfLink(from));
        }
        let a = from.dense(self.intermediate_count)?;
        let b = to.dense(self.intermediate_count)?;
        if a < b {
            Ok((pair_index(a, b, self.nodes()), false))
        } else {
            Ok((pair_index(b, a, self.nodes()), true))
        }
    }

    /// Builds a reciprocal realization from an explicit gain function.
    ///
    /// `gain_fn` is called once per unordered pair, in dense-index order with
    /// the lower-indexed node first. Intended for hand-built test fixtures.
    pub fn from_gain_fn(
        intermediate_count: usize,
        mut gain_fn: impl FnMut(NodeId, NodeId) -> Complex64,
    ) -> Self {
        let nodes = intermediate_count + 3;
        let ids: Vec<NodeId> = node_ids(intermediate_count).collect();
        let mut forward = Vec::with_capacity(pair_count(nodes));
        for i in 0..nodes {
            for j in i + 1..nodes {
                forward.push(gain_fn(ids[i], ids[j]));
            }
        }
        let forward_power = forward.iter().map(|h| h.norm_sqr()).collect();
        Self {
            intermediate_count,
            forward,
            forward_power,
            reverse: None,
            reverse_power: None,
        }
    }

    /// Uniform unit gains on every link; handy starting point for fixtures.
    pub fn all_unit(intermediate_count: usize) -> Self {
        Self::from_gain_fn(intermediate_count, |_, _| Complex64::new(1.0, 0.0))
    }
}

fn node_ids(intermediate_count: usize) -> impl Iterator<Item = NodeId> {
    [NodeId::Source1, NodeId::Source2, NodeId::Eve]
        .into_iter()
        .chain((0..intermediate_count).map(NodeId::Intermediate))
}

fn draw_gain_table(
    topology: &NetworkTopology,
    rng: &mut impl Rng,
) -> Result<(Vec<Complex64>, Vec<f64>)> {
    let ids: Vec<NodeId> = topology.node_ids().collect();
    let nodes = ids.len();
    let mut gains = Vec::with_capacity(pair_count(nodes));
    for i in 0..nodes {
        for j in i + 1..nodes {
            let variance = topology.link_variance(ids[i], ids[j])?;
            // per-component std so that E[|h|^2] = variance
            let std = (variance / 2.0).sqrt();
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            gains.push(Complex64::new(re * std, im * std));
        }
    }
    let powers = gains.iter().map(|h| h.norm_sqr()).collect();
    Ok((gains, powers))
}

/// Draws one reciprocal block-fading realization from `rng`.
///
/// Every link gain is an independent zero-mean circularly-symmetric complex
/// Gaussian with variance `link_variance(a, b)`. Deterministic given the
/// stream state; parallel trials must use independently derived sub-streams.
pub fn draw_realization(
    topology: &NetworkTopology,
    rng: &mut impl Rng,
) -> Result<FadingRealization> {
    draw_realization_opts(topology, rng, true)
}

/// [`draw_realization`] with reciprocity control.
///
/// With `reciprocal = false` every directed link gets its own independent
/// draw; the reverse-direction table is drawn after the forward one.
pub fn draw_realization_opts(
    topology: &NetworkTopology,
    rng: &mut impl Rng,
    reciprocal: bool,
) -> Result<FadingRealization> {
    let (forward, forward_power) = draw_gain_table(topology, rng)?;
    let (reverse, reverse_power) = if reciprocal {
        (None, None)
    } else {
        let (g, p) = draw_gain_table(topology, rng)?;
        (Some(g), Some(p))
    };
    Ok(FadingRealization {
        intermediate_count: topology.intermediate_count(),
        forward,
        forward_power,
        reverse,
        reverse_power,
    })
}

/// Mean power gains for the links that touch the eavesdropper.
///
/// This is the averaged channel knowledge available to the suboptimal
/// schemes: long-term supervision of the eavesdropper links yields exactly
/// the geometric mean gain `d^(-beta)`, so the view is computed analytically.
#[derive(Debug, Clone, PartialEq)]
pub struct AverageGainView {
    s1_eve: f64,
    s2_eve: f64,
    intermediates_eve: Vec<f64>,
}

impl AverageGainView {
    /// Mean power gain of the link `(a, b)`.
    ///
    /// Exactly one endpoint must be the eavesdropper; other links are outside
    /// this knowledge set.
    pub fn mean_power_gain(&self, a: NodeId, b: NodeId) -> Result<f64> {
        let other = match (a, b) {
            (NodeId::Eve, NodeId::Eve) => return Err(SimError::SelfLink(NodeId::Eve)),
            (NodeId::Eve, n) | (n, NodeId::Eve) => n,
            _ => return Err(SimError::NotAnEavesdropperLink(a, b)),
        };
        match other {
            NodeId::Source1 => Ok(self.s1_eve),
            NodeId::Source2 => Ok(self.s2_eve),
            NodeId::Intermediate(i) => self
                .intermediates_eve
                .get(i)
                .copied()
                .ok_or(SimError::InvalidNode(other)),
            NodeId::Eve => unreachable!(),
        }
    }
}

/// Computes the averaged eavesdropper-link view for a topology.
pub fn average_gain_view(topology: &NetworkTopology) -> Result<AverageGainView> {
    Ok(AverageGainView {
        s1_eve: topology.link_variance(NodeId::Source1, NodeId::Eve)?,
        s2_eve: topology.link_variance(NodeId::Source2, NodeId::Eve)?,
        intermediates_eve: (0..topology.intermediate_count())
            .map(|i| topology.link_variance(NodeId::Intermediate(i), NodeId::Eve))
            .collect::<Result<_>>()?,
    })
}
