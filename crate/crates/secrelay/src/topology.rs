//! Node geometry, path-loss link variances, and the canonical experiment
//! scenarios.
//!
//! All coordinates live in abstract unit-square units; the model never
//! assigns a physical distance scale. A link between nodes `i` and `j` has
//! mean power gain `d_{i,j}^(-beta)` where `d` is the Euclidean distance and
//! `beta` the path-loss exponent.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Result, SimError};

/// Default path-loss exponent used by every preset scenario.
pub const DEFAULT_PATH_LOSS_EXPONENT: f64 = 3.0;

/// Radius of the disc in which clustered intermediate nodes are placed.
///
/// Tight enough that the intra-cluster interference visibly degrades the
/// continuous-jamming schemes, which is the point of the cluster scenarios.
pub const CLUSTER_RADIUS: f64 = 0.05;

const S1_POS: NodePosition = NodePosition { x: 0.0, y: 1.0 };
const S2_POS: NodePosition = NodePosition { x: 1.0, y: 1.0 };
const EVE_CENTER_POS: NodePosition = NodePosition { x: 0.5, y: 0.0 };
const EVE_NEAR_S1_POS: NodePosition = NodePosition { x: 0.0, y: 0.5 };
const CLUSTER_S1_CENTER: NodePosition = NodePosition { x: 0.1, y: 0.9 };
const CLUSTER_EVE_CENTER: NodePosition = NodePosition { x: 0.5, y: 0.1 };

/// Identifies one node of the network.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeId {
    Source1,
    Source2,
    Eve,
    /// Intermediate node by 0-based index.
    Intermediate(usize),
}

impl NodeId {
    /// Dense index used for channel storage: S1=0, S2=1, E=2, intermediates
    /// follow in order.
    pub(crate) fn dense(self, intermediate_count: usize) -> Result<usize> {
        match self {
            NodeId::Source1 => Ok(0),
            NodeId::Source2 => Ok(1),
            NodeId::Eve => Ok(2),
            NodeId::Intermediate(i) if i < intermediate_count => Ok(3 + i),
            NodeId::Intermediate(_) => Err(SimError::InvalidNode(self)),
        }
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeId::Source1 => write!(f, "S1"),
            NodeId::Source2 => write!(f, "S2"),
            NodeId::Eve => write!(f, "E"),
            NodeId::Intermediate(i) => write!(f, "R{i}"),
        }
    }
}

/// A point in the 2D simulation plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodePosition {
    pub x: f64,
    pub y: f64,
}

impl NodePosition {
    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn distance_to(&self, other: &NodePosition) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Explicit node coordinates for a user-defined scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct CustomNodes {
    pub s1: NodePosition,
    pub s2: NodePosition,
    pub eve: NodePosition,
    pub intermediates: Vec<NodePosition>,
}

/// The experiment scenarios exercised by the simulator.
#[derive(Debug, Clone, PartialEq)]
pub enum Scenario {
    /// Sources at (0,1) and (1,1), eavesdropper at (0.5,0), intermediates
    /// uniform over the unit square.
    SparseRandom,
    /// Intermediates clustered in a small disc next to S1.
    ClusterNearS1,
    /// Intermediates clustered in a small disc next to the eavesdropper.
    ClusterNearEve,
    /// Eavesdropper moved to (0,0.5), right next to S1; intermediates
    /// uniform over the unit square.
    EveNearS1,
    /// Explicit coordinates supplied by the caller.
    Custom(CustomNodes),
}

impl Scenario {
    /// Canonical name used in configuration files.
    pub fn name(&self) -> &'static str {
        match self {
            Scenario::SparseRandom => "sparse-random",
            Scenario::ClusterNearS1 => "cluster-near-s1",
            Scenario::ClusterNearEve => "cluster-near-eve",
            Scenario::EveNearS1 => "eve-near-s1",
            Scenario::Custom(_) => "custom",
        }
    }

    /// Builds the topology for this scenario with `k` intermediate nodes.
    ///
    /// Placement is a pure function of `(self, k, placement_seed)`. For
    /// `Custom` the coordinates are used as given and `k` must match their
    /// count; the seed is ignored. The path-loss exponent is set to the
    /// default (3); override with
    /// [`NetworkTopology::with_path_loss_exponent`].
    pub fn instantiate(&self, k: usize, placement_seed: u64) -> Result<NetworkTopology> {
        if k == 0 {
            return Err(SimError::InsufficientIntermediates {
                required: 1,
                available: 0,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(placement_seed);
        let (s1, s2, eve, intermediates) = match self {
            Scenario::SparseRandom => {
                (S1_POS, S2_POS, EVE_CENTER_POS, sample_square(&mut rng, k))
            }
            Scenario::EveNearS1 => {
                (S1_POS, S2_POS, EVE_NEAR_S1_POS, sample_square(&mut rng, k))
            }
            Scenario::ClusterNearS1 => (
                S1_POS,
                S2_POS,
                EVE_CENTER_POS,
                sample_disc(&mut rng, k, CLUSTER_S1_CENTER, CLUSTER_RADIUS),
            ),
            Scenario::ClusterNearEve => (
                S1_POS,
                S2_POS,
                EVE_CENTER_POS,
                sample_disc(&mut rng, k, CLUSTER_EVE_CENTER, CLUSTER_RADIUS),
            ),
            Scenario::Custom(nodes) => {
                if nodes.intermediates.len() != k {
                    return Err(SimError::ScenarioMismatch(format!(
                        "custom scenario has {} intermediate nodes, k = {k} requested",
                        nodes.intermediates.len()
                    )));
                }
                (nodes.s1, nodes.s2, nodes.eve, nodes.intermediates.clone())
            }
        };
        Ok(NetworkTopology {
            s1,
            s2,
            eve,
            intermediates,
            path_loss_exponent: DEFAULT_PATH_LOSS_EXPONENT,
        })
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = String;

    /// Parses the four named scenarios. `custom` is rejected here because it
    /// carries explicit coordinates which a bare name cannot supply.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sparse-random" => Ok(Scenario::SparseRandom),
            "cluster-near-s1" => Ok(Scenario::ClusterNearS1),
            "cluster-near-eve" => Ok(Scenario::ClusterNearEve),
            "eve-near-s1" => Ok(Scenario::EveNearS1),
            other => Err(format!(
                "unknown scenario `{other}` (expected sparse-random, cluster-near-s1, \
                 cluster-near-eve, eve-near-s1 or custom)"
            )),
        }
    }
}

fn sample_square(rng: &mut impl Rng, k: usize) -> Vec<NodePosition> {
    (0..k)
        .map(|_| NodePosition::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0)))
        .collect()
}

fn sample_disc(rng: &mut impl Rng, k: usize, center: NodePosition, radius: f64) -> Vec<NodePosition> {
    (0..k)
        .map(|_| {
            // sqrt on the radial draw keeps the density uniform over the disc
            let r = radius * rng.random_range(0.0..1.0f64).sqrt();
            let theta = rng.random_range(0.0..std::f64::consts::TAU);
            NodePosition::new(center.x + r * theta.cos(), center.y + r * theta.sin())
        })
        .collect()
}

/// A diagnostic reported by [`NetworkTopology::validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum TopologyViolation {
    CoincidentNodes(NodeId, NodeId),
    NonPositivePathLossExponent(f64),
    NoIntermediates,
    NonFiniteCoordinate(NodeId),
}

impl fmt::Display for TopologyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyViolation::CoincidentNodes(a, b) => {
                write!(f, "coincident nodes: {a} and {b} share a position")
            }
            TopologyViolation::NonPositivePathLossExponent(beta) => {
                write!(f, "non-positive path-loss exponent: {beta}")
            }
            TopologyViolation::NoIntermediates => write!(f, "empty intermediate node set"),
            TopologyViolation::NonFiniteCoordinate(n) => {
                write!(f, "non-finite coordinate on node {n}")
            }
        }
    }
}

/// Node geometry for two sources, one eavesdropper and `K` intermediate
/// nodes, plus the path-loss exponent.
///
/// Immutable after construction; cheap to share across workers.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkTopology {
    pub s1: NodePosition,
    pub s2: NodePosition,
    pub eve: NodePosition,
    pub intermediates: Vec<NodePosition>,
    pub path_loss_exponent: f64,
}

impl NetworkTopology {
    pub fn new(
        s1: NodePosition,
        s2: NodePosition,
        eve: NodePosition,
        intermediates: Vec<NodePosition>,
        path_loss_exponent: f64,
    ) -> Self {
        Self {
            s1,
            s2,
            eve,
            intermediates,
            path_loss_exponent,
        }
    }

    /// Replaces the path-loss exponent, keeping the geometry.
    pub fn with_path_loss_exponent(mut self, beta: f64) -> Self {
        self.path_loss_exponent = beta;
        self
    }

    /// Number of intermediate nodes (the paper's `K`).
    pub fn intermediate_count(&self) -> usize {
        self.intermediates.len()
    }

    /// Total node count including sources and eavesdropper.
    pub fn node_count(&self) -> usize {
        self.intermediates.len() + 3
    }

    /// Iterates over every node id: S1, S2, E, then intermediates in order.
    pub fn node_ids(&self) -> impl Iterator<Item = NodeId> + '_ {
        [NodeId::Source1, NodeId::Source2, NodeId::Eve]
            .into_iter()
            .chain((0..self.intermediates.len()).map(NodeId::Intermediate))
    }

    pub fn position(&self, node: NodeId) -> Result<NodePosition> {
        match node {
            NodeId::Source1 => Ok(self.s1),
            NodeId::Source2 => Ok(self.s2),
            NodeId::Eve => Ok(self.eve),
            NodeId::Intermediate(i) => self
                .intermediates
                .get(i)
                .copied()
                .ok_or(SimError::InvalidNode(node)),
        }
    }

    /// Euclidean distance between two distinct nodes.
    pub fn distance(&self, a: NodeId, b: NodeId) -> Result<f64> {
        if a == b {
            return Err(SimError::SelfLink(a));
        }
        Ok(self.position(a)?.distance_to(&self.position(b)?))
    }

    /// Mean power gain of the `a`-`b` link: `d^(-beta)`.
    ///
    /// Symmetric in its arguments and strictly decreasing in distance for
    /// positive exponents.
    pub fn link_variance(&self, a: NodeId, b: NodeId) -> Result<f64> {
        let d = self.distance(a, b)?;
        if d == 0.0 {
            return Err(SimError::DegenerateGeometry { a, b });
        }
        Ok(d.powf(-self.path_loss_exponent))
    }

    /// Checks the structural invariants and returns every violation found.
    ///
    /// An empty vector means the topology is usable.
    pub fn validate(&self) -> Vec<TopologyViolation> {
        let mut violations = Vec::new();
        if self.intermediates.is_empty() {
            violations.push(TopologyViolation::NoIntermediates);
        }
        if !(self.path_loss_exponent > 0.0) {
            violations.push(TopologyViolation::NonPositivePathLossExponent(
                self.path_loss_exponent,
            ));
        }
        let ids: Vec<NodeId> = self.node_ids().collect();
        for &id in &ids {
            let pos = self.position(id).expect("id from node_ids");
            if !pos.is_finite() {
                violations.push(TopologyViolation::NonFiniteCoordinate(id));
            }
        }
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                let pa = self.position(a).expect("id from node_ids");
                let pb = self.position(b).expect("id from node_ids");
                if pa == pb {
                    violations.push(TopologyViolation::CoincidentNodes(a, b));
                }
            }
        }
        violations
    }
}

/// Builds one of the named preset scenarios.
///
/// Convenience wrapper around [`Scenario::instantiate`].
pub fn preset_scenario(scenario: &Scenario, k: usize, placement_seed: u64) -> Result<NetworkTopology> {
    scenario.instantiate(k, placement_seed)
}
