//! Error type shared by the simulation modules.

use thiserror::Error;

use crate::selection::SchemeId;
use crate::topology::NodeId;

/// Errors produced by topology, channel, SINR, selection and sweep code.
#[derive(Debug, Error)]
pub enum SimError {
    #[error("node {0} does not exist in this topology")]
    InvalidNode(NodeId),

    #[error("link from {0} to itself is undefined")]
    SelfLink(NodeId),

    #[error("nodes {a} and {b} coincide; the link variance d^(-beta) diverges")]
    DegenerateGeometry { a: NodeId, b: NodeId },

    #[error("topology is invalid: {0}")]
    InvalidTopology(String),

    #[error("need at least {required} intermediate nodes, topology has {available}")]
    InsufficientIntermediates { required: usize, available: usize },

    #[error("jamming mode requires a candidate with both jammers")]
    MissingJammers,

    #[error("non-jamming mode cannot evaluate a candidate that carries jammers")]
    UnexpectedJammers,

    #[error("link ({0}, {1}) does not touch the eavesdropper")]
    NotAnEavesdropperLink(NodeId, NodeId),

    #[error("invalid power configuration: {0}")]
    InvalidPower(String),

    #[error("invalid candidate triple: {0}")]
    InvalidTriple(String),

    #[error("SINR inputs must be nonnegative, got {0}")]
    NegativeSinr(f64),

    #[error("scheme {0} selects by switching between two branches; use the switching entry point")]
    SwitchingScheme(SchemeId),

    #[error("scheme {0} is not a switching scheme")]
    NotASwitchingScheme(SchemeId),

    #[error("invalid power grid: {0}")]
    InvalidGrid(String),

    #[error("sweeps need at least one trial")]
    ZeroTrials,

    #[error("curves were computed on different power grids")]
    GridMismatch,

    #[error("slope window contains {0} grid points; need at least 2")]
    InsufficientWindow(usize),

    #[error("scenario mismatch: {0}")]
    ScenarioMismatch(String),

    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Configuration parse error with a line-numbered diagnostic.
///
/// `line` is 1-based; 0 means the error applies to the document as a whole.
#[derive(Debug, Error)]
#[error("config error (line {line}): {message}")]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl ConfigError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }

    /// Error that is not tied to a particular line.
    pub fn general(message: impl Into<String>) -> Self {
        Self::new(0, message)
    }
}

pub type Result<T> = std::result::Result<T, SimError>;
