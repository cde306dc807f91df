use thiserror::Error;

use crate::graph::NodeId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,

    #[error("node {node} is out of range for a graph with {node_count} nodes")]
    NodeOutOfRange { node: NodeId, node_count: usize },

    #[error("edge ({from}, {to}) has invalid weight {weight}; weights must be finite and > 0")]
    InvalidWeight {
        from: NodeId,
        to: NodeId,
        weight: f64,
    },

    #[error("self-loop on node {0}")]
    SelfLoop(NodeId),

    #[error("node set is empty")]
    EmptyNodeSet,

    #[error("centroid list is empty")]
    EmptyCentroids,

    #[error("centroid {0} appears more than once")]
    DuplicateCentroid(NodeId),

    #[error("k = {k} is invalid for a graph with {node_count} nodes (need 1 <= k <= |V|)")]
    InvalidK { k: usize, node_count: usize },

    #[error("unknown centrality measure `{0}`")]
    UnknownMeasure(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{measure} did not converge after {iterations} iterations")]
    NotConverged {
        measure: &'static str,
        iterations: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input is empty")]
    EmptyInput,

    #[error("points {0} and {1} coincide; neighborhood edges need a positive length")]
    CoincidentPoints(usize, usize),

    #[error("mesh edge ({0}, {1}) has zero length")]
    ZeroLengthEdge(usize, usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Whether the error stems from malformed or invalid input data rather
    /// than from running the algorithm.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyInput
                | Error::Io(_)
                | Error::InvalidWeight { .. }
                | Error::SelfLoop(_)
                | Error::NodeOutOfRange { .. }
                | Error::CoincidentPoints(..)
                | Error::ZeroLengthEdge(..)
                | Error::EmptyGraph
        )
    }
}
