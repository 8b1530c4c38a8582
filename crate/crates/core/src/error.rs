use crate::graph::{EdgeId, NodeId};

/// Errors surfaced by graph construction and the operations on top of it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    EmptyGraph,
    #[error("self-loop at node {0}")]
    SelfLoop(NodeId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(NodeId, NodeId),
    #[error("node id {id} out of range for {n} nodes")]
    NodeOutOfRange { id: NodeId, n: usize },
    #[error("edge id {id} out of range for {m} edges")]
    EdgeOutOfRange { id: EdgeId, m: usize },
    #[error("duplicate edge id {0}")]
    DuplicateEdgeId(EdgeId),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("selection pool is empty")]
    EmptyPool,
    #[error("individual has no cached fitness")]
    FitnessNotCached,
}

pub type Result<T> = std::result::Result<T, Error>;
