use thiserror::Error;

use crate::graph::Vertex;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    /// A caller broke an operation's precondition.
    #[error("contract violation: {0}")]
    Contract(String),

    /// No k admits a cover: `vertex` has no neighbours, so `S = {vertex}`,
    /// `N(S) = {}` is an obstruction for every k.
    #[error("vertex {vertex} is isolated; no number of matchings covers it")]
    IsolatedVertex { vertex: Vertex },

    #[error("oracle refused instance: {what} = {size} exceeds limit {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("weights do not fit in exact integer arithmetic after scaling")]
    WeightOverflow,

    /// Certificate extraction produced a candidate that failed its own check.
    /// Always a defect.
    #[error("internal certificate extraction failed: {0}")]
    Extraction(String),
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
