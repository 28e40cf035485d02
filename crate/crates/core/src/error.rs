use alloc::string::String;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("coloring is incomplete ({uncolored} uncolored vertices)")]
    IncompleteColoring { uncolored: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("group too large: more than {cap} automorphisms")]
    GroupTooLarge { cap: usize },
    #[error("resource budget exceeded: {0}")]
    Resource(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that mean "ran out of budget" rather than "wrong input".
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::GroupTooLarge { .. } | Error::Resource(_))
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
