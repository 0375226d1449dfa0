use thiserror::Error;

use crate::graph::MAX_ORDER;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("graph order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),

    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    /// Distance-based operations need a connected graph. `reached` and
    /// `unreached` lie in different components.
    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex {reached}")]
    Disconnected { reached: usize, unreached: usize },

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{what} of size {size} exceeds the configured limit of {limit}")]
    LimitExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,

    #[error("malformed size byte {0:#04x}")]
    MalformedLength(u8),

    #[error("graph order {0} needs a multi-byte size header, which is not supported")]
    UnsupportedOrder(usize),

    #[error("byte {byte:#04x} at position {position} is outside the graph6 range 63..=126")]
    InvalidByte { position: usize, byte: u8 },

    #[error("expected {expected} payload bytes, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("{0} trailing bytes after the adjacency payload")]
    TrailingData(usize),

    #[error("padding bits after the adjacency payload are not zero")]
    NonzeroPadding,
}
