use thiserror::Error;

/// Errors raised by the diagram, ring and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("partition is not stable under the sign flip")]
    NotZ2Stable,
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("block is not a block of the diagram")]
    UnknownBlock,
    #[error("operation needs a two-row diagram")]
    NotADiagram,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
    #[error("characteristic {0} is not supported (2 must be invertible)")]
    UnsupportedCharacteristic(u64),
    #[error("unknown cell label: {0}")]
    UnknownLabel(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
