use alloc::string::String;

/// Errors produced by the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("boundary parse error at byte {offset}: {reason}")]
    BoundaryParse { offset: usize, reason: &'static str },

    #[error("malformed boundary configuration: {0}")]
    MalformedConfig(&'static str),

    #[error("partition parse error: {0}")]
    PartitionParse(String),

    #[error("coefficient parse error: {0}")]
    CoefficientParse(String),

    #[error("circle index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(&'static str),

    #[error("unknown edge label {0}")]
    UnknownEdge(String),

    #[error("edges of a chain must be distinct")]
    SameEdge,

    #[error("malformed partition: {0}")]
    MalformedPartition(&'static str),

    #[error("partition is not an admissible colouring")]
    NotAdmissible,

    #[error("boundary configurations do not match: {0}")]
    ConfigMismatch(&'static str),

    /// A composite connectivity failed the admissibility test. This would
    /// contradict the realisability of composites by minimal diagrams.
    #[error("composite is not admissible: {0}")]
    InadmissibleComposite(String),

    #[error("basis has {size} classes, over the limit of {limit}")]
    BasisLimit { size: usize, limit: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
