use thiserror::Error;

/// Errors produced by validation, counting, and search operations.
///
/// Every variant carries enough context to diagnose the offending input;
/// [`Error::code`] exposes a stable machine-readable identifier for each
/// variant so front ends can map errors without string matching.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("hypergraph must have at least one vertex")]
    EmptyVertexSet,

    #[error("edge {edge} contains vertex {vertex}, outside 0..{n}")]
    OutOfRangeVertex {
        edge: usize,
        vertex: usize,
        n: usize,
    },

    #[error("edge {edge} has {len} vertices after deduplication; edges need at least 2")]
    EdgeTooSmall { edge: usize, len: usize },

    #[error("edges {first} and {second} are equal")]
    DuplicateEdge { first: usize, second: usize },

    #[error("edge {inner} is contained in edge {outer}; only simple hypergraphs are supported")]
    EdgeContainment { inner: usize, outer: usize },

    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("operation needs {required} elementary steps, over the budget of {limit}")]
    ResourceLimit { required: u128, limit: u128 },

    #[error("interpolation produced a non-integral coefficient: {detail}")]
    NonIntegralCoefficient { detail: String },

    #[error("arguments outside the formula's domain: {detail}")]
    DomainError { detail: String },

    #[error("operation requires a uniform hypergraph (all edges the same size)")]
    NotUniform,

    #[error("partial map {map_index} refers to edge {edge}, which does not exist")]
    DomainNotAnEdge { map_index: usize, edge: usize },

    #[error("partial map {map_index} is malformed: {detail}")]
    BadAssignment { map_index: usize, detail: String },

    #[error("maps {first} and {second} on edge {edge} agree at a vertex")]
    DisjointnessViolation {
        edge: usize,
        first: usize,
        second: usize,
    },

    #[error("edge {edge} carries {count} maps; a {k}-fold cover allows at most {k}")]
    TooManyMapsOnEdge { edge: usize, count: usize, k: usize },

    #[error("invalid cover: {detail}")]
    InvalidCover { detail: String },

    #[error("edge {edge} carries {have} of the {k} maps needed for a full cover")]
    NotFull { edge: usize, have: usize, k: usize },

    #[error("bad generator parameters: {detail}")]
    BadParameters { detail: String },
}

impl Error {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyVertexSet => "EmptyVertexSet",
            Error::OutOfRangeVertex { .. } => "OutOfRangeVertex",
            Error::EdgeTooSmall { .. } => "EdgeTooSmall",
            Error::DuplicateEdge { .. } => "DuplicateEdge",
            Error::EdgeContainment { .. } => "EdgeContainment",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::ResourceLimit { .. } => "ResourceLimit",
            Error::NonIntegralCoefficient { .. } => "NonIntegralCoefficient",
            Error::DomainError { .. } => "DomainError",
            Error::NotUniform => "NotUniform",
            Error::DomainNotAnEdge { .. } => "DomainNotAnEdge",
            Error::BadAssignment { .. } => "BadAssignment",
            Error::DisjointnessViolation { .. } => "DisjointnessViolation",
            Error::TooManyMapsOnEdge { .. } => "TooManyMapsOnEdge",
            Error::InvalidCover { .. } => "InvalidCover",
            Error::NotFull { .. } => "NotFull",
            Error::BadParameters { .. } => "BadParameters",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
