use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors raised by graph construction and graph invariants.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected; the Wiener index is undefined")]
    Disconnected,
    #[error("canonical form supports at most {limit} vertices, got {order}")]
    CanonicalLimit { order: usize, limit: usize },
    #[error("labeling is not a permutation of 0..{0}")]
    InvalidPermutation(usize),
}

/// What went wrong while decoding a graph6 line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("byte 0x{0:02x} is outside the printable graph6 range 63..=126")]
    InvalidByte(u8),
    #[error("truncated input: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("unexpected trailing data")]
    TrailingData,
    #[error("nonzero padding bits in the last body byte")]
    NonzeroPadding,
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(u64),
}

/// A graph6 decoding failure, located by byte offset into the input line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph6 parse error at byte {offset}: {kind}")]
pub struct Graph6Error {
    pub offset: usize,
    pub kind: Graph6ErrorKind,
}

impl Graph6Error {
    pub(crate) fn new(offset: usize, kind: Graph6ErrorKind) -> Self {
        Self { offset, kind }
    }
}

/// Invalid parameters passed to a graph family builder or a closed-form formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("{name} = {value} is below the minimum {min}")]
    BelowMinimum {
        name: &'static str,
        value: usize,
        min: usize,
    },
    #[error("part sizes must satisfy p <= q, got p = {p}, q = {q}")]
    UnorderedParts { p: usize, q: usize },
    #[error("order {order} exceeds the limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Top-level error for enumeration and verification.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error("p + q = {order} exceeds max_n = {max_n}")]
    OrderAboveMax { order: usize, max_n: usize },
    #[error("max_n = {0} exceeds the enumeration limit {limit}", limit = crate::enumerate::ENUMERATION_LIMIT)]
    MaxNTooLarge(usize),
}
