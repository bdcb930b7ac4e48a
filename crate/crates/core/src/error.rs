use thiserror::Error;

use crate::graph::EdgeId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("loop at vertex {0}: graphs are loopless")]
    Loop(usize),
    #[error("{what}: order {order} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        order: usize,
        cap: usize,
    },
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("graph is not matching covered")]
    NotMatchingCovered,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("invalid shore: {0}")]
    BadShore(String),
    #[error("vertex {vertex} has degree {degree}, expected 2 with distinct neighbours")]
    NotBicontractible { vertex: usize, degree: usize },
    #[error("invalid edge partition: {0}")]
    BadPartition(String),
    #[error("{0} is not a removable doubleton")]
    NotADoubleton(String),
    #[error("edge {0} belongs to the doubleton")]
    EdgeInDoubleton(EdgeId),
    #[error("edge {0} is not R-compatible")]
    NotRCompatible(EdgeId),
    #[error("illegal family parameters: {0}")]
    IllegalParameters(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
