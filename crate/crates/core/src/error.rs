use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} has endpoint {vertex}, but the graph has only {vertex_count} vertices")]
    EndpointOutOfRange {
        edge: usize,
        vertex: usize,
        vertex_count: usize,
    },

    #[error("edge index {edge} is out of range for a graph with {edge_count} edges")]
    EdgeOutOfRange { edge: usize, edge_count: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("exhaustive search refused: {0}")]
    Resource(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator request: {0}")]
    Generator(String),

    #[error("no graph with girth >= {girth} found in {tries} attempts")]
    GenerationExhausted { girth: usize, tries: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
