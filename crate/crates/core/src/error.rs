use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6: {message} at byte {offset}")]
    Graph6 { offset: usize, message: String },

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },

    #[error("{what} needs {requested} vertices, capacity is {limit}")]
    Capacity {
        what: String,
        requested: u128,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0} is not a minimal dominating set: {1}")]
    NotMinimalDominating(String, String),

    #[error("oracle unavailable at this size: {n} vertices exceeds cap {cap}")]
    OracleUnavailable { n: usize, cap: usize },

    #[error("regularity unavailable at this size: {n} vertices exceeds cap {cap}")]
    RegularityUnavailable { n: usize, cap: usize },

    #[error("matching number unavailable: non-bipartite graph with {n} vertices exceeds cap {cap}")]
    MatchingUnavailable { n: usize, cap: usize },

    #[error("unsupported field order {0}; expected one of 2, 3, 4, 5, 7, 8, 9")]
    UnsupportedFieldOrder(u32),

    #[error("integer overflow computing {0}")]
    Overflow(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
