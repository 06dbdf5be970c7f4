use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint out of range for a graph with {n} nodes")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },

    #[error("node {node} is out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("undefined for this input: {0}")]
    UndefinedInput(String),

    #[error("{what} is limited to {cap} nodes but the graph has {n}; {hint}")]
    Capacity {
        what: &'static str,
        cap: usize,
        n: usize,
        hint: &'static str,
    },

    #[error("degree sequence is not graphical: {0}")]
    NotGraphical(String),

    #[error("eigensolver did not converge: {0}")]
    NoConvergence(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn undefined(msg: impl Into<String>) -> Self {
        Error::UndefinedInput(msg.into())
    }
}
