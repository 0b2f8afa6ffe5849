use thiserror::Error;

/// Errors reported by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at node {node}")]
    SelfLoop { node: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("node {node} out of range for a graph on {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} has size {size}, above the cap of {cap}")]
    SizeCapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("constraints admit no bond")]
    Infeasible,
    #[error("arithmetic overflow")]
    ArithmeticOverflow,
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is not 3-connected")]
    NotThreeConnected,
    #[error("graph is not K5-e minor free: block {block}, skeleton {skeleton} is {found}")]
    NotK5eMinorFree {
        block: usize,
        skeleton: usize,
        found: String,
    },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("input inequality is not facet-defining")]
    NotAFacet,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
