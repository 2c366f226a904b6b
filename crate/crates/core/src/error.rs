use thiserror::Error;

/// Errors produced by graph construction, the games and the derived solvers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebbleError {
    #[error("invalid parameters k={k}, l={l}: {reason}")]
    InvalidParams {
        k: u32,
        l: u32,
        reason: &'static str,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("weighted and unweighted edges cannot be mixed")]
    MixedWeights,

    #[error("weight {0} is not a finite number")]
    BadWeight(String),

    #[error("no tight graph exists on {n} vertices for k={k}, l={l}")]
    NoTightGraph { k: u32, l: u32, n: usize },

    #[error("oracle is limited to {limit} vertices, graph has {n}")]
    OracleCapacity { limit: usize, n: usize },

    #[error("graph is not sparse")]
    NotSparse,

    #[error("graph is not tight")]
    NotTight,

    #[error("vertex {0} already holds the maximum number of pebbles")]
    PebbleOverflow(usize),

    #[error("edge {u}-{v} is independent of the accepted edges")]
    IndependentEdge { u: usize, v: usize },

    #[error("graph has no weights")]
    Unweighted,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("graph on {n} vertices is already a base case")]
    BaseCase { n: usize },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, PebbleError>;
