use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed letter system: {0}")]
    MalformedSystem(String),

    #[error("graph is not a linear forest")]
    NotLinearForest,

    #[error("graph is not a bipartite permutation graph")]
    NotBpg,

    #[error("graph is not a connected chain graph on at least two vertices")]
    NotConnectedChain,

    #[error("{what}: n = {n} exceeds the cap of {cap}")]
    CapExceeded { what: &'static str, n: usize, cap: usize },

    #[error("unsupported instance: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
