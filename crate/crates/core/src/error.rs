use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model configuration: {0}")]
    InvalidConfig(String),

    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),

    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),

    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),

    #[error("the graph has no vertices")]
    EmptyGraph,

    #[error("naive oracle is limited to {cap} vertices, graph has {actual}")]
    NaiveCapExceeded { cap: usize, actual: usize },

    #[error("edge {0} compared with itself")]
    IdenticalEdges(String),

    #[error("edge {0} is not an edge of the zero-set model")]
    NotModelEdge(String),

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("the sweep contains no configurations")]
    EmptySweep,

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
