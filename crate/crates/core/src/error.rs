use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("malformed partition file: {0}")]
    PartitionFile(String),

    #[error("graph order {n} exceeds the supported cap of {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid family spec: {0}")]
    FamilySpec(String),

    #[error("invalid vertex sets: {0}")]
    InvalidSets(String),

    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("block {block} has no coalition evidence")]
    NoEvidence { block: usize },

    #[error("no total {k}-dominating set exists (minimum degree {min_degree})")]
    TotalInfeasible { k: usize, min_degree: usize },

    #[error("graph has no {k}-coalition partition")]
    NoPartition { k: usize },

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not cubic")]
    NotCubic,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("construction failed validation: {0}")]
    Construction(String),
}
