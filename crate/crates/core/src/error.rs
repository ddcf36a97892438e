use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("empty vertex or edge set")]
    EmptySet,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotBiconnected,
    #[error("value {value} outside the supported range {lo}..={hi}")]
    OutOfRange { value: u64, lo: u64, hi: u64 },
    #[error("graph too small: need at least {needed}, have {have}")]
    TooSmall { needed: usize, have: usize },
    #[error("search budget exceeded: {0}")]
    TooLarge(String),
    #[error("part sizes {sizes:?} do not sum to {n} or contain a zero")]
    SizeMismatch { sizes: Vec<usize>, n: usize },
    #[error("the core has no {k} edge-disjoint spanning trees")]
    PackingInfeasible { k: usize },
    #[error("construction failed: {0}")]
    ConstructionFailed(String),
    #[error("cannot build a connected graph with n={n}, m={m}")]
    InfeasibleDensity { n: usize, m: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
