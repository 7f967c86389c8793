use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge indicator requested for a vertex and itself ({0})")]
    SameVertex(usize),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant broken: {0}")]
    InternalInvariant(String),
    #[error("pattern kind {0} is not supported here")]
    UnsupportedKind(&'static str),
    #[error("vertex {vertex} is not on side {side}")]
    WrongSide { vertex: usize, side: u8 },
    #[error("graph too small: need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("graph too large for exhaustive search: {n} vertices exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("no valid demand split at vertex {0}")]
    Unplantable(usize),
    #[error("demand vectors have length {got}, expected {expected}")]
    DemandLength { expected: usize, got: usize },
    #[error("demand value {0} exceeds the supported bound 2^40")]
    DemandTooLarge(u64),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("no demands given for vertex {0} and no default supplied")]
    MissingDemands(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
