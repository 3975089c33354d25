use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("edge {edge} appears {count} times (expected exactly 2)")]
    EdgeMultiplicity { edge: u32, count: usize },
    #[error("inconsistent orientation at crossing {0}")]
    Orientation(usize),
    #[error("crossing index {index} out of range (diagram has {count} crossings)")]
    InvalidSite { index: usize, count: usize },
    #[error("resolution label must be 0 or 1, got {0}")]
    InvalidLabel(u8),
    #[error("expected a knot (1 component), got {0} components")]
    NotAKnot(usize),
    #[error("diagram is disconnected ({0} pieces)")]
    Disconnected(usize),
    #[error("face graph is not bipartite; corrupted diagram")]
    NotBipartite,
    #[error("ring {0} is not a Euclidean domain")]
    NotEuclidean(String),
    #[error("reduced complex requires a base point")]
    MissingBasePoint,
    #[error("crossing count {count} exceeds the configured limit {limit}")]
    TooManyCrossings { count: usize, limit: usize },
    #[error("differential entry is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("homology decomposition incomplete: {0}")]
    DecompositionIncomplete(String),
    #[error("expected exactly one free summand, found {0}")]
    FreeRank(usize),
    #[error("p and q must be coprime integers >= 2 (got {0}, {1})")]
    NotCoprime(i64, i64),
    #[error("determinant is zero")]
    ZeroDeterminant,
    #[error("resolution tree structure mismatch: {0}")]
    StructuralMismatch(String),
    #[error("determinant mismatch at {node}: recorded {recorded}, computed {computed}")]
    DeterminantMismatch {
        node: String,
        recorded: u64,
        computed: u64,
    },
    #[error("leaf cannot be justified: {0}")]
    UnjustifiableLeaf(String),
    #[error("L-space verdict is negative; q_M is not determined by this rule")]
    NotLSpace,
    #[error("empty table")]
    EmptyTable,
    #[error("grading argument inapplicable: {0}")]
    Inapplicable(String),
    #[error("catalog row {row}: {msg}")]
    Catalog { row: usize, msg: String },
    #[error("contradictory evidence for {name}: {msg}")]
    Contradiction { name: String, msg: String },
    #[error("unknown knot name {0}")]
    UnknownKnot(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Syntax(e.to_string())
    }
}
