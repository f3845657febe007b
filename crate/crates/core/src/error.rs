use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be positive, got {0}")]
    InvalidRank(usize),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("color {color} not in J = 0..{ell}")]
    InvalidColor { color: usize, ell: usize },
    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),
    #[error("{partition} is not {p}-strict")]
    NotPStrict { partition: String, p: u32 },
    #[error("{0} is not strict")]
    NotStrict(String),
    #[error("{partition} is not a {p}-bar-core")]
    NotBarCore { partition: String, p: u32 },
    #[error("{inner} is not contained in {outer}")]
    NotContained { inner: String, outer: String },
    #[error("node ({row},{col}) is not in the required set")]
    NodeNotAvailable { row: u32, col: u32 },
    #[error("multipartition has {got} components, expected {expected}")]
    ComponentCount { got: usize, expected: usize },
    #[error("colored composition is malformed: {0}")]
    InvalidComposition(String),
    #[error("matrix is not in M(mu, j): {0}")]
    InvalidMatrix(String),
    #[error("division is not exact: {0}")]
    InexactDivision(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
