use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("empty prime interval ({lo}, {hi}]")]
    EmptyPrimeInterval { lo: u64, hi: u64 },

    #[error("invalid interval: lo={lo} > hi={hi}")]
    InvalidInterval { lo: u64, hi: u64 },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("empty set")]
    EmptySet,

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("invalid sample: {0}")]
    InvalidSample(String),

    #[error("element {0} has no two-prime label")]
    MissingLabel(u64),

    #[error("set of size {size} exceeds the exhaustive limit of {limit}")]
    ExhaustiveLimit { size: usize, limit: usize },

    #[error("{what} is only feasible up to {cap}, got {got}")]
    FeasibilityCap {
        what: &'static str,
        cap: usize,
        got: usize,
    },

    #[error("search for {0} did not finish within the node budget")]
    NotCertified(&'static str),

    #[error("fit needs at least 3 usable rows, got {0}")]
    TooFewRows(usize),

    #[error("metric value {0} is not positive")]
    NonPositiveMetric(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub(crate) fn overflow(what: impl Into<String>) -> Error {
    Error::Overflow(what.into())
}
