use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("malformed function spec: {0}")]
    MalformedSpec(String),

    #[error("value outside {{-1,+1}}: {key} -> {value}")]
    ValueOutOfRange { key: String, value: String },

    #[error("unknown builtin function '{0}'")]
    UnknownBuiltin(String),

    #[error("invalid function spec: {0}")]
    InvalidSpec(String),

    #[error("argument must be a positive integer, got {0}")]
    ZeroArgument(u64),

    #[error("{what} = {value} is out of range (limit {limit})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("sieve limit {requested} needs {needed_mb} MB, over the {budget_mb} MB budget")]
    ResourceLimit {
        requested: u64,
        needed_mb: u64,
        budget_mb: u64,
    },

    #[error("invalid checkpoints: {0}")]
    Checkpoints(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("no fit possible: {0}")]
    NoFit(String),

    #[error("Lemma hypothesis violated: f(2^k) = -1 for every k >= 1")]
    HypothesisViolated,

    #[error("search budget of {0} nodes exhausted before any complete assignment")]
    BudgetExhausted(u64),
}
