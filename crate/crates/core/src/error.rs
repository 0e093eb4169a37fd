use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} must not belong to the target set")]
    VertexInSet(usize),

    #[error("vertex {0} appears more than once")]
    DuplicateVertex(usize),

    #[error("expected a vertex set of size {expected}, got {actual}")]
    WrongSetSize { expected: usize, actual: usize },

    #[error("weight {weight} on pair ({i}, {j}) is outside [0, 1]")]
    WeightOutOfRange { i: usize, j: usize, weight: String },

    #[error("{what} {value} is outside [0, 1]")]
    OutOfUnitInterval { what: &'static str, value: String },

    #[error("{r} does not divide {n}")]
    Divisibility { n: usize, r: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid factor: {0}")]
    InvalidFactor(String),

    #[error("{what}: {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    #[error("{what}: gave up after {attempts} attempts")]
    BudgetExhausted { what: &'static str, attempts: usize },

    #[error("precondition violated: {reason}")]
    NotMaximum {
        reason: String,
        witness: Vec<Vec<usize>>,
    },

    #[error("internal invariant broken: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
