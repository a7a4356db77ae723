use thiserror::Error;

/// Errors raised by graph construction, parsing and the solvers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid arrangement: {0}")]
    InvalidArrangement(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("malformed interval for vertex {vertex}: start {start} > end {end}")]
    MalformedInterval {
        vertex: usize,
        start: String,
        end: String,
    },

    #[error("clique range [{lo}, {hi}] out of bounds for n = {n}")]
    RangeOutOfBounds { lo: usize, hi: usize, n: usize },

    #[error("instance too large for exhaustive search: n = {n} exceeds limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("arithmetic overflow while accumulating {0}")]
    Overflow(&'static str),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
