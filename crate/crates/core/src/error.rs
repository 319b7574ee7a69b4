use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("q must be prime (got {0})")]
    NotPrime(u32),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("{what} out of range: {value} not in [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("vectors over different spaces: ({0}, {1}) vs ({2}, {3})")]
    SpaceMismatch(u32, usize, u32, usize),

    #[error("budget exceeded: {required} entries requested, budget is {budget}")]
    Budget { required: BigUint, budget: u64 },

    #[error("descent invariant violated at level {level}: {detail}")]
    Invariant { level: usize, detail: String },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("degenerate bound: {0}")]
    Degenerate(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
