use thiserror::Error;

/// Errors raised by the code toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unsupported length {0} (words are packed into 64-bit planes)")]
    UnsupportedLength(usize),

    #[error("cannot infer the length of an empty generator list")]
    EmptyGenerators,

    #[error("operation needs a nonzero code")]
    ZeroCode,

    #[error("code has 2^{dim2} words, above the enumeration limit 2^{limit}")]
    TooLarge { dim2: usize, limit: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("enumerator is not in the invariant ring (residual at index {index})")]
    NotInvariant { index: usize },

    #[error("transform produced a non-integral coefficient at index {index}")]
    NonIntegral { index: usize },

    #[error("unknown standard code `{0}`")]
    UnknownCode(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("search budget exhausted")]
    BudgetExhausted,

    #[error("audit failed: {0}")]
    Audit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
