use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("symbol {symbol:?} is not in the alphabet")]
    UnknownSymbol { symbol: String },

    #[error("letter index {index} outside alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("{what} limit exceeded: more than {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("unknown catalog language {0:?}")]
    UnknownLanguage(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("index range is reversed: lo={lo} > hi={hi}")]
    ReversedRange { lo: u64, hi: u64 },

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("assignment has {got} bits but the formula uses {needed} variables")]
    ArityMismatch { needed: usize, got: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("malformed input: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    /// Whether the error is a resource cap rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
