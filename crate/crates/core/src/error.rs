use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size {0} is outside 2..=16")]
    InvalidAlphabet(usize),

    #[error("value {value} is outside E_{k}")]
    ValueOutOfRange { value: usize, k: u8 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("alphabet mismatch: expected k={expected}, found k={found}")]
    AlphabetMismatch { expected: u8, found: u8 },

    #[error("factor for x{var} is empty")]
    EmptyFactor { var: usize },

    #[error("elementary conjunction with gamma = 0 is identically zero")]
    ZeroGamma,

    #[error("defined sets overlap at {0}")]
    Overlap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("criterion not applicable: term {term} is narrower than the absorbed conjunction on x{var}")]
    NotApplicable { term: usize, var: usize },

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
