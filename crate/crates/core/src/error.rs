use thiserror::Error;

/// Errors produced across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid cylindric shape: {0}")]
    InvalidCylindricShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid crystal parameters: {0}")]
    InvalidParameters(String),

    #[error("swap index {index} out of range for a tensor with {len} factors")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("internal error: {0}")]
    InternalError(String),

    #[error("soliton extraction did not converge within {0} steps")]
    NonConvergence(usize),

    #[error("invalid rigged configuration: {0}")]
    InvalidRiggedConfiguration(String),

    #[error("polynomial has a negative coefficient and cannot be tropicalized")]
    NotSubtractionFree,

    #[error("cannot tropicalize the zero polynomial")]
    ZeroPolynomial,

    #[error("no ribbon strip could be removed from {0:?}")]
    RibbonRemovalFailure(Vec<usize>),

    #[error("shape differences {0:?} do not form a partition")]
    NotAPartition(Vec<i64>),

    #[error("sequence violates convexity at index {0}")]
    ConvexityViolation(usize),

    #[error("parse error at position {position}: {message}")]
    ParseError { position: usize, message: String },

    #[error("letter {letter} exceeds alphabet size {n}")]
    AlphabetError { letter: u32, n: u32 },

    #[error("word {0:?} is not weakly increasing")]
    NotWeaklyIncreasing(Vec<u32>),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
