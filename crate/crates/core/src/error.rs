use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported root system {family} of rank {rank}")]
    UnsupportedFamily { family: String, rank: usize },

    #[error("vectors or forms live in different bases ({left} vs {right})")]
    BasisMismatch { left: String, right: String },

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("Weyl orbit exceeds the cap of {cap} elements")]
    OrbitCapExceeded { cap: usize },

    #[error("word {word:?} is not reduced")]
    NonReducedWord { word: Vec<usize> },

    #[error("node {node} has highest-root coefficient {coefficient}, expected {expected}")]
    NodeNotOrderTwo {
        node: usize,
        coefficient: i64,
        expected: i64,
    },

    #[error("{space} carries no spin structure")]
    NoSpinStructure { space: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid symmetric pair: {0}")]
    InvalidPair(String),

    #[error("integer overflow in orbit arithmetic")]
    ArithmeticOverflow,

    #[error("spin weight characterization failed: {0}")]
    CharacterizationViolated(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
