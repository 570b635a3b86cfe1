use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation word {word:?}: {reason}")]
    InvalidPermutation { word: Vec<usize>, reason: &'static str },

    #[error("not a standard cyclic form: {0}")]
    NotStandardForm(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("transposition ({i},{j}) is not valid for S_{n}")]
    InvalidTransposition { i: usize, j: usize, n: usize },

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("n = {n} exceeds the configured bound {max}")]
    BoundExceeded { n: usize, max: usize },

    #[error("composition {lambda} sums to {sum}, expected {n}")]
    CompositionSum { lambda: String, sum: usize, n: usize },

    #[error("operation undefined for composition {lambda}: {reason}")]
    Undefined { lambda: String, reason: &'static str },

    #[error("{0} is not a member of the poset")]
    NotMember(String),

    #[error("elements {0} and {1} are not comparable")]
    Incomparable(String, String),

    #[error("degenerate interval: bottom equals top")]
    DegenerateInterval,

    #[error("poset construction failed: {0}")]
    NotGraded(String),
}

pub type Result<T> = std::result::Result<T, Error>;
