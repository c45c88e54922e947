use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    Domain(String),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("invalid tableau: {0}")]
    Tableau(String),
    #[error("invalid involution: {0}")]
    Involution(String),
    #[error("invalid permutation: {0}")]
    Permutation(String),
    #[error("invalid matrix: {0}")]
    Matrix(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("not a sigma_T image: {0}")]
    NotTableauImage(String),
    #[error("matrix is not the rank matrix of an involution")]
    InvalidRankMatrix,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
