use thiserror::Error;

/// Errors raised anywhere in the algebra, metric and coding layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    /// A nonzero element had no inverse: the defining polynomial of `level`
    /// is not irreducible over the level below.
    #[error("nonzero element is not invertible at tower level {level} ({name}); its defining polynomial is reducible")]
    NonInvertible { level: usize, name: String },
    #[error("division by the zero skew polynomial")]
    DivisionByZeroPolynomial,
    #[error("automorphism is inadmissible: {0}")]
    InadmissibleAutomorphism(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("invalid field tower: {0}")]
    InvalidTower(String),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("elements belong to different field towers or levels")]
    TowerMismatch,
    #[error("invalid rank {rank}: must not exceed {max}")]
    InvalidRank { rank: usize, max: usize },
    #[error("invalid code parameters: {0}")]
    InvalidCode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
