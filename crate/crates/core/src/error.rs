//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("move not applicable: {0}")]
    NotApplicable(String),
    #[error("invalid triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("chain is not a cycle of the dual graph")]
    NotACycle,
    #[error("no move path found within depth limit {depth_limit}")]
    NotFound { depth_limit: usize },
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("division is only defined by invertible monomials: {0}")]
    NonInvertible(String),
    #[error("singular matrix while evaluating {0}")]
    SingularMatrix(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
