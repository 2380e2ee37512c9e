use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("not a Leibniz algebra: identity fails at basis triple {0:?}")]
    NotLeibniz((usize, usize, usize)),
    #[error("not a Lie algebra: {0}")]
    NotLie(String),
    #[error("cochain is not anti-cyclic")]
    NotAntiCyclic,
    #[error("tensor carries no dual-bracket expression")]
    MissingDualExpression,
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
