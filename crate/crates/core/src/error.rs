use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("complexity {found} exceeds the allowed bound {bound}")]
    Complexity { found: usize, bound: usize },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("invalid simplicial set: {0}")]
    InvalidSimplicial(String),

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("boundary does not square to zero in degree {0}")]
    NotSquareZero(i64),

    #[error("arithmetic overflow in {0}")]
    Overflow(String),

    #[error("resource limit: {0}")]
    Limit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
