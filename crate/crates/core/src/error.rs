use thiserror::Error;

/// Errors surfaced by the algebraic routines and the verification front-end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeCapExceeded { degree: usize, cap: usize },

    #[error("truncation order {order} exceeds the hard cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("series orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: &'static str, right: &'static str },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("constant term is not invertible")]
    NotInvertible,

    #[error("structure constants are not known for this model")]
    UnknownConstants,

    #[error("pairing must be nonzero")]
    ZeroPairing,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("inexact integer division while eliminating {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
