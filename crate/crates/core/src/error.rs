use thiserror::Error;

use crate::numerics::Scalar;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed argument: negative index, precision below the floor, bad literal.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The requested value is undefined, e.g. a principal logarithm of zero.
    #[error("domain error: {0}")]
    Domain(String),

    /// The base is (numerically) a root of unity of an order the operation would hit.
    #[error("base q is too close to a root of unity of order {order}")]
    RootOfUnity { order: u64 },

    /// An infinite product or sum did not meet its stopping rule within the budget.
    #[error("truncation failed after {terms} terms")]
    TruncationFailure { terms: usize, partial: Box<Scalar> },

    /// A lower parameter of a series hit b * q^n = 1.
    #[error("pole: lower parameter {param} vanishes at term {index}")]
    Pole { param: usize, index: usize },

    /// A formula that has no meaning on the requested branch or family.
    #[error("unsupported domain: {0}")]
    UnsupportedDomain(String),

    #[error("unknown identity: {0}")]
    UnknownIdentity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
