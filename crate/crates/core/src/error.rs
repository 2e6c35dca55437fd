use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Failures raised by the algebraic operations.
///
/// Parse failures live in [`crate::parse::ParseError`]; everything here is
/// either a shape mismatch or a violated precondition of an operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid weight vector: {0}")]
    InvalidWeights(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("ideal is not ({weights})-stable: its weighted closure contains {witness}")]
    NotWStable { weights: String, witness: String },

    #[error("ideal is not strongly stable: its Borel closure contains {witness}")]
    NotStronglyStable { witness: String },

    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}
