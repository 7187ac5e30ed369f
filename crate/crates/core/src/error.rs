use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("colour {colour} outside 1..={max}")]
    ColourRange { colour: u32, max: u32 },

    #[error("graded component has {size} basis elements, exceeding the cap {cap}")]
    ResourceLimit { size: u128, cap: u128 },

    #[error("bialgebra is not connected: weight-0 key `{key}` differs from the unit")]
    NonConnected { key: String },

    #[error("position bounds differ: {left} vs {right}")]
    BoundMismatch { left: usize, right: usize },

    #[error("monomial split does not reassemble a monomial-function expansion: {0}")]
    Recognition(String),

    #[error("clock/shift pair violates the Weyl relation in both orientations (d = {0})")]
    Convention(usize),

    #[error("matrix A stayed singular after {0} scale retries")]
    SingularAfterRetries(usize),

    #[error("expression is not a scalar multiple of the identity: {0}")]
    NotScalar(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
