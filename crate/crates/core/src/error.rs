use causal_algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    /// A model parameter violates its invariant.
    #[error("invalid model: {0}")]
    Validation(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("letter from factor {0}, which is not a slot of this state")]
    UnknownSlot(u32),
    #[error("malformed model config: {0}")]
    Config(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type StateResult<T> = Result<T, StateError>;

pub(crate) fn invalid(msg: impl Into<String>) -> StateError {
    StateError::Validation(msg.into())
}

pub(crate) fn dims(msg: impl Into<String>) -> StateError {
    StateError::Dimension(msg.into())
}
