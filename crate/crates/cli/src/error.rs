use causal_algebra::expr::{EvalError, ParseError};
use causal_algebra::AlgebraError;
use causal_core::gns::GnsError;
use causal_core::StateError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(EvalError),
    #[error(transparent)]
    State(#[from] StateError),
    #[error(transparent)]
    Gns(GnsError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    Verify(String),
}

impl From<EvalError> for CliError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::Algebra(a) => CliError::State(StateError::Algebra(a)),
            other => CliError::Eval(other),
        }
    }
}

impl From<GnsError> for CliError {
    fn from(e: GnsError) -> Self {
        match e {
            GnsError::State(s) => CliError::State(s),
            other => CliError::Gns(other),
        }
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::State(StateError::Algebra(e))
    }
}

fn algebra_code(e: &AlgebraError) -> i32 {
    match e {
        AlgebraError::DimensionMismatch { .. }
        | AlgebraError::WordTooLong { .. }
        | AlgebraError::UnknownFactor(_)
        | AlgebraError::BasisIndex { .. } => 4,
        _ => 3,
    }
}

impl CliError {
    /// 1: a checked property failed; 2: expression or usage error;
    /// 3: the model does not load or validate; 4: dimension mismatch.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Eval(_) | CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::State(e) => match e {
                StateError::Validation(_) | StateError::Config(_) => 3,
                StateError::Dimension(_) | StateError::UnknownSlot(_) => 4,
                StateError::Algebra(a) => algebra_code(a),
            },
            CliError::Gns(GnsError::OutOfRange { .. }) => 4,
            CliError::Gns(_) | CliError::Verify(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
