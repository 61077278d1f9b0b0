use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("unknown factor index {0}")]
    UnknownFactor(u32),

    #[error("dimension mismatch for factor {factor}: expected {expected}x{expected}, got {rows}x{cols}")]
    DimensionMismatch {
        factor: u32,
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("basis index {index} out of range for factor {factor}")]
    BasisIndex { factor: u32, index: u16 },

    #[error("word of length {len} exceeds the configured cap of {cap}")]
    WordTooLong { len: usize, cap: usize },

    #[error("invalid factor basis: {0}")]
    InvalidBasis(String),

    #[error("duplicate factor index {0}")]
    DuplicateFactor(u32),

    #[error("invalid homomorphism target: {0}")]
    InvalidHom(String),

    #[error("malformed element: {0}")]
    Malformed(String),
}
