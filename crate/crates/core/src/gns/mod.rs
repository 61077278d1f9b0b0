//! The Hilbert space of a generalized state on a truncated word basis.
//!
//! Words of length at most `L` span the truncated algebra. Their Gram
//! matrix `G[a][b] = ω(a*, b)` is the would-be inner product; modding out
//! its numerical null space gives the quotient, with `Ω = [e]`. Left
//! multiplication by a generator is well defined on the quotient only when
//! the null space is a left ideal, which is measured, never assumed.
//! Representation matrices act on classes of words of length at most
//! `L − 1`, so that every image stays inside the basis.

mod basis;
mod pipeline;
mod rep;
mod spectral;

pub use basis::WordBasis;
pub use pipeline::{run, GnsOptions, GnsReport, GnsResult};
pub use rep::{
    check_left_ideal, reconstruct_check, represent, represent_all, LeftIdealReport,
    Representation,
};
pub use spectral::{gram, null_space, NullSpace};

use thiserror::Error;

use crate::StateError;

/// Default truncation level.
pub const DEFAULT_MAX_LEN: usize = 3;
/// Relative null-space tolerance, scaled by the largest Gram eigenvalue.
pub const NULL_TOL: f64 = 1e-8;
/// Allowed `max |G − G†|`.
pub const HERMITIAN_TOL: f64 = 1e-9;
/// Allowed negative part of the Gram spectrum.
pub const PSD_TOL: f64 = 1e-8;
/// Allowed `ω((ba)*, ba)` for unit null vectors `a` and generators `b`.
pub const LEFT_IDEAL_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GnsError {
    #[error("Gram matrix is not hermitian: max |G − G†| = {defect:.3e}")]
    NotHermitian { defect: f64 },
    #[error("Gram matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },
    #[error(
        "null space is not a left ideal: max ω((ba)*, ba) = {violation:.3e} exceeds {tol:.1e}; \
         the representation is not well defined"
    )]
    LeftIdeal { violation: f64, tol: f64 },
    #[error("word of length {len} is outside the representation domain (length ≤ {max})")]
    OutOfRange { len: usize, max: usize },
    #[error(transparent)]
    State(#[from] StateError),
}
