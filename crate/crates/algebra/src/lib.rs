//! Free product of finite-dimensional matrix *-algebras.
//!
//! Elements of `A = A_1 * A_2 * ...` are stored as complex linear
//! combinations of reduced words. A reduced word alternates between factors
//! and every letter is one traceless basis matrix of its factor, so the
//! representation of an element is unique.
//!
//! The [`expr`] module provides a small textual language that evaluates to
//! [`FreeElement`]s.

mod algebra;
mod element;
mod error;
pub mod expr;
mod factor;
mod hom;
pub mod rewrite;
mod serial;
mod word;

pub use algebra::{FreeAlgebra, DEFAULT_MAX_WORD_LEN};
pub use element::FreeElement;
pub use error::AlgebraError;
pub use factor::{gell_mann_basis, FactorSpec};
pub use hom::{HomTarget, InducedHom};
pub use word::{BasisLetter, Letter, Word};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
/// Dense complex matrix.
pub type CMatrix = nalgebra::DMatrix<C64>;
/// Dense complex column vector.
pub type CVector = nalgebra::DVector<C64>;

/// Structural checks (tracelessness, hermiticity of basis matrices).
pub const STRUCTURE_TOL: f64 = 1e-12;
/// Coefficients below this magnitude are dropped from canonical forms.
pub const PRUNE_TOL: f64 = 1e-13;
/// Entrywise tolerance for equality of canonical forms.
pub const EQ_TOL: f64 = 1e-10;

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;

/// Largest entry modulus of a complex matrix.
pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}
