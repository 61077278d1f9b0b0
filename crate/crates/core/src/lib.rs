//! Generalized states on free product algebras.
//!
//! A generalized state is a bilinear functional `ω : A × A → C` with
//! `ω(a*, a) ≥ 0` and `ω(e, e) = 1`. Every family provided here has the
//! form `ω(p, q) = ⟨amp(p*) | amp(q)⟩`, where `amp` first groups the letters
//! of a word into one operator per slot and then feeds those operators
//! through a fixed amplitude circuit:
//!
//! * [`SequentialModel`]: operators interleaved with evolutions on one space.
//! * [`SwitchModel`]: two orders of `x` and `y` coherently controlled by a qubit.
//! * [`FuzzModel`]: a weighted sum over any number of ordered branches.
//! * [`SuperspacetimeModel`]: branches generated from Hamiltonians and
//!   identification maps, converted into a [`FuzzModel`].
//!
//! The [`gns`] module builds the truncated Hilbert space of a state.

pub mod config;
mod error;
pub mod gns;
mod group;
pub mod linalg;
mod models;
pub mod random;
mod state;

pub use config::{default_symbols, LoadedModel, ModelConfig, CONFIG_VERSION};
pub use error::{StateError, StateResult};
pub use group::group_by_factor;
pub use models::{
    amplitude_fuzz, amplitude_switch, lift_control_diagonal, Family, FuzzBranch, FuzzModel,
    Model, Order, SequentialModel, SstBranch, SuperspacetimeModel, SwitchModel, SLOT_U, SLOT_V,
    SLOT_X, SLOT_Y,
};
pub use state::{eval_bilinear, AmplitudeModel, CachedState, GeneralizedState};

pub use causal_algebra::{CMatrix, CVector, C64};

/// Tolerance for unitarity of model unitaries.
pub const UNITARY_TOL: f64 = 1e-10;
/// Tolerance for hermiticity of Hamiltonians.
pub const HERMITIAN_TOL: f64 = 1e-10;
/// Tolerance for `ω(e, e) = 1` and `‖ψ‖ = 1`.
pub const NORM_TOL: f64 = 1e-10;
