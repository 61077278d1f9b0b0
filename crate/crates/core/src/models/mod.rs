mod fuzz;
mod lift;
mod sequential;
mod superspacetime;
mod switch;

use causal_algebra::{CMatrix, CVector, FreeAlgebra};

pub use fuzz::{amplitude_fuzz, FuzzBranch, FuzzModel, Order};
pub use lift::lift_control_diagonal;
pub use sequential::SequentialModel;
pub use superspacetime::{SstBranch, SuperspacetimeModel};
pub use switch::{amplitude_switch, SwitchModel};

use crate::error::{dims, invalid};
use crate::linalg::unitarity_defect;
use crate::{AmplitudeModel, StateResult, NORM_TOL, UNITARY_TOL};

/// Factor carrying the `x` operators of the switch and fuzz families.
pub const SLOT_X: u32 = 1;
pub const SLOT_Y: u32 = 2;
/// Factor carrying `u`, which acts on control ⊗ target before the branches.
pub const SLOT_U: u32 = 3;
/// Factor carrying `v`, which acts on control ⊗ target after the branches.
pub const SLOT_V: u32 = 4;

const SWITCH_SLOTS: [u32; 4] = [SLOT_X, SLOT_Y, SLOT_U, SLOT_V];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Sequential,
    Switch,
    Fuzz,
    Superspacetime,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Sequential => "sequential",
            Family::Switch => "switch",
            Family::Fuzz => "fuzz",
            Family::Superspacetime => "superspacetime",
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Any of the built-in families.
#[derive(Debug, Clone)]
pub enum Model {
    Sequential(SequentialModel),
    Switch(SwitchModel),
    Fuzz(FuzzModel),
    Superspacetime(SuperspacetimeModel),
}

impl Model {
    pub fn family(&self) -> Family {
        match self {
            Model::Sequential(_) => Family::Sequential,
            Model::Switch(_) => Family::Switch,
            Model::Fuzz(_) => Family::Fuzz,
            Model::Superspacetime(_) => Family::Superspacetime,
        }
    }

    /// Human-readable slot names, one per entry of `slots()`.
    pub fn slot_names(&self) -> Vec<String> {
        match self {
            Model::Sequential(m) => m.slot_names(),
            _ => ["x", "y", "u", "v"].iter().map(|s| s.to_string()).collect(),
        }
    }

    /// Caps the word length of the model's algebra.
    pub fn with_max_word_len(self, cap: usize) -> Self {
        match self {
            Model::Sequential(m) => Model::Sequential(m.with_max_word_len(cap)),
            Model::Switch(m) => Model::Switch(m.with_max_word_len(cap)),
            Model::Fuzz(m) => Model::Fuzz(m.with_max_word_len(cap)),
            Model::Superspacetime(m) => Model::Superspacetime(m.with_max_word_len(cap)),
        }
    }

    fn inner(&self) -> &dyn AmplitudeModel {
        match self {
            Model::Sequential(m) => m,
            Model::Switch(m) => m,
            Model::Fuzz(m) => m,
            Model::Superspacetime(m) => m,
        }
    }
}

impl AmplitudeModel for Model {
    fn algebra(&self) -> &FreeAlgebra {
        self.inner().algebra()
    }

    fn slots(&self) -> &[u32] {
        self.inner().slots()
    }

    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector> {
        self.inner().amplitude_vector(groups)
    }
}

pub(crate) fn check_unitary(name: &str, u: &CMatrix, d: usize) -> StateResult<()> {
    if u.nrows() != d || u.ncols() != d {
        return Err(dims(format!("{name} is {}x{}, expected {d}x{d}", u.nrows(), u.ncols())));
    }
    let defect = unitarity_defect(u);
    if defect > UNITARY_TOL {
        return Err(invalid(format!("{name} is not unitary (|U†U − I| = {defect:.3e})")));
    }
    Ok(())
}

pub(crate) fn check_unit_vector(name: &str, v: &CVector, n: usize) -> StateResult<()> {
    if v.len() != n {
        return Err(dims(format!("{name} has length {}, expected {n}", v.len())));
    }
    let norm = v.norm();
    if (norm - 1.0).abs() > NORM_TOL {
        return Err(invalid(format!("{name} has norm {norm}, expected 1")));
    }
    Ok(())
}

pub(crate) fn check_groups(groups: &[CMatrix], dims_expected: &[usize]) -> StateResult<()> {
    if groups.len() != dims_expected.len() {
        return Err(dims(format!(
            "{} slot operators given, expected {}",
            groups.len(),
            dims_expected.len()
        )));
    }
    for (k, (g, &d)) in groups.iter().zip(dims_expected).enumerate() {
        if g.nrows() != d || g.ncols() != d {
            return Err(dims(format!(
                "slot operator {k} is {}x{}, expected {d}x{d}",
                g.nrows(),
                g.ncols()
            )));
        }
    }
    Ok(())
}

/// `Σ_k P_k ⊗ M_k` for the control basis projectors `P_k`.
pub(crate) fn control_block_diag(blocks: &[CMatrix], d: usize) -> CMatrix {
    let n = blocks.len();
    let mut out = CMatrix::zeros(n * d, n * d);
    for (k, b) in blocks.iter().enumerate() {
        out.view_mut((k * d, k * d), (d, d)).copy_from(b);
    }
    out
}
