use causal_algebra::{CMatrix, CVector, FreeAlgebra, C64};

use super::{check_unit_vector, FuzzBranch, FuzzModel, Order};
use crate::error::{dims, invalid};
use crate::linalg::{expm_hermitian, hermiticity_defect, kron_vec, unitarity_defect};
use crate::{AmplitudeModel, StateResult, HERMITIAN_TOL};

/// Unitarity demanded of the evolutions `exp(−iHt)`.
const EVOLUTION_TOL: f64 = 1e-9;

/// One spacetime of a superspacetime.
#[derive(Debug, Clone)]
pub struct SstBranch {
    /// The identification map: `permutation[k]` is the position of
    /// reference point `k` in the written chain `U · _ · U · _ · U`,
    /// position 0 being the leftmost gap. The identity gives the order
    /// `U x U y U`; the swap gives `U y U x U`.
    pub permutation: Vec<usize>,
    /// Hamiltonians of the incoming, middle and outgoing segments.
    pub hamiltonians: [CMatrix; 3],
    /// Durations of the same segments.
    pub times: [f64; 3],
    /// Amplitude of this spacetime in the superposition.
    pub amplitude: C64,
}

/// A finite superposition of spacetimes sharing the reference points of
/// the two operators, turned into a quantum fuzz with unit weights.
///
/// The control amplitudes are the normalized branch amplitudes, and the
/// input is `ψ' ⊗ ψ''` with `ψ''` the target state.
#[derive(Debug, Clone)]
pub struct SuperspacetimeModel {
    reference: Vec<String>,
    branches: Vec<SstBranch>,
    target_psi: CVector,
    fuzz: FuzzModel,
}

impl SuperspacetimeModel {
    pub fn new(
        d: usize,
        reference: Vec<String>,
        branches: Vec<SstBranch>,
        target_psi: CVector,
    ) -> StateResult<Self> {
        if reference.len() != 2 || reference[0] == reference[1] {
            return Err(invalid(format!(
                "the reference set must hold two distinct points, got {reference:?}"
            )));
        }
        if branches.is_empty() {
            return Err(invalid("a superspacetime needs at least one branch"));
        }
        check_unit_vector("target psi", &target_psi, d)?;
        let fuzz = from_superspacetime(d, &reference, &branches, &target_psi)?;
        Ok(SuperspacetimeModel { reference, branches, target_psi, fuzz })
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.fuzz = self.fuzz.with_max_word_len(cap);
        self
    }

    pub fn reference(&self) -> &[String] {
        &self.reference
    }

    pub fn branches(&self) -> &[SstBranch] {
        &self.branches
    }

    pub fn target_psi(&self) -> &CVector {
        &self.target_psi
    }

    pub fn fuzz(&self) -> &FuzzModel {
        &self.fuzz
    }
}

/// Builds the fuzz of a superspacetime: per branch, the segment evolutions
/// `exp(−iHt)` in chain order `[out, mid, in]`, the operator order from
/// the identification map, and the normalized amplitudes as control state.
pub fn from_superspacetime(
    d: usize,
    reference: &[String],
    branches: &[SstBranch],
    target_psi: &CVector,
) -> StateResult<FuzzModel> {
    let n_ref = reference.len();
    let mut out = Vec::with_capacity(branches.len());
    for (k, b) in branches.iter().enumerate() {
        let mut seen = vec![false; n_ref];
        if b.permutation.len() != n_ref {
            return Err(invalid(format!("branch {k}: identification map has the wrong length")));
        }
        for &p in &b.permutation {
            if p >= n_ref || std::mem::replace(&mut seen[p], true) {
                return Err(invalid(format!(
                    "branch {k}: identification map {:?} is not a bijection",
                    b.permutation
                )));
            }
        }
        let order = if b.permutation[0] == 0 { Order::YThenX } else { Order::XThenY };

        let mut segs = Vec::with_capacity(3);
        for (j, (h, &t)) in b.hamiltonians.iter().zip(&b.times).enumerate() {
            if h.nrows() != d || h.ncols() != d {
                return Err(dims(format!("branch {k}: Hamiltonian {j} is not {d}x{d}")));
            }
            let defect = hermiticity_defect(h);
            if defect > HERMITIAN_TOL {
                return Err(invalid(format!(
                    "branch {k}: Hamiltonian {j} is not hermitian (|H − H†| = {defect:.3e})"
                )));
            }
            if !t.is_finite() {
                return Err(invalid(format!("branch {k}: duration {j} is not finite")));
            }
            let u = expm_hermitian(h, t);
            if unitarity_defect(&u) > EVOLUTION_TOL {
                return Err(invalid(format!("branch {k}: evolution {j} lost unitarity")));
            }
            segs.push(u);
        }
        let [u_in, u_mid, u_out]: [CMatrix; 3] = segs.try_into().expect("three segments");
        out.push(FuzzBranch::new(1.0, order, [u_out, u_mid, u_in]).with_label(format!("branch{k}")));
    }
    let amps = CVector::from_iterator(branches.len(), branches.iter().map(|b| b.amplitude));
    let norm = amps.norm();
    if !(norm.is_finite() && norm > 0.0) {
        return Err(invalid("branch amplitudes are not normalizable"));
    }
    let control = amps / C64::new(norm, 0.0);
    FuzzModel::new(d, out, kron_vec(&control, target_psi))
}

impl AmplitudeModel for SuperspacetimeModel {
    fn algebra(&self) -> &FreeAlgebra {
        self.fuzz.algebra()
    }

    fn slots(&self) -> &[u32] {
        self.fuzz.slots()
    }

    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector> {
        self.fuzz.amplitude_vector(groups)
    }
}
