use causal_algebra::{CMatrix, CVector, FreeAlgebra, Word, C64};

use super::{
    check_groups, check_unit_vector, check_unitary, control_block_diag, SLOT_U, SLOT_V, SLOT_X,
    SLOT_Y, SWITCH_SLOTS,
};
use crate::error::{dims, invalid};
use crate::{AmplitudeModel, StateResult};

/// The quantum switch with a qubit control and a `d`-dimensional target.
///
/// The output vector is
///
/// ```text
/// v ( |0⟩⟨0| ⊗ U_vx x U_xy y U_yu  +  |1⟩⟨1| ⊗ U_vy y U_yx x U_xu ) u ψ
/// ```
///
/// `x` and `y` act on the target; `u` and `v` act on control ⊗ target,
/// indexed as `c·d + t`. Factors 1 to 4 carry `x`, `y`, `u`, `v`.
#[derive(Debug, Clone)]
pub struct SwitchModel {
    d: usize,
    psi: CVector,
    zero: [CMatrix; 3],
    one: [CMatrix; 3],
    alg: FreeAlgebra,
}

impl SwitchModel {
    /// `zero = [U_vx, U_xy, U_yu]` for the `|0⟩` branch and
    /// `one = [U_vy, U_yx, U_xu]` for the `|1⟩` branch.
    pub fn new(d: usize, psi: CVector, zero: [CMatrix; 3], one: [CMatrix; 3]) -> StateResult<Self> {
        if d == 0 {
            return Err(invalid("target dimension must be positive"));
        }
        for (name, u) in ["U_vx(0)", "U_xy(0)", "U_yu(0)"].iter().zip(&zero) {
            check_unitary(name, u, d)?;
        }
        for (name, u) in ["U_vy(1)", "U_yx(1)", "U_xu(1)"].iter().zip(&one) {
            check_unitary(name, u, d)?;
        }
        check_unit_vector("psi", &psi, 2 * d)?;
        let alg = FreeAlgebra::gell_mann(&[(SLOT_X, d), (SLOT_Y, d), (SLOT_U, 2 * d), (SLOT_V, 2 * d)])?;
        Ok(SwitchModel { d, psi, zero, one, alg })
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.alg = self.alg.with_max_word_len(cap);
        self
    }

    pub fn target_dim(&self) -> usize {
        self.d
    }

    pub fn psi(&self) -> &CVector {
        &self.psi
    }

    pub fn zero_branch(&self) -> &[CMatrix; 3] {
        &self.zero
    }

    pub fn one_branch(&self) -> &[CMatrix; 3] {
        &self.one
    }

    /// Same unitaries, different input state.
    pub fn with_psi(&self, psi: CVector) -> StateResult<Self> {
        Self::new(self.d, psi, self.zero.clone(), self.one.clone())
    }

    /// `ω(b, a) = Σ_φ conj(A(φ, groups of b*)) · A(φ, groups of a)`.
    pub fn eval(&self, b: &Word, a: &Word) -> StateResult<C64> {
        self.eval_words(b, a)
    }

    fn middle(&self, x: &CMatrix, y: &CMatrix) -> CMatrix {
        let [vx, xy, yu] = &self.zero;
        let [vy, yx, xu] = &self.one;
        let b0 = vx * x * xy * y * yu;
        let b1 = vy * y * yx * x * xu;
        control_block_diag(&[b0, b1], self.d)
    }
}

impl AmplitudeModel for SwitchModel {
    fn algebra(&self) -> &FreeAlgebra {
        &self.alg
    }

    fn slots(&self) -> &[u32] {
        &SWITCH_SLOTS
    }

    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector> {
        let d = self.d;
        check_groups(groups, &[d, d, 2 * d, 2 * d])?;
        let (x, y, u, v) = (&groups[0], &groups[1], &groups[2], &groups[3]);
        Ok(v * (self.middle(x, y) * (u * &self.psi)))
    }
}

/// `⟨φ| v ( |0⟩⟨0| ⊗ U x U y U + |1⟩⟨1| ⊗ U y U x U ) u |ψ⟩`.
pub fn amplitude_switch(
    m: &SwitchModel,
    phi: &CVector,
    x: &CMatrix,
    y: &CMatrix,
    u: &CMatrix,
    v: &CMatrix,
) -> StateResult<C64> {
    if phi.len() != 2 * m.d {
        return Err(dims(format!("phi has length {}, expected {}", phi.len(), 2 * m.d)));
    }
    let out = m.amplitude_vector(&[x.clone(), y.clone(), u.clone(), v.clone()])?;
    Ok(phi.dotc(&out))
}
