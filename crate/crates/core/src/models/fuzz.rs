use causal_algebra::{CMatrix, CVector, FreeAlgebra, Word, C64};

use super::{
    check_groups, check_unitary, control_block_diag, SLOT_U, SLOT_V, SLOT_X,
    SLOT_Y, SWITCH_SLOTS,
};
use crate::error::{dims, invalid};
use crate::{AmplitudeModel, StateResult, NORM_TOL};

/// Which of the two operator orders a fuzz branch uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Order {
    /// `U_vx x U_xy y U_yu`: the target meets `y` first. The `α` class, and
    /// the `|0⟩` branch of the switch.
    YThenX,
    /// `U_vy y U_yx x U_xu`: the target meets `x` first. The `β` class.
    XThenY,
}

#[derive(Debug, Clone)]
pub struct FuzzBranch {
    pub weight: f64,
    pub order: Order,
    /// The three unitaries of the branch's chain, left to right.
    pub unitaries: [CMatrix; 3],
    pub label: Option<String>,
}

impl FuzzBranch {
    pub fn new(weight: f64, order: Order, unitaries: [CMatrix; 3]) -> Self {
        FuzzBranch { weight, order, unitaries, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    fn chain(&self, x: &CMatrix, y: &CMatrix) -> CMatrix {
        let [a, b, c] = &self.unitaries;
        let m = match self.order {
            Order::YThenX => a * x * b * y * c,
            Order::XThenY => a * y * b * x * c,
        };
        m * C64::new(self.weight, 0.0)
    }
}

/// The quantum fuzz with a discrete measure: one control basis vector per
/// branch, and
///
/// ```text
/// v ( Σ_k w_k |k⟩⟨k| ⊗ chain_k(x, y) ) u ψ
/// ```
///
/// as output vector. `u` and `v` act on control ⊗ target.
#[derive(Debug, Clone)]
pub struct FuzzModel {
    d: usize,
    branches: Vec<FuzzBranch>,
    psi: CVector,
    alg: FreeAlgebra,
}

impl FuzzModel {
    /// Fails unless every weight is positive, every unitary is unitary and
    /// the measure preserves the normalization `ω(e, e) = 1`.
    pub fn new(d: usize, branches: Vec<FuzzBranch>, psi: CVector) -> StateResult<Self> {
        if d == 0 {
            return Err(invalid("target dimension must be positive"));
        }
        if branches.is_empty() {
            return Err(invalid("a fuzz needs at least one branch"));
        }
        for (k, b) in branches.iter().enumerate() {
            if !(b.weight.is_finite() && b.weight > 0.0) {
                return Err(invalid(format!("branch {k} has nonpositive weight {}", b.weight)));
            }
            for (j, u) in b.unitaries.iter().enumerate() {
                check_unitary(&format!("branch {k} unitary {j}"), u, d)?;
            }
        }
        let n = branches.len();
        if psi.len() != n * d {
            return Err(dims(format!("psi has length {}, expected {}", psi.len(), n * d)));
        }
        let cd = n * d;
        let alg = FreeAlgebra::gell_mann(&[(SLOT_X, d), (SLOT_Y, d), (SLOT_U, cd), (SLOT_V, cd)])?;
        let m = FuzzModel { d, branches, psi, alg };
        let norm = m.amplitude_of(&Word::empty())?.norm_squared();
        if (norm - 1.0).abs() > NORM_TOL {
            return Err(invalid(format!(
                "the branch measure does not preserve the normalization: ω(e, e) = {norm}"
            )));
        }
        Ok(m)
    }

    /// The switch's two orders as a two-branch fuzz with unit weights.
    pub fn from_switch(s: &super::SwitchModel) -> StateResult<Self> {
        let branches = vec![
            FuzzBranch::new(1.0, Order::YThenX, s.zero_branch().clone()).with_label("alpha"),
            FuzzBranch::new(1.0, Order::XThenY, s.one_branch().clone()).with_label("beta"),
        ];
        Self::new(s.target_dim(), branches, s.psi().clone())
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.alg = self.alg.with_max_word_len(cap);
        self
    }

    pub fn target_dim(&self) -> usize {
        self.d
    }

    pub fn control_dim(&self) -> usize {
        self.branches.len()
    }

    pub fn branches(&self) -> &[FuzzBranch] {
        &self.branches
    }

    pub fn psi(&self) -> &CVector {
        &self.psi
    }

    pub fn eval(&self, b: &Word, a: &Word) -> StateResult<C64> {
        self.eval_words(b, a)
    }

    pub fn amplitude(
        &self,
        phi: &CVector,
        x: &CMatrix,
        y: &CMatrix,
        u: &CMatrix,
        v: &CMatrix,
    ) -> StateResult<C64> {
        amplitude_fuzz(self.d, &self.branches, &self.psi, phi, x, y, u, v)
    }
}

impl AmplitudeModel for FuzzModel {
    fn algebra(&self) -> &FreeAlgebra {
        &self.alg
    }

    fn slots(&self) -> &[u32] {
        &SWITCH_SLOTS
    }

    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector> {
        output_vector(self.d, &self.branches, &self.psi, groups)
    }
}

fn output_vector(
    d: usize,
    branches: &[FuzzBranch],
    psi: &CVector,
    groups: &[CMatrix],
) -> StateResult<CVector> {
    let cd = branches.len() * d;
    check_groups(groups, &[d, d, cd, cd])?;
    if psi.len() != cd {
        return Err(dims(format!("psi has length {}, expected {cd}", psi.len())));
    }
    let (x, y, u, v) = (&groups[0], &groups[1], &groups[2], &groups[3]);
    let blocks: Vec<CMatrix> = branches.iter().map(|b| b.chain(x, y)).collect();
    Ok(v * (control_block_diag(&blocks, d) * (u * psi)))
}

/// `⟨φ| v ( Σ_k w_k |k⟩⟨k| ⊗ chain_k(x, y) ) u |ψ⟩` for any branch list.
///
/// The amplitude is linear in `φ` and `ψ`; neither is required to be
/// normalized and the branch weights are not checked against the
/// normalization.
#[allow(clippy::too_many_arguments)]
pub fn amplitude_fuzz(
    d: usize,
    branches: &[FuzzBranch],
    psi: &CVector,
    phi: &CVector,
    x: &CMatrix,
    y: &CMatrix,
    u: &CMatrix,
    v: &CMatrix,
) -> StateResult<C64> {
    if phi.len() != psi.len() {
        return Err(dims(format!("phi has length {}, psi {}", phi.len(), psi.len())));
    }
    let out = output_vector(d, branches, psi, &[x.clone(), y.clone(), u.clone(), v.clone()])?;
    Ok(phi.dotc(&out))
}
