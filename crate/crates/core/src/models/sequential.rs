use causal_algebra::{CMatrix, CVector, FreeAlgebra, Word, C64};

use super::{check_groups, check_unit_vector, check_unitary};
use crate::error::invalid;
use crate::{AmplitudeModel, StateResult};

/// Operators in `n` slots on one space, joined by evolutions:
/// `amp = G_1 U_{1,2} G_2 U_{2,3} ⋯ G_n ψ_n`.
///
/// Slot `k` is factor `k` of the algebra. With two slots this is the
/// two-point state whose `ω(e, x·y)` is `⟨ψ_1| x U_{1,2} y |ψ_2⟩` with
/// `ψ_1 = U_{1,2} ψ_2`.
#[derive(Debug, Clone)]
pub struct SequentialModel {
    dim: usize,
    psi: CVector,
    links: Vec<CMatrix>,
    slots: Vec<u32>,
    alg: FreeAlgebra,
}

impl SequentialModel {
    /// `links[k]` connects slot `k + 1` to slot `k + 2`, so there are
    /// `links.len() + 1` slots.
    pub fn new(dim: usize, psi: CVector, links: Vec<CMatrix>) -> StateResult<Self> {
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        check_unit_vector("psi", &psi, dim)?;
        for (k, u) in links.iter().enumerate() {
            check_unitary(&format!("U_{{{},{}}}", k + 1, k + 2), u, dim)?;
        }
        let slots: Vec<u32> = (1..=links.len() as u32 + 1).collect();
        let dims: Vec<(u32, usize)> = slots.iter().map(|&s| (s, dim)).collect();
        let alg = FreeAlgebra::gell_mann(&dims)?;
        Ok(SequentialModel { dim, psi, links, slots, alg })
    }

    /// The two-slot model with `U_{1,2} = u`.
    pub fn two_point(dim: usize, psi: CVector, u: CMatrix) -> StateResult<Self> {
        Self::new(dim, psi, vec![u])
    }

    pub fn with_max_word_len(mut self, cap: usize) -> Self {
        self.alg = self.alg.with_max_word_len(cap);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn psi(&self) -> &CVector {
        &self.psi
    }

    pub fn links(&self) -> &[CMatrix] {
        &self.links
    }

    /// `x, y` for two slots, `s1 … sn` otherwise.
    pub fn slot_names(&self) -> Vec<String> {
        match self.slots.len() {
            2 => vec!["x".into(), "y".into()],
            n => (1..=n).map(|k| format!("s{k}")).collect(),
        }
    }

    /// `ω(b, a) = ⟨ψ_2| B_2 U_{2,1} B_1 A_1 U_{1,2} A_2 |ψ_2⟩` in the two-slot
    /// case, with `A_k`, `B_k` the slot groups of `a` and `b`.
    pub fn eval(&self, b: &Word, a: &Word) -> StateResult<C64> {
        self.eval_words(b, a)
    }
}

impl AmplitudeModel for SequentialModel {
    fn algebra(&self) -> &FreeAlgebra {
        &self.alg
    }

    fn slots(&self) -> &[u32] {
        &self.slots
    }

    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector> {
        check_groups(groups, &vec![self.dim; self.slots.len()])?;
        let n = groups.len();
        let mut v = &groups[n - 1] * &self.psi;
        for k in (0..n - 1).rev() {
            v = &groups[k] * (&self.links[k] * v);
        }
        Ok(v)
    }
}
