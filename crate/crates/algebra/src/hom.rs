use std::collections::BTreeMap;

use crate::{AlgebraError, CMatrix, FreeAlgebra, FreeElement, Result};

/// Images of one factor's basis letters under a unital *-homomorphism
/// `φ_i : A_i → M_k(C)`.
#[derive(Debug, Clone)]
pub struct HomTarget {
    images: Vec<CMatrix>,
}

impl HomTarget {
    pub fn new(images: Vec<CMatrix>) -> Self {
        HomTarget { images }
    }

    /// Images computed by applying `map` to each basis matrix.
    pub fn from_map(
        alg: &FreeAlgebra,
        factor: u32,
        map: impl Fn(&CMatrix) -> CMatrix,
    ) -> Result<Self> {
        let spec = alg.factor(factor)?;
        Ok(HomTarget {
            images: spec.basis().iter().map(map).collect(),
        })
    }

    /// `m ↦ V (m ⊗ I_r) V†` with `k = d·r`.
    pub fn amplified(alg: &FreeAlgebra, factor: u32, unitary: &CMatrix) -> Result<Self> {
        let d = alg.factor(factor)?.dim();
        let k = unitary.nrows();
        if !k.is_multiple_of(d) || unitary.ncols() != k {
            return Err(AlgebraError::InvalidHom(format!(
                "target size {k} is not a multiple of factor dimension {d}"
            )));
        }
        let r = k / d;
        let id = CMatrix::identity(r, r);
        Self::from_map(alg, factor, |m| unitary * m.kronecker(&id) * unitary.adjoint())
    }

    pub fn images(&self) -> &[CMatrix] {
        &self.images
    }
}

/// The unique unital *-homomorphism `Φ : A → M_k(C)` with `Φ ∘ ψ_i = φ_i`.
#[derive(Debug, Clone)]
pub struct InducedHom {
    k: usize,
    targets: BTreeMap<u32, HomTarget>,
}

impl InducedHom {
    /// Validates that every target is a unital *-homomorphism of the right
    /// size: hermitian images of the hermitian basis, and the factor's
    /// multiplication table reproduced in `M_k`.
    pub fn new(alg: &FreeAlgebra, k: usize, targets: BTreeMap<u32, HomTarget>) -> Result<Self> {
        for spec in alg.factors() {
            let t = targets.get(&spec.index()).ok_or_else(|| {
                AlgebraError::InvalidHom(format!("no target for factor {}", spec.index()))
            })?;
            if t.images.len() != spec.basis_len() {
                return Err(AlgebraError::InvalidHom(format!(
                    "factor {} needs {} images, got {}",
                    spec.index(),
                    spec.basis_len(),
                    t.images.len()
                )));
            }
            for m in &t.images {
                if m.nrows() != k || m.ncols() != k {
                    return Err(AlgebraError::InvalidHom(format!(
                        "image of size {}x{} for target M_{k}",
                        m.nrows(),
                        m.ncols()
                    )));
                }
                if crate::max_abs(&(m - m.adjoint())) > 1e-10 {
                    return Err(AlgebraError::InvalidHom(format!(
                        "factor {}: image of a hermitian letter is not hermitian",
                        spec.index()
                    )));
                }
            }
            let id = CMatrix::identity(k, k);
            let n = spec.basis_len();
            for a in 0..n {
                for b in 0..n {
                    let p = spec.product(a as u16, b as u16);
                    let mut expect = &id * p.scalar;
                    for &(j, f) in &p.traceless {
                        expect += &t.images[j as usize] * f;
                    }
                    let got = &t.images[a] * &t.images[b];
                    if crate::max_abs(&(got - expect)) > 1e-9 {
                        return Err(AlgebraError::InvalidHom(format!(
                            "factor {}: images violate the multiplication table (not unital or not multiplicative)",
                            spec.index()
                        )));
                    }
                }
            }
        }
        Ok(InducedHom { k, targets })
    }

    pub fn size(&self) -> usize {
        self.k
    }

    /// `Φ(a) = Σ_w c_w Π φ(letter)`.
    pub fn apply(&self, a: &FreeElement) -> Result<CMatrix> {
        let mut out = CMatrix::zeros(self.k, self.k);
        for (w, c) in a.terms() {
            let mut m = CMatrix::identity(self.k, self.k);
            for l in w.letters() {
                let t = self
                    .targets
                    .get(&l.factor)
                    .ok_or(AlgebraError::UnknownFactor(l.factor))?;
                let img = t.images.get(l.index as usize).ok_or(AlgebraError::BasisIndex {
                    factor: l.factor,
                    index: l.index,
                })?;
                m *= img;
            }
            out += m * *c;
        }
        Ok(out)
    }
}
