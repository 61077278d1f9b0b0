use std::collections::HashMap;
use std::sync::Arc;

use causal_algebra::{CMatrix, CVector, FreeAlgebra, FreeElement, Word, C64};
use parking_lot::RwLock;

use crate::{group_by_factor, StateResult};

/// A bilinear functional `ω : A × A → C`, given by its values on pairs of
/// canonical words.
pub trait GeneralizedState: Sync {
    fn algebra(&self) -> &FreeAlgebra;

    /// `ω(p, q)` for canonical words.
    fn kernel(&self, p: &Word, q: &Word) -> StateResult<C64>;
}

/// `ω(p, q) = Σ c_w d_w' ω(w, w')`, linear in both arguments. Conjugation
/// enters only through an explicit star on `p`.
pub fn eval_bilinear<S: GeneralizedState + ?Sized>(
    state: &S,
    p: &FreeElement,
    q: &FreeElement,
) -> StateResult<C64> {
    let mut acc = C64::new(0.0, 0.0);
    for (w, c) in p.terms() {
        for (w2, c2) in q.terms() {
            acc += c * c2 * state.kernel(w, w2)?;
        }
    }
    Ok(acc)
}

/// A state of the form `ω(p, q) = ⟨amp(p*) | amp(q)⟩`, where `amp(w)`
/// depends on `w` only through its per-slot groups.
pub trait AmplitudeModel: Send + Sync {
    fn algebra(&self) -> &FreeAlgebra;

    /// Factor indices in the order `amplitude_vector` expects its groups.
    fn slots(&self) -> &[u32];

    /// The output vector `W(groups) ψ`.
    fn amplitude_vector(&self, groups: &[CMatrix]) -> StateResult<CVector>;

    fn amplitude_of(&self, w: &Word) -> StateResult<CVector> {
        let groups = group_by_factor(self.algebra(), w, self.slots())?;
        self.amplitude_vector(&groups)
    }

    /// Uncached `ω(p, q)` on words. Since basis letters are hermitian, the
    /// adjoint of `p` is its reversal.
    fn eval_words(&self, p: &Word, q: &Word) -> StateResult<C64> {
        Ok(self.amplitude_of(&p.reversed())?.dotc(&self.amplitude_of(q)?))
    }
}

/// An [`AmplitudeModel`] with a per-word cache of amplitude vectors.
///
/// The cache only ever stores values that are pure functions of the word,
/// so concurrent readers see the same results in any interleaving.
pub struct CachedState<M> {
    model: M,
    cache: RwLock<HashMap<Word, Arc<CVector>>>,
}

impl<M: AmplitudeModel> CachedState<M> {
    pub fn new(model: M) -> Self {
        CachedState { model, cache: RwLock::new(HashMap::new()) }
    }

    pub fn model(&self) -> &M {
        &self.model
    }

    pub fn into_model(self) -> M {
        self.model
    }

    pub fn amplitude(&self, w: &Word) -> StateResult<Arc<CVector>> {
        if let Some(v) = self.cache.read().get(w) {
            return Ok(Arc::clone(v));
        }
        let v = Arc::new(self.model.amplitude_of(w)?);
        Ok(Arc::clone(self.cache.write().entry(w.clone()).or_insert(v)))
    }

    pub fn cached_words(&self) -> usize {
        self.cache.read().len()
    }
}

impl<M: AmplitudeModel> GeneralizedState for CachedState<M> {
    fn algebra(&self) -> &FreeAlgebra {
        self.model.algebra()
    }

    fn kernel(&self, p: &Word, q: &Word) -> StateResult<C64> {
        Ok(self.amplitude(&p.reversed())?.dotc(&*self.amplitude(q)?))
    }
}

impl<M: std::fmt::Debug> std::fmt::Debug for CachedState<M> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CachedState").field("model", &self.model).finish_non_exhaustive()
    }
}
