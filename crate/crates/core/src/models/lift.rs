use causal_algebra::{CMatrix, FreeAlgebra, FreeElement, Letter};

use super::{SLOT_U, SLOT_V};
use crate::StateResult;

/// Maps an element of a switch-type algebra with control dimension `n` to
/// one with control dimension `n·r` by `m ↦ I_r ⊗ m` on the `u` and `v`
/// factors and the identity on `x` and `y`.
///
/// Each factor map is a unital *-homomorphism, so this is the induced
/// homomorphism of the free products.
pub fn lift_control_diagonal(
    from: &FreeAlgebra,
    to: &FreeAlgebra,
    a: &FreeElement,
) -> StateResult<FreeElement> {
    let mut out = FreeElement::zero();
    for (w, c) in a.terms() {
        let mut letters = Vec::with_capacity(w.len());
        for l in w.letters() {
            let m = from.letter_matrix(*l)?;
            let m = if l.factor == SLOT_U || l.factor == SLOT_V {
                let r = to.factor(l.factor)?.dim() / m.nrows();
                CMatrix::identity(r, r).kronecker(m)
            } else {
                m.clone()
            };
            letters.push(Letter::new(l.factor, m));
        }
        out = out.add(&to.normalize(&letters, *c)?);
    }
    Ok(out)
}
