use causal_algebra::{CMatrix, FreeAlgebra, Word};

use crate::{StateError, StateResult};

/// Multiplies the letters of `w` slot by slot, in order of appearance.
///
/// Returns one matrix per entry of `slots`; a slot with no letters in `w`
/// gets the identity.
pub fn group_by_factor(alg: &FreeAlgebra, w: &Word, slots: &[u32]) -> StateResult<Vec<CMatrix>> {
    let mut groups: Vec<CMatrix> = slots
        .iter()
        .map(|&s| {
            let d = alg.factor(s)?.dim();
            Ok(CMatrix::identity(d, d))
        })
        .collect::<StateResult<_>>()?;
    for l in w.letters() {
        let k = slots
            .iter()
            .position(|&s| s == l.factor)
            .ok_or(StateError::UnknownSlot(l.factor))?;
        groups[k] *= alg.letter_matrix(*l)?;
    }
    Ok(groups)
}
