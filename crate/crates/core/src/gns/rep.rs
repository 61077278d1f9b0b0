use std::collections::{BTreeMap, HashMap};

use causal_algebra::{BasisLetter, CMatrix, CVector, Word, C64};

use super::{null_space, GnsError, NullSpace, WordBasis};
use crate::{GeneralizedState, StateError, StateResult};

/// Outcome of the left-ideal test.
#[derive(Debug, Clone, PartialEq)]
pub struct LeftIdealReport {
    /// `max |ω((ba)*, ba)|` over unit null vectors `a` and generators `b`.
    pub max_violation: f64,
    /// Dimension of the null space tested (on words of length ≤ L − 1).
    pub null_rank: usize,
    /// Generator attaining the maximum, if any null vector exists.
    pub worst_letter: Option<BasisLetter>,
    pub tol: f64,
}

impl LeftIdealReport {
    pub fn passes(&self) -> bool {
        self.max_violation <= self.tol
    }
}

fn sparse_coordinates(
    basis: &WordBasis,
    a: &causal_algebra::FreeElement,
) -> StateResult<Vec<(usize, C64)>> {
    basis.coordinates(a).ok_or_else(|| {
        StateError::Dimension(format!(
            "product of length {} leaves the word basis (L = {})",
            a.max_word_len(),
            basis.max_len()
        ))
    })
}

/// Tests whether the numerical null space is closed under left
/// multiplication by generators.
///
/// The null vectors `a` are those of the Gram matrix restricted to words
/// of length at most `L − 1`, so every product `ba` with a generator `b`
/// lies in the basis and `ω((ba)*, ba)` can be read off the full Gram
/// matrix. The property is never assumed: the report may fail.
pub fn check_left_ideal<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    gram: &CMatrix,
    null_tol: f64,
    tol: f64,
) -> Result<LeftIdealReport, GnsError> {
    let mut report = LeftIdealReport { max_violation: 0.0, null_rank: 0, worst_letter: None, tol };
    if basis.max_len() == 0 {
        return Ok(report);
    }
    let nd = basis.count_up_to(basis.max_len() - 1);
    let domain = null_space(&gram.view((0, 0), (nd, nd)).into_owned(), null_tol)?;
    report.null_rank = domain.null_rank;
    if domain.null_rank == 0 {
        return Ok(report);
    }
    let alg = state.algebra();
    for b in alg.generators() {
        let products = basis
            .left_products(alg, b)?
            .iter()
            .map(|p| sparse_coordinates(basis, p))
            .collect::<StateResult<Vec<_>>>()?;
        for c in domain.null_vectors.column_iter() {
            let mut y: HashMap<usize, C64> = HashMap::new();
            for (j, coords) in products.iter().enumerate() {
                for &(k, z) in coords {
                    *y.entry(k).or_default() += c[j] * z;
                }
            }
            let mut v = C64::new(0.0, 0.0);
            for (&i, yi) in &y {
                for (&k, yk) in &y {
                    v += yi.conj() * gram[(i, k)] * yk;
                }
            }
            if v.norm() > report.max_violation {
                report.max_violation = v.norm();
                report.worst_letter = Some(b);
            }
        }
    }
    Ok(report)
}

/// The maps `[w] ↦ [b·w]` on classes of words of length at most `L − 1`,
/// in quotient coordinates.
#[derive(Debug, Clone)]
pub struct Representation {
    pub letters: BTreeMap<BasisLetter, CMatrix>,
    /// Quotient coordinates of `Ω = [e]`.
    pub omega: CVector,
    pub domain_max_len: usize,
}

impl Representation {
    /// `π(w) Ω`, applying the letters right to left.
    pub fn apply_word(&self, w: &Word) -> Result<CVector, GnsError> {
        if w.len() > self.domain_max_len {
            return Err(GnsError::OutOfRange { len: w.len(), max: self.domain_max_len });
        }
        let mut v = self.omega.clone();
        for l in w.letters().iter().rev() {
            v = &self.letters[l] * v;
        }
        Ok(v)
    }

    /// `π(w)` as the ordered product of letter matrices.
    pub fn word_matrix(&self, w: &Word) -> Result<CMatrix, GnsError> {
        if w.len() > self.domain_max_len {
            return Err(GnsError::OutOfRange { len: w.len(), max: self.domain_max_len });
        }
        let r = self.omega.len();
        Ok(w.letters().iter().fold(CMatrix::identity(r, r), |m, l| m * &self.letters[l]))
    }
}

struct Domain {
    pinv: CMatrix,
    nd: usize,
}

fn domain(basis: &WordBasis, ns: &NullSpace) -> Domain {
    let nd = basis.count_up_to(basis.max_len().saturating_sub(1));
    let c = ns.coords.columns(0, nd).into_owned();
    let eps = (super::NULL_TOL * ns.max_eigenvalue()).sqrt();
    let pinv = c.pseudo_inverse(eps).expect("pseudo-inverse with nonnegative cutoff");
    Domain { pinv, nd }
}

fn letter_matrix<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    ns: &NullSpace,
    dom: &Domain,
    letter: BasisLetter,
) -> Result<CMatrix, GnsError> {
    let products = basis.left_products(state.algebra(), letter)?;
    let mut y = CMatrix::zeros(ns.rank(), dom.nd);
    for (j, p) in products.iter().enumerate() {
        y.set_column(j, &ns.project(&sparse_coordinates(basis, p)?));
    }
    Ok(y * &dom.pinv)
}

/// The matrix of `π(letter)` on the quotient. Refuses when the left-ideal
/// report fails, since the map is then not well defined.
pub fn represent<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    ns: &NullSpace,
    report: &LeftIdealReport,
    letter: BasisLetter,
) -> Result<CMatrix, GnsError> {
    if !report.passes() {
        return Err(GnsError::LeftIdeal { violation: report.max_violation, tol: report.tol });
    }
    if basis.max_len() == 0 {
        return Err(GnsError::OutOfRange { len: 1, max: 0 });
    }
    letter_matrix(state, basis, ns, &domain(basis, ns), letter)
}

/// [`represent`] for every generator.
pub fn represent_all<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    ns: &NullSpace,
    report: &LeftIdealReport,
) -> Result<Representation, GnsError> {
    if !report.passes() {
        return Err(GnsError::LeftIdeal { violation: report.max_violation, tol: report.tol });
    }
    if basis.max_len() == 0 {
        return Err(GnsError::OutOfRange { len: 1, max: 0 });
    }
    let dom = domain(basis, ns);
    let mut letters = BTreeMap::new();
    for b in state.algebra().generators() {
        letters.insert(b, letter_matrix(state, basis, ns, &dom, b)?);
    }
    Ok(Representation {
        letters,
        omega: ns.coords.column(0).into_owned(),
        domain_max_len: basis.max_len() - 1,
    })
}

/// `max |ω(a*, b) − ⟨π(a)Ω | π(b)Ω⟩|` over words `a`, `b` of length at
/// most `L − 1`.
pub fn reconstruct_check<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    rep: &Representation,
) -> Result<f64, GnsError> {
    let nd = basis.count_up_to(rep.domain_max_len);
    let words = &basis.words()[..nd];
    let vecs = words.iter().map(|w| rep.apply_word(w)).collect::<Result<Vec<_>, _>>()?;
    let mut worst = 0.0f64;
    for (i, a) in words.iter().enumerate() {
        let a_star = a.reversed();
        for (j, b) in words.iter().enumerate() {
            let w = state.kernel(&a_star, b)?;
            worst = worst.max((w - vecs[i].dotc(&vecs[j])).norm());
        }
    }
    Ok(worst)
}
