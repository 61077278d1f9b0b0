use causal_algebra::CMatrix;
use serde::Serialize;

use super::{
    check_left_ideal, gram, null_space, reconstruct_check, represent_all, GnsError,
    LeftIdealReport, NullSpace, Representation, WordBasis, DEFAULT_MAX_LEN, LEFT_IDEAL_TOL,
    NULL_TOL,
};
use crate::linalg::svd_rank;
use crate::GeneralizedState;

#[derive(Debug, Clone, Copy)]
pub struct GnsOptions {
    pub max_len: usize,
    pub null_tol: f64,
    pub left_ideal_tol: f64,
    pub jobs: usize,
    /// Also compute the rank from singular values. Roughly doubles the cost.
    pub svd_cross_check: bool,
}

impl Default for GnsOptions {
    fn default() -> Self {
        GnsOptions {
            max_len: DEFAULT_MAX_LEN,
            null_tol: NULL_TOL,
            left_ideal_tol: LEFT_IDEAL_TOL,
            jobs: 1,
            svd_cross_check: false,
        }
    }
}

/// Everything the construction produces.
#[derive(Debug, Clone)]
pub struct GnsResult {
    pub basis: WordBasis,
    pub gram: CMatrix,
    pub null_space: NullSpace,
    /// Rank of the Gram matrix from its singular values, as a cross-check
    /// of `basis.len() − nullRank`. Only computed on request.
    pub svd_rank: Option<usize>,
    pub left_ideal: LeftIdealReport,
    /// `Err` when the left-ideal test failed.
    pub representation: Result<Representation, GnsError>,
    pub reconstruction_max_error: Option<f64>,
}

/// The machine-readable summary.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GnsReport {
    pub basis_size: usize,
    pub null_rank: usize,
    pub min_eigenvalue: f64,
    pub left_ideal_max_violation: f64,
    /// `null` when the representation was refused.
    pub reconstruction_max_error: Option<f64>,
}

impl GnsResult {
    pub fn report(&self) -> GnsReport {
        GnsReport {
            basis_size: self.basis.len(),
            null_rank: self.null_space.null_rank,
            min_eigenvalue: self.null_space.min_eigenvalue(),
            left_ideal_max_violation: self.left_ideal.max_violation,
            reconstruction_max_error: self.reconstruction_max_error,
        }
    }
}

/// Basis, Gram matrix, null space, left-ideal test, and, when that passes,
/// the representation and the reconstruction error.
pub fn run<S: GeneralizedState + ?Sized>(state: &S, opts: &GnsOptions) -> Result<GnsResult, GnsError> {
    let basis = WordBasis::new(state.algebra(), opts.max_len);
    log::debug!("gns: {} basis words at L = {}", basis.len(), opts.max_len);
    let g = gram(state, &basis, opts.jobs)?;
    let ns = null_space(&g, opts.null_tol)?;
    let svd_rank = opts.svd_cross_check.then(|| svd_rank(&g, opts.null_tol));
    log::debug!("gns: null rank {}, svd rank {:?}", ns.null_rank, svd_rank);
    let left_ideal = check_left_ideal(state, &basis, &g, opts.null_tol, opts.left_ideal_tol)?;
    log::debug!("gns: left-ideal violation {:.3e}", left_ideal.max_violation);
    let representation = represent_all(state, &basis, &ns, &left_ideal);
    let reconstruction_max_error = match &representation {
        Ok(rep) => Some(reconstruct_check(state, &basis, rep)?),
        Err(_) => None,
    };
    Ok(GnsResult {
        basis,
        gram: g,
        null_space: ns,
        svd_rank,
        left_ideal,
        representation,
        reconstruction_max_error,
    })
}
