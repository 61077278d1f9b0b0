use causal_algebra::{max_abs, CMatrix, CVector, C64};
use rayon::prelude::*;

use super::{GnsError, WordBasis, HERMITIAN_TOL, PSD_TOL};
use crate::{GeneralizedState, StateResult};

/// `G[a][b] = ω(a*, b)` over the basis words. With `jobs > 1` the rows are
/// computed on that many threads; the result does not depend on `jobs`.
pub fn gram<S: GeneralizedState + ?Sized>(
    state: &S,
    basis: &WordBasis,
    jobs: usize,
) -> StateResult<CMatrix> {
    let words = basis.words();
    let n = words.len();
    // The adjoint of a basis word with coefficient 1 is its reversal.
    let row = |i: usize| -> StateResult<Vec<C64>> {
        let a_star = words[i].reversed();
        words.iter().map(|b| state.kernel(&a_star, b)).collect()
    };
    let rows: Vec<Vec<C64>> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (0..n).into_par_iter().map(row).collect::<StateResult<_>>())?
    } else {
        (0..n).map(row).collect::<StateResult<_>>()?
    };
    Ok(CMatrix::from_fn(n, n, |i, j| rows[i][j]))
}

/// Spectral split of a Gram matrix into its numerical null space and the
/// quotient.
#[derive(Debug, Clone)]
pub struct NullSpace {
    /// All eigenvalues, ascending.
    pub eigenvalues: Vec<f64>,
    /// Eigenvalues below this count as zero.
    pub threshold: f64,
    pub null_rank: usize,
    /// `N × r`: column `k` is `v_k / √λ_k`, so the columns are orthonormal
    /// in the `G` inner product.
    pub quotient_basis: CMatrix,
    /// Null eigenvectors as columns, `N × nullRank`.
    pub null_vectors: CMatrix,
    /// `r × N`: maps word coordinates `c` to quotient coordinates, with
    /// `⟨coords·c | coords·c'⟩ = c† G c'` up to the discarded spectrum.
    pub coords: CMatrix,
}

impl NullSpace {
    pub fn rank(&self) -> usize {
        self.quotient_basis.ncols()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Quotient coordinates of a sparse word-coordinate vector.
    pub fn project(&self, sparse: &[(usize, C64)]) -> CVector {
        let mut out = CVector::zeros(self.rank());
        for &(k, c) in sparse {
            out += self.coords.column(k) * c;
        }
        out
    }
}

/// Eigendecomposition of `g`; eigenvalues below `tol · λ_max` span the null
/// space. Fails if `g` is not hermitian within 1e−9 or has an eigenvalue
/// below −1e−8.
pub fn null_space(g: &CMatrix, tol: f64) -> Result<NullSpace, GnsError> {
    let defect = max_abs(&(g - g.adjoint()));
    if defect > HERMITIAN_TOL {
        return Err(GnsError::NotHermitian { defect });
    }
    let n = g.nrows();
    let h = (g + g.adjoint()) * C64::new(0.5, 0.0);
    let eig = h.symmetric_eigen();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&k| eig.eigenvalues[k]).collect();
    let min = eigenvalues.first().copied().unwrap_or(0.0);
    if min < -PSD_TOL {
        return Err(GnsError::NotPositive { min_eigenvalue: min });
    }
    let top = eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let threshold = tol * top;

    let null: Vec<usize> = order.iter().copied().filter(|&k| eig.eigenvalues[k] < threshold).collect();
    // kept eigenpairs, largest first
    let kept: Vec<usize> = order.iter().rev().copied().filter(|&k| eig.eigenvalues[k] >= threshold).collect();
    let r = kept.len();
    let v = &eig.eigenvectors;
    let mut quotient_basis = CMatrix::zeros(n, r);
    let mut coords = CMatrix::zeros(r, n);
    for (col, &k) in kept.iter().enumerate() {
        let s = eig.eigenvalues[k].sqrt();
        quotient_basis.set_column(col, &(v.column(k) / C64::new(s, 0.0)));
        coords.set_row(col, &(v.column(k).adjoint() * C64::new(s, 0.0)));
    }
    let mut null_vectors = CMatrix::zeros(n, null.len());
    for (col, &k) in null.iter().enumerate() {
        null_vectors.set_column(col, &v.column(k));
    }
    Ok(NullSpace {
        eigenvalues,
        threshold,
        null_rank: null.len(),
        quotient_basis,
        null_vectors,
        coords,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(v: &[f64]) -> CMatrix {
        CMatrix::from_diagonal(&CVector::from_iterator(v.len(), v.iter().map(|&x| C64::new(x, 0.0))))
    }

    #[test]
    fn identity_and_rank_one() {
        let ns = null_space(&CMatrix::identity(3, 3), 1e-8).unwrap();
        assert_eq!((ns.null_rank, ns.rank()), (0, 3));
        let ns = null_space(&diag(&[1.0, 0.0]), 1e-8).unwrap();
        assert_eq!((ns.null_rank, ns.rank()), (1, 1));
        assert!((ns.coords[(0, 0)].norm() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn quotient_basis_is_g_orthonormal() {
        let a = CMatrix::from_fn(4, 2, |i, j| C64::new((i + j) as f64, i as f64 - j as f64));
        let g = &a * a.adjoint();
        let ns = null_space(&g, 1e-8).unwrap();
        assert_eq!(ns.null_rank, 2);
        let q = &ns.quotient_basis;
        assert!(max_abs(&(q.adjoint() * &g * q - CMatrix::identity(2, 2))) < 1e-12);
        assert!(max_abs(&(ns.coords.adjoint() * &ns.coords - &g)) < 1e-12);
    }

    #[test]
    fn diagnostics_name_the_violation() {
        let mut g = CMatrix::identity(2, 2);
        g[(0, 1)] = C64::new(0.1, 0.0);
        assert!(matches!(null_space(&g, 1e-8), Err(GnsError::NotHermitian { defect }) if (defect - 0.1).abs() < 1e-15));
        let e = null_space(&diag(&[1.0, -0.5]), 1e-8).unwrap_err();
        assert_eq!(e, GnsError::NotPositive { min_eigenvalue: -0.5 });
        assert!(e.to_string().contains("-5.000e-1"));
    }
}
