use nalgebra::SymmetricEigen;

use crate::{AlgebraError, CMatrix, Result, C64, PRUNE_TOL, STRUCTURE_TOL};

/// Generalized Gell-Mann matrices for `M_d(C)`.
///
/// Ordering: for each pair `j < k` the symmetric matrix then the
/// antisymmetric one, followed by the `d - 1` diagonal matrices. For `d = 2`
/// this is `[σx, σy, σz]`. All matrices satisfy `tr(λ_a λ_b) = 2 δ_ab`.
pub fn gell_mann_basis(dim: usize) -> Vec<CMatrix> {
    let zero = C64::new(0.0, 0.0);
    let mut out = Vec::with_capacity((dim * dim).saturating_sub(1));
    for j in 0..dim {
        for k in (j + 1)..dim {
            let mut sym = CMatrix::from_element(dim, dim, zero);
            sym[(j, k)] = C64::new(1.0, 0.0);
            sym[(k, j)] = C64::new(1.0, 0.0);
            out.push(sym);

            let mut anti = CMatrix::from_element(dim, dim, zero);
            anti[(j, k)] = C64::new(0.0, -1.0);
            anti[(k, j)] = C64::new(0.0, 1.0);
            out.push(anti);
        }
    }
    for l in 1..dim {
        let norm = (2.0 / (l * (l + 1)) as f64).sqrt();
        let mut diag = CMatrix::from_element(dim, dim, zero);
        for j in 0..l {
            diag[(j, j)] = C64::new(norm, 0.0);
        }
        diag[(l, l)] = C64::new(-(l as f64) * norm, 0.0);
        out.push(diag);
    }
    out
}

/// Decomposition of `λ_a λ_b` as `scalar · I + Σ_k coeff_k λ_k`.
#[derive(Debug, Clone)]
pub(crate) struct LetterProduct {
    pub scalar: C64,
    pub traceless: Vec<(u16, C64)>,
}

/// One factor algebra `M_d(C)` with a chosen traceless hermitian basis.
#[derive(Debug, Clone)]
pub struct FactorSpec {
    index: u32,
    dim: usize,
    basis: Vec<CMatrix>,
    /// Inverse of the Hilbert-Schmidt Gram matrix of `basis`.
    gram_inv: CMatrix,
    products: Vec<LetterProduct>,
}

impl FactorSpec {
    /// Factor with the generalized Gell-Mann basis.
    pub fn gell_mann(index: u32, dim: usize) -> Result<Self> {
        Self::with_basis(index, dim, gell_mann_basis(dim))
    }

    /// Factor with a caller-supplied basis of the traceless subspace.
    pub fn with_basis(index: u32, dim: usize, basis: Vec<CMatrix>) -> Result<Self> {
        if dim == 0 {
            return Err(AlgebraError::InvalidBasis("factor dimension must be positive".into()));
        }
        if basis.len() != dim * dim - 1 {
            return Err(AlgebraError::InvalidBasis(format!(
                "expected {} basis matrices for dimension {dim}, got {}",
                dim * dim - 1,
                basis.len()
            )));
        }
        for (a, m) in basis.iter().enumerate() {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    factor: index,
                    expected: dim,
                    rows: m.nrows(),
                    cols: m.ncols(),
                });
            }
            if m.trace().norm() > STRUCTURE_TOL {
                return Err(AlgebraError::InvalidBasis(format!("basis matrix {a} is not traceless")));
            }
            if crate::max_abs(&(m - m.adjoint())) > STRUCTURE_TOL {
                return Err(AlgebraError::InvalidBasis(format!("basis matrix {a} is not hermitian")));
            }
        }

        // Identity plus basis must be linearly independent.
        let mut all = Vec::with_capacity(basis.len() + 1);
        all.push(CMatrix::identity(dim, dim));
        all.extend(basis.iter().cloned());
        let full_gram = hs_gram(&all);
        let min_eig = SymmetricEigen::new(full_gram)
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min);
        if min_eig <= STRUCTURE_TOL {
            return Err(AlgebraError::InvalidBasis(format!(
                "basis is linearly dependent (smallest Gram eigenvalue {min_eig:e})"
            )));
        }

        let gram_inv = hs_gram(&basis)
            .try_inverse()
            .unwrap_or_else(|| CMatrix::zeros(0, 0));
        let mut spec = FactorSpec {
            index,
            dim,
            basis,
            gram_inv,
            products: Vec::new(),
        };
        let n = spec.basis.len();
        let mut products = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let p = &spec.basis[a] * &spec.basis[b];
                let (scalar, traceless) = spec.split(&p);
                products.push(LetterProduct { scalar, traceless });
            }
        }
        spec.products = products;
        Ok(spec)
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of traceless basis letters, `d² - 1`.
    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[CMatrix] {
        &self.basis
    }

    pub fn basis_matrix(&self, index: u16) -> Option<&CMatrix> {
        self.basis.get(index as usize)
    }

    pub(crate) fn product(&self, a: u16, b: u16) -> &LetterProduct {
        &self.products[a as usize * self.basis.len() + b as usize]
    }

    pub(crate) fn check_dims(&self, m: &CMatrix) -> Result<()> {
        if m.nrows() != self.dim || m.ncols() != self.dim {
            return Err(AlgebraError::DimensionMismatch {
                factor: self.index,
                expected: self.dim,
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        Ok(())
    }

    /// Splits `m` into `(tr m / d) · I` plus a traceless part expanded in
    /// the basis. Coefficients below the pruning tolerance are dropped.
    pub fn split(&self, m: &CMatrix) -> (C64, Vec<(u16, C64)>) {
        let scalar = m.trace() / C64::from(self.dim as f64);
        let mut traceless = m.clone();
        for i in 0..self.dim {
            traceless[(i, i)] -= scalar;
        }
        (scalar, self.expand_traceless(&traceless))
    }

    /// Coordinates of a traceless matrix in the basis.
    pub fn expand_traceless(&self, t: &CMatrix) -> Vec<(u16, C64)> {
        let n = self.basis.len();
        if n == 0 {
            return Vec::new();
        }
        let overlaps: Vec<C64> = self.basis.iter().map(|b| hs_inner(b, t)).collect();
        let mut out = Vec::new();
        for a in 0..n {
            let mut c = C64::new(0.0, 0.0);
            for (b, h) in overlaps.iter().enumerate() {
                c += self.gram_inv[(a, b)] * h;
            }
            if c.norm() >= PRUNE_TOL {
                out.push((a as u16, c));
            }
        }
        out
    }
}

/// `tr(a† b)`.
fn hs_inner(a: &CMatrix, b: &CMatrix) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

fn hs_gram(ms: &[CMatrix]) -> CMatrix {
    let n = ms.len();
    CMatrix::from_fn(n, n, |i, j| hs_inner(&ms[i], &ms[j]))
}
