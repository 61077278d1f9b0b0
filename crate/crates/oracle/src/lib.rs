//! Brute-force reference values for generalized-state kernels.
//!
//! Everything here is recomputed from dense matrices with explicit loops:
//! Heisenberg-picture correlators, operator chains, and the bilinear kernel
//! as a literal sum over an orthonormal basis of output vectors. Letters are
//! grouped by a separate implementation, the adjoint of a word is formed
//! letter by letter, and evolutions are exponentiated by a Taylor series.
//! Speed is not a goal.

use causal_algebra::{gell_mann_basis, CMatrix, CVector, Word, C64};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("letter ({factor},{index}) does not belong to this scenario")]
    BadLetter { factor: u32, index: u16 },
}

type Result<T> = std::result::Result<T, OracleError>;

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

fn matvec(m: &CMatrix, v: &CVector) -> Result<CVector> {
    if m.ncols() != v.len() {
        return Err(OracleError::Dimension(format!(
            "{}x{} matrix applied to a vector of length {}",
            m.nrows(),
            m.ncols(),
            v.len()
        )));
    }
    let mut out = CVector::zeros(m.nrows());
    for i in 0..m.nrows() {
        let mut s = zero();
        for j in 0..m.ncols() {
            s += m[(i, j)] * v[j];
        }
        out[i] = s;
    }
    Ok(out)
}

fn matmul(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let mut out = CMatrix::zeros(a.nrows(), b.ncols());
    for i in 0..a.nrows() {
        for j in 0..b.ncols() {
            let mut s = zero();
            for k in 0..a.ncols() {
                s += a[(i, k)] * b[(k, j)];
            }
            out[(i, j)] = s;
        }
    }
    out
}

fn dagger(m: &CMatrix) -> CMatrix {
    CMatrix::from_fn(m.ncols(), m.nrows(), |i, j| m[(j, i)].conj())
}

fn inner(phi: &CVector, psi: &CVector) -> C64 {
    let mut s = zero();
    for i in 0..phi.len() {
        s += phi[i].conj() * psi[i];
    }
    s
}

/// `⟨ψ| (U₁† x U₁) (U₂† y U₂) |ψ⟩`, evaluated right to left as matrix-vector
/// products.
pub fn heisenberg_correlator(
    psi: &CVector,
    u1: &CMatrix,
    u2: &CMatrix,
    x: &CMatrix,
    y: &CMatrix,
) -> Result<C64> {
    let mut v = psi.clone();
    for m in [u2.clone(), y.clone(), dagger(u2), u1.clone(), x.clone(), dagger(u1)] {
        v = matvec(&m, &v)?;
    }
    if v.len() != psi.len() {
        return Err(OracleError::Dimension("chain does not return to the input space".into()));
    }
    Ok(inner(psi, &v))
}

/// `⟨φ| ops[0] ops[1] ⋯ ops[n−1] |ψ⟩`, applying the last operator first.
/// The empty chain gives `⟨φ|ψ⟩`.
pub fn chain_amplitude(ops: &[CMatrix], psi: &CVector, phi: &CVector) -> Result<C64> {
    let mut v = psi.clone();
    for m in ops.iter().rev() {
        v = matvec(m, &v)?;
    }
    if v.len() != phi.len() {
        return Err(OracleError::Dimension(format!(
            "output of length {} paired with phi of length {}",
            v.len(),
            phi.len()
        )));
    }
    Ok(inner(phi, &v))
}

/// `exp(−iHt)` by scaling and squaring of a Taylor series.
pub fn evolution(h: &CMatrix, t: f64) -> CMatrix {
    let n = h.nrows();
    let a = h * C64::new(0.0, -t);
    let norm: f64 = (0..n)
        .map(|j| (0..n).map(|i| a[(i, j)].norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let mut squarings = 0;
    let mut scale = 1.0;
    while norm * scale > 0.25 {
        scale *= 0.5;
        squarings += 1;
    }
    let a = a * C64::new(scale, 0.0);
    let mut term = CMatrix::identity(n, n);
    let mut sum = CMatrix::identity(n, n);
    for k in 1..=24 {
        term = matmul(&term, &a) * C64::new(1.0 / k as f64, 0.0);
        sum += &term;
    }
    for _ in 0..squarings {
        sum = matmul(&sum, &sum);
    }
    sum
}

/// `|k⟩⟨k| ⊗ m` on `C^n ⊗ C^d`, indexed `c·d + t`.
fn projector_kron(n: usize, k: usize, m: &CMatrix) -> CMatrix {
    let d = m.nrows();
    let mut out = CMatrix::zeros(n * d, n * d);
    for i in 0..d {
        for j in 0..d {
            out[(k * d + i, k * d + j)] = m[(i, j)];
        }
    }
    out
}

/// One branch of a switch or fuzz.
#[derive(Debug, Clone)]
pub struct OracleBranch {
    pub weight: f64,
    /// `true` for `U y U x U` (the target meets `x` first), `false` for
    /// `U x U y U`.
    pub x_first: bool,
    pub unitaries: [CMatrix; 3],
}

/// One spacetime of a superspacetime.
#[derive(Debug, Clone)]
pub struct OracleSpacetime {
    pub amplitude: C64,
    /// Position of each of the two reference points in the written chain.
    pub permutation: Vec<usize>,
    /// In, mid and out segments.
    pub hamiltonians: [CMatrix; 3],
    pub times: [f64; 3],
}

/// The dense data of a state, independent of any evaluator type.
#[derive(Debug, Clone)]
pub enum OracleModel {
    /// Slots `1..=n` of dimension `d`, `amp = G₁ U₁₂ G₂ ⋯ G_n ψ`.
    Sequential { psi: CVector, links: Vec<CMatrix> },
    /// Factors 1, 2 (`x`, `y`, dimension `d`) and 3, 4 (`u`, `v`, dimension
    /// `branches · d`).
    Branched { d: usize, psi: CVector, branches: Vec<OracleBranch> },
    /// A superspacetime over a target of dimension `d`.
    Superspacetime { d: usize, target_psi: CVector, spacetimes: Vec<OracleSpacetime> },
}

impl OracleModel {
    /// The switch: branch `|0⟩` is `U_vx x U_xy y U_yu`, branch `|1⟩` is
    /// `U_vy y U_yx x U_xu`.
    pub fn switch(d: usize, psi: CVector, zero: [CMatrix; 3], one: [CMatrix; 3]) -> Self {
        OracleModel::Branched {
            d,
            psi,
            branches: vec![
                OracleBranch { weight: 1.0, x_first: false, unitaries: zero },
                OracleBranch { weight: 1.0, x_first: true, unitaries: one },
            ],
        }
    }

    fn branched(&self) -> Option<(usize, CVector, Vec<OracleBranch>)> {
        match self {
            OracleModel::Sequential { .. } => None,
            OracleModel::Branched { d, psi, branches } => Some((*d, psi.clone(), branches.clone())),
            OracleModel::Superspacetime { d, target_psi, spacetimes } => {
                let norm: f64 = spacetimes.iter().map(|s| s.amplitude.norm_sqr()).sum::<f64>().sqrt();
                let n = spacetimes.len();
                let mut psi = CVector::zeros(n * d);
                for (k, s) in spacetimes.iter().enumerate() {
                    for t in 0..*d {
                        psi[k * d + t] = s.amplitude / norm * target_psi[t];
                    }
                }
                let branches = spacetimes
                    .iter()
                    .map(|s| {
                        let [h_in, h_mid, h_out] = &s.hamiltonians;
                        OracleBranch {
                            weight: 1.0,
                            x_first: s.permutation[0] != 0,
                            unitaries: [
                                evolution(h_out, s.times[2]),
                                evolution(h_mid, s.times[1]),
                                evolution(h_in, s.times[0]),
                            ],
                        }
                    })
                    .collect();
                Some((*d, psi, branches))
            }
        }
    }

    /// `(factor, dimension)` of every slot.
    fn slot_dims(&self) -> Vec<(u32, usize)> {
        match self {
            OracleModel::Sequential { psi, links } => {
                (1..=links.len() as u32 + 1).map(|f| (f, psi.len())).collect()
            }
            OracleModel::Branched { d, branches, .. } => {
                let n = branches.len() * d;
                vec![(1, *d), (2, *d), (3, n), (4, n)]
            }
            OracleModel::Superspacetime { d, spacetimes, .. } => {
                let n = spacetimes.len() * d;
                vec![(1, *d), (2, *d), (3, n), (4, n)]
            }
        }
    }

    fn output_dim(&self) -> usize {
        match self {
            OracleModel::Sequential { psi, .. } => psi.len(),
            OracleModel::Branched { psi, .. } => psi.len(),
            OracleModel::Superspacetime { d, spacetimes, .. } => d * spacetimes.len(),
        }
    }
}

/// Per-slot products of the letters of `w`, in order of appearance. With
/// `adjoint`, the groups of `w*`: letters taken last to first, each
/// replaced by its conjugate transpose.
fn groups(model: &OracleModel, w: &Word, adjoint: bool) -> Result<Vec<CMatrix>> {
    let slots = model.slot_dims();
    let mut out: Vec<CMatrix> = slots.iter().map(|&(_, d)| CMatrix::identity(d, d)).collect();
    let letters: Vec<_> = if adjoint {
        w.letters().iter().rev().collect()
    } else {
        w.letters().iter().collect()
    };
    for l in letters {
        let bad = OracleError::BadLetter { factor: l.factor, index: l.index };
        let mut slot = None;
        for (k, &(f, _)) in slots.iter().enumerate() {
            if f == l.factor {
                slot = Some(k);
            }
        }
        let k = slot.ok_or(bad.clone())?;
        let basis = gell_mann_basis(slots[k].1);
        let m = basis.get(l.index as usize).ok_or(bad)?;
        let m = if adjoint { dagger(m) } else { m.clone() };
        out[k] = matmul(&out[k], &m);
    }
    Ok(out)
}

/// The written operator chain of a model for given slot operators, and
/// the input vector it acts on.
fn chain(model: &OracleModel, g: &[CMatrix]) -> Result<(Vec<CMatrix>, CVector)> {
    if let OracleModel::Sequential { psi, links } = model {
        let mut ops = Vec::with_capacity(2 * g.len());
        for (k, gk) in g.iter().enumerate() {
            ops.push(gk.clone());
            if k < links.len() {
                ops.push(links[k].clone());
            }
        }
        return Ok((ops, psi.clone()));
    }
    let (d, psi, branches) = model.branched().expect("branched model");
    let (x, y, u, v) = (&g[0], &g[1], &g[2], &g[3]);
    let n = branches.len();
    let mut middle = CMatrix::zeros(n * d, n * d);
    for (k, b) in branches.iter().enumerate() {
        let [a0, a1, a2] = &b.unitaries;
        let (first, second) = if b.x_first { (y, x) } else { (x, y) };
        let c = matmul(&matmul(&matmul(&matmul(a0, first), a1), second), a2) * C64::new(b.weight, 0.0);
        middle += projector_kron(n, k, &c);
    }
    Ok((vec![v.clone(), middle, u.clone()], psi))
}

/// `A(φ, groups)` for one output basis vector `φ`.
fn amplitude(model: &OracleModel, g: &[CMatrix], phi: &CVector) -> Result<C64> {
    let (ops, psi) = chain(model, g)?;
    chain_amplitude(&ops, &psi, phi)
}

/// `ω(b, a) = Σ_φ conj(A(φ, groups of b*)) · A(φ, groups of a)`, with `φ`
/// running over the standard basis of the output space.
pub fn state_kernel_bruteforce(model: &OracleModel, b: &Word, a: &Word) -> Result<C64> {
    let gb = groups(model, b, true)?;
    let ga = groups(model, a, false)?;
    let n = model.output_dim();
    let mut total = zero();
    for i in 0..n {
        let mut phi = CVector::zeros(n);
        phi[i] = C64::new(1.0, 0.0);
        total += amplitude(model, &gb, &phi)?.conj() * amplitude(model, &ga, &phi)?;
    }
    Ok(total)
}
