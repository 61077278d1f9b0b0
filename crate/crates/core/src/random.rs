//! Seeded samplers for matrices, vectors, elements and models.
//!
//! All samplers take the generator explicitly, so a fixed seed fixes the
//! output.

use causal_algebra::{BasisLetter, CMatrix, CVector, FreeAlgebra, FreeElement, Word, C64};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::models::{FuzzBranch, FuzzModel, Order, SequentialModel, SstBranch, SwitchModel};
use crate::{StateResult, SuperspacetimeModel};

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    C64::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
}

pub fn gaussian_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the phases
/// of `R`'s diagonal moved into `Q`.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CMatrix {
    let qr = gaussian_matrix(rng, d, d).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..d {
        let z = r[(j, j)];
        let phase = if z.norm() > 0.0 { z / z.norm() } else { C64::new(1.0, 0.0) };
        for i in 0..d {
            q[(i, j)] *= phase;
        }
    }
    q
}

pub fn hermitian<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CMatrix {
    let g = gaussian_matrix(rng, d, d);
    (&g + g.adjoint()) * C64::new(0.5, 0.0)
}

/// Uniformly distributed unit vector.
pub fn state<R: Rng + ?Sized>(rng: &mut R, d: usize) -> CVector {
    let v = CVector::from_fn(d, |_, _| gaussian(rng));
    let n = v.norm();
    v / C64::new(n, 0.0)
}

/// Uniform real in `[-1, 1)` plus `i` times another.
pub fn coefficient<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// Reduced word of length at most `max_len` over the algebra's generators.
pub fn word<R: Rng + ?Sized>(rng: &mut R, alg: &FreeAlgebra, max_len: usize) -> Word {
    let gens = alg.generators();
    if gens.is_empty() {
        return Word::empty();
    }
    let len = rng.random_range(0..=max_len);
    let mut letters: Vec<BasisLetter> = Vec::with_capacity(len);
    let mut attempts = 0;
    while letters.len() < len && attempts < 16 * (len + 1) {
        attempts += 1;
        let g = gens[rng.random_range(0..gens.len())];
        if letters.last().is_none_or(|l| l.factor != g.factor) {
            letters.push(g);
        }
    }
    Word::new(letters)
}

/// Sum of up to `max_terms` random words with random coefficients.
pub fn element<R: Rng + ?Sized>(
    rng: &mut R,
    alg: &FreeAlgebra,
    max_terms: usize,
    max_len: usize,
) -> FreeElement {
    let n = rng.random_range(1..=max_terms.max(1));
    let mut a = FreeElement::zero();
    for _ in 0..n {
        let w = word(rng, alg, max_len);
        a = a.add(&FreeElement::term(w, coefficient(rng)));
    }
    a
}

pub fn sequential<R: Rng + ?Sized>(rng: &mut R, d: usize, slots: usize) -> StateResult<SequentialModel> {
    let links = (1..slots).map(|_| unitary(rng, d)).collect();
    SequentialModel::new(d, state(rng, d), links)
}

/// Switch with a random product input `ψ' ⊗ ψ''`.
pub fn switch<R: Rng + ?Sized>(rng: &mut R, d: usize) -> StateResult<SwitchModel> {
    let zero = [unitary(rng, d), unitary(rng, d), unitary(rng, d)];
    let one = [unitary(rng, d), unitary(rng, d), unitary(rng, d)];
    let psi = crate::linalg::kron_vec(&state(rng, 2), &state(rng, d));
    SwitchModel::new(d, psi, zero, one)
}

/// Fuzz with `branches` branches of alternating order, unit weights and a
/// random product input.
pub fn fuzz<R: Rng + ?Sized>(rng: &mut R, d: usize, branches: usize) -> StateResult<FuzzModel> {
    let list = (0..branches)
        .map(|k| {
            let order = if k % 2 == 0 { Order::YThenX } else { Order::XThenY };
            FuzzBranch::new(
                1.0,
                order,
                [unitary(rng, d), unitary(rng, d), unitary(rng, d)],
            )
        })
        .collect();
    let psi = crate::linalg::kron_vec(&state(rng, branches), &state(rng, d));
    FuzzModel::new(d, list, psi)
}

/// Superspacetime whose branches alternate between the identity and the
/// swapped identification map.
pub fn superspacetime<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    branches: usize,
) -> StateResult<SuperspacetimeModel> {
    let list = (0..branches)
        .map(|k| SstBranch {
            permutation: if k % 2 == 0 { vec![0, 1] } else { vec![1, 0] },
            hamiltonians: [hermitian(rng, d), hermitian(rng, d), hermitian(rng, d)],
            times: [
                rng.random_range(0.0..2.0),
                rng.random_range(0.0..2.0),
                rng.random_range(0.0..2.0),
            ],
            amplitude: gaussian(rng),
        })
        .collect();
    SuperspacetimeModel::new(d, vec!["x".into(), "y".into()], list, state(rng, d))
}
