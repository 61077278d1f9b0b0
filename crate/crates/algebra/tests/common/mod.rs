#![allow(dead_code)]

use std::collections::BTreeMap;

use causal_algebra::rewrite::RewriteOrder;
use causal_algebra::{
    BasisLetter, CMatrix, FreeAlgebra, FreeElement, HomTarget, InducedHom, Letter, Word, C64,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn cplx(rng: &mut ChaCha8Rng) -> C64 {
    C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn matrix(rng: &mut ChaCha8Rng, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |_, _| cplx(rng))
}

pub fn unitary(rng: &mut ChaCha8Rng, d: usize) -> CMatrix {
    matrix(rng, d).qr().q()
}

/// Two to four factors with dimensions in 1..=3.
pub fn algebra(rng: &mut ChaCha8Rng) -> FreeAlgebra {
    let n = rng.random_range(2..=4);
    let dims: Vec<(u32, usize)> = (1..=n).map(|i| (i, rng.random_range(1..=3))).collect();
    FreeAlgebra::gell_mann(&dims).unwrap()
}

/// Unreduced word of arbitrary matrices; neighbouring letters share a
/// factor often enough to exercise merging.
pub fn raw_word(rng: &mut ChaCha8Rng, alg: &FreeAlgebra, max_len: usize) -> Vec<Letter> {
    let factors: Vec<_> = alg.factors().map(|f| (f.index(), f.dim())).collect();
    let len = rng.random_range(0..=max_len);
    let mut out: Vec<Letter> = Vec::with_capacity(len);
    for _ in 0..len {
        let (f, d) = match out.last() {
            Some(prev) if rng.random_bool(0.4) => {
                let d = prev.matrix.nrows();
                (prev.factor, d)
            }
            _ => factors[rng.random_range(0..factors.len())],
        };
        let m = match rng.random_range(0..4) {
            0 => CMatrix::identity(d, d) * cplx(rng),
            1 => {
                let k = rng.random_range(0..(d * d).max(2) - 1);
                alg.factor(f)
                    .unwrap()
                    .basis_matrix(k as u16)
                    .cloned()
                    .unwrap_or_else(|| CMatrix::identity(d, d))
            }
            _ => matrix(rng, d),
        };
        out.push(Letter::new(f, m));
    }
    out
}

pub fn canonical_word(rng: &mut ChaCha8Rng, alg: &FreeAlgebra, max_len: usize) -> Word {
    let letters: Vec<_> = alg
        .factors()
        .filter(|f| f.basis_len() > 0)
        .map(|f| (f.index(), f.basis_len()))
        .collect();
    let len = rng.random_range(0..=max_len);
    let mut w: Vec<BasisLetter> = Vec::new();
    if letters.is_empty() {
        return Word::empty();
    }
    while w.len() < len {
        let (f, n) = letters[rng.random_range(0..letters.len())];
        if w.last().is_some_and(|l| l.factor == f) {
            if letters.len() == 1 {
                break;
            }
            continue;
        }
        w.push(BasisLetter::new(f, rng.random_range(0..n) as u16));
    }
    Word::new(w)
}

pub fn element(rng: &mut ChaCha8Rng, alg: &FreeAlgebra, max_terms: usize, max_len: usize) -> FreeElement {
    let mut e = FreeElement::zero();
    for _ in 0..rng.random_range(1..=max_terms) {
        e = e.add(&FreeElement::term(canonical_word(rng, alg, max_len), cplx(rng)));
    }
    e
}

/// Random amplification homomorphisms into `M_6`, which every factor
/// dimension in 1..=3 divides.
pub fn random_hom(rng: &mut ChaCha8Rng, alg: &FreeAlgebra) -> (InducedHom, Vec<(u32, CMatrix)>) {
    let k = 6;
    let mut targets = BTreeMap::new();
    let mut unitaries = Vec::new();
    for f in alg.factors() {
        let v = unitary(rng, k);
        targets.insert(f.index(), HomTarget::amplified(alg, f.index(), &v).unwrap());
        unitaries.push((f.index(), v));
    }
    (InducedHom::new(alg, k, targets).unwrap(), unitaries)
}

/// `φ_i(m) = V_i (m ⊗ I) V_i†` on an arbitrary matrix.
pub fn apply_factor(unitaries: &[(u32, CMatrix)], factor: u32, m: &CMatrix) -> CMatrix {
    let v = &unitaries.iter().find(|(f, _)| *f == factor).unwrap().1;
    let r = v.nrows() / m.nrows();
    v * m.kronecker(&CMatrix::identity(r, r)) * v.adjoint()
}

pub struct RandomOrder<'a>(pub &'a mut ChaCha8Rng);

impl RewriteOrder for RandomOrder<'_> {
    fn pick(&mut self, n: usize) -> usize {
        self.0.random_range(0..n)
    }
}
