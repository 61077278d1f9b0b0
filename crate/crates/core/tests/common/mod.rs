#![allow(dead_code)]

use causal_algebra::{CMatrix, CVector, FreeAlgebra, InducedHom, Word, C64};
use causal_core::{
    random, AmplitudeModel, GeneralizedState, Model, Order, StateResult,
};
use causal_oracle::{OracleBranch, OracleModel, OracleSpacetime};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// The dense description of a model, for the brute-force oracle.
pub fn to_oracle(model: &Model) -> OracleModel {
    match model {
        Model::Sequential(m) => OracleModel::Sequential {
            psi: m.psi().clone(),
            links: m.links().to_vec(),
        },
        Model::Switch(m) => OracleModel::switch(
            m.target_dim(),
            m.psi().clone(),
            m.zero_branch().clone(),
            m.one_branch().clone(),
        ),
        Model::Fuzz(m) => OracleModel::Branched {
            d: m.target_dim(),
            psi: m.psi().clone(),
            branches: m
                .branches()
                .iter()
                .map(|b| OracleBranch {
                    weight: b.weight,
                    x_first: b.order == Order::XThenY,
                    unitaries: b.unitaries.clone(),
                })
                .collect(),
        },
        Model::Superspacetime(m) => OracleModel::Superspacetime {
            d: m.target_psi().len(),
            target_psi: m.target_psi().clone(),
            spacetimes: m
                .branches()
                .iter()
                .map(|b| OracleSpacetime {
                    amplitude: b.amplitude,
                    permutation: b.permutation.clone(),
                    hamiltonians: b.hamiltonians.clone(),
                    times: b.times,
                })
                .collect(),
        },
    }
}

/// One random model per family with target dimension `d`.
pub fn all_families(rng: &mut ChaCha8Rng, d: usize) -> Vec<Model> {
    vec![
        Model::Sequential(random::sequential(rng, d, 2).unwrap()),
        Model::Switch(random::switch(rng, d).unwrap()),
        Model::Fuzz(random::fuzz(rng, d, 2).unwrap()),
        Model::Superspacetime(random::superspacetime(rng, d, 2).unwrap()),
    ]
}

/// A model of the given family with random parameters and a random
/// target dimension in `1..=max_d`.
pub fn random_model(rng: &mut ChaCha8Rng, family: usize, max_d: usize) -> Model {
    let d = rng.random_range(1..=max_d);
    match family {
        0 => {
            let n = rng.random_range(1..=3);
            Model::Sequential(random::sequential(rng, d, n).unwrap())
        }
        1 => Model::Switch(random::switch(rng, d).unwrap()),
        2 => {
            let n = rng.random_range(1..=3);
            Model::Fuzz(random::fuzz(rng, d, n).unwrap())
        }
        _ => {
            let n = rng.random_range(1..=3);
            Model::Superspacetime(random::superspacetime(rng, d, n).unwrap())
        }
    }
}

/// `I_r ⊗ m`.
pub fn control_diag(r: usize, m: &CMatrix) -> CMatrix {
    CMatrix::identity(r, r).kronecker(m)
}

pub fn ket(v: &[C64]) -> CVector {
    CVector::from_column_slice(v)
}

pub fn kron(a: &CVector, b: &CVector) -> CVector {
    causal_core::linalg::kron_vec(a, b)
}

/// `ω(p, q) = ⟨Φ(p*)ψ | Φ(q)ψ⟩` for a *-homomorphism `Φ` into `M_k`. Its
/// null space is always a left ideal.
pub struct HomState {
    pub alg: FreeAlgebra,
    pub phi: InducedHom,
    pub psi: CVector,
}

impl HomState {
    fn vector(&self, w: &Word) -> StateResult<CVector> {
        let e = causal_algebra::FreeElement::term(w.clone(), c(1.0, 0.0));
        Ok(self.phi.apply(&e)? * &self.psi)
    }
}

impl GeneralizedState for HomState {
    fn algebra(&self) -> &FreeAlgebra {
        &self.alg
    }

    fn kernel(&self, p: &Word, q: &Word) -> StateResult<C64> {
        Ok(self.vector(&p.reversed())?.dotc(&self.vector(q)?))
    }
}

/// Amplitude of a model's output vector against `phi` for explicit slot
/// operators.
pub fn amplitude(model: &Model, phi: &CVector, groups: &[CMatrix]) -> C64 {
    phi.dotc(&model.amplitude_vector(groups).unwrap())
}
