use causal_core::{Model, Order};
use causal_oracle::{OracleBranch, OracleModel, OracleSpacetime};

/// The dense description of `model` consumed by the brute-force oracle.
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
