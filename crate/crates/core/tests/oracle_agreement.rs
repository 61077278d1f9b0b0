mod common;

use causal_core::gns::{gram, WordBasis};
use causal_core::{random, AmplitudeModel, CachedState, GeneralizedState};
use causal_oracle::state_kernel_bruteforce;
use common::*;

#[test]
fn kernels_match_the_dense_oracle() {
    let mut rng = rng(3003);
    for family in 0..4 {
        let mut checked = 0;
        for _ in 0..4 {
            let model = random_model(&mut rng, family, 2);
            let oracle = to_oracle(&model);
            let s = CachedState::new(model.clone());
            for _ in 0..15 {
                let p = random::word(&mut rng, model.algebra(), 3);
                let q = random::word(&mut rng, model.algebra(), 3);
                let got = s.kernel(&p, &q).unwrap();
                let expect = state_kernel_bruteforce(&oracle, &p, &q).unwrap();
                assert!(
                    (got - expect).norm() < 1e-10,
                    "{} {p} {q}: {got} vs {expect}",
                    model.family()
                );
                checked += 1;
            }
        }
        assert!(checked >= 50);
    }
}

#[test]
fn parallel_gram_equals_serial_gram() {
    let mut rng = rng(4004);
    for model in all_families(&mut rng, 2) {
        let s = CachedState::new(model.clone());
        let basis = WordBasis::new(model.algebra(), 2);
        let serial = gram(&s, &basis, 1).unwrap();
        let parallel = gram(&CachedState::new(model), &basis, 4).unwrap();
        assert_eq!(serial, parallel);
    }
}
