//! Randomized checks of the state axioms and of agreement with the dense
//! oracle.

use causal_core::{eval_bilinear, random, AmplitudeModel, CachedState, GeneralizedState, Model};
use causal_oracle::state_kernel_bruteforce;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bridge::to_oracle;
use crate::error::CliResult;
use crate::output::{line, Report};

pub const AXIOM_TOL: f64 = 1e-9;
pub const EXACT_TOL: f64 = 1e-10;

/// Sample counts per model.
#[derive(Debug, Clone, Copy)]
pub struct Samples {
    pub elements: usize,
    pub pairs: usize,
    pub oracle_words: usize,
}

impl Default for Samples {
    fn default() -> Self {
        Samples { elements: 200, pairs: 200, oracle_words: 50 }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PropertyReport {
    pub name: &'static str,
    pub samples: usize,
    pub max_violation: f64,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ModelReport {
    pub name: String,
    pub family: String,
    pub properties: Vec<PropertyReport>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct VerifyReport {
    pub seed: u64,
    pub models: Vec<ModelReport>,
    pub pass: bool,
}

impl VerifyReport {
    /// `model: property` for every failing property.
    pub fn failures(&self) -> Vec<String> {
        self.models
            .iter()
            .flat_map(|m| {
                m.properties
                    .iter()
                    .filter(|p| !p.pass)
                    .map(move |p| format!("{}: {} (max violation {:.3e})", m.name, p.name, p.max_violation))
            })
            .collect()
    }
}

impl Report for VerifyReport {
    fn pretty(&self) -> String {
        let mut out = String::new();
        line(&mut out, format_args!("seed {}", self.seed));
        for m in &self.models {
            line(&mut out, format_args!("{} ({})", m.name, m.family));
            for p in &m.properties {
                let mark = if p.pass { "ok  " } else { "FAIL" };
                line(
                    &mut out,
                    format_args!("  {mark} {:<18} {:.3e} (tol {:.0e}, n = {})", p.name, p.max_violation, p.tol, p.samples),
                );
            }
        }
        line(&mut out, format_args!("{}", if self.pass { "all properties hold" } else { "FAILED" }));
        out
    }
}

fn property(name: &'static str, samples: usize, max_violation: f64, tol: f64) -> PropertyReport {
    PropertyReport { name, samples, max_violation, tol, pass: max_violation <= tol }
}

/// One random model per family, all with target dimension 2.
pub fn builtin_models(rng: &mut ChaCha8Rng) -> CliResult<Vec<(String, Model)>> {
    Ok(vec![
        ("sequential".into(), Model::Sequential(random::sequential(rng, 2, 2)?)),
        ("switch".into(), Model::Switch(random::switch(rng, 2)?)),
        ("fuzz".into(), Model::Fuzz(random::fuzz(rng, 2, 2)?)),
        ("superspacetime".into(), Model::Superspacetime(random::superspacetime(rng, 2, 2)?)),
    ])
}

/// Runs every property on `model`. `tol` overrides all tolerances.
pub fn verify_model(
    name: &str,
    model: &Model,
    rng: &mut ChaCha8Rng,
    samples: Samples,
    tol: Option<f64>,
) -> CliResult<ModelReport> {
    let alg = model.algebra();
    let state = CachedState::new(model.clone());
    let axiom_tol = tol.unwrap_or(AXIOM_TOL);
    let exact_tol = tol.unwrap_or(EXACT_TOL);
    let max_len = 3.min(alg.max_word_len() / 2);

    let e = alg.unit();
    let norm = (eval_bilinear(&state, &e, &e)? - causal_core::C64::new(1.0, 0.0)).norm();

    let mut positivity = 0.0f64;
    for _ in 0..samples.elements {
        let a = random::element(rng, alg, 4, max_len);
        let v = eval_bilinear(&state, &a.star(), &a)?;
        positivity = positivity.max(-v.re);
    }

    let (mut herm, mut cs) = (0.0f64, 0.0f64);
    for _ in 0..samples.pairs {
        let a = random::element(rng, alg, 3, max_len);
        let b = random::element(rng, alg, 3, max_len);
        let ab = eval_bilinear(&state, &a.star(), &b)?;
        let ba = eval_bilinear(&state, &b.star(), &a)?;
        let aa = eval_bilinear(&state, &a.star(), &a)?.re;
        let bb = eval_bilinear(&state, &b.star(), &b)?.re;
        herm = herm.max((ab - ba.conj()).norm() / (1.0 + aa.abs() + bb.abs()));
        cs = cs.max((ab.norm_sqr() - aa * bb) / (1.0 + (aa * bb).abs()));
    }

    let oracle = to_oracle(model);
    let mut agree = 0.0f64;
    for _ in 0..samples.oracle_words {
        let p = random::word(rng, alg, max_len);
        let q = random::word(rng, alg, max_len);
        let fast = state.kernel(&p, &q)?;
        let slow = state_kernel_bruteforce(&oracle, &p, &q)
            .map_err(|e| causal_core::StateError::Dimension(e.to_string()))?;
        agree = agree.max((fast - slow).norm());
    }

    let properties = vec![
        property("normalization", 1, norm, exact_tol),
        property("positivity", samples.elements, positivity.max(0.0), axiom_tol),
        property("hermiticity", samples.pairs, herm, axiom_tol),
        property("cauchySchwarz", samples.pairs, cs.max(0.0), axiom_tol),
        property("oracleAgreement", samples.oracle_words, agree, exact_tol),
    ];
    let pass = properties.iter().all(|p| p.pass);
    log::info!("verify {name}: {}", if pass { "pass" } else { "fail" });
    Ok(ModelReport { name: name.into(), family: model.family().to_string(), properties, pass })
}

/// Verifies `models`, or the built-in models drawn from `seed` when `None`.
pub fn run_verify(models: Option<Vec<(String, Model)>>, seed: u64, tol: Option<f64>) -> CliResult<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let models = match models {
        Some(m) => m,
        None => builtin_models(&mut rng)?,
    };
    let reports = models
        .iter()
        .map(|(name, m)| verify_model(name, m, &mut rng, Samples::default(), tol))
        .collect::<CliResult<Vec<_>>>()?;
    let pass = reports.iter().all(|r| r.pass);
    Ok(VerifyReport { seed, models: reports, pass })
}
