//! JSON model descriptions.
//!
//! ```json
//! {
//!   "version": 1,
//!   "family": "switch",
//!   "dims": {"target": 2},
//!   "psi": [[1, 0], [0, 0], [0, 0], [0, 0]],
//!   "unitaries": {"zero": [M, M, M], "one": [M, M, M]},
//!   "phiBasis": "full",
//!   "symbols": {"h": {"slot": "x", "matrix": M}}
//! }
//! ```
//!
//! Matrices are row lists of `[re, im]` pairs, vectors are lists of
//! `[re, im]` pairs. Per family:
//!
//! * `sequential`: `psi` (length `d`), `links` (the `n − 1` unitaries).
//! * `switch`: `psi` (length `2d`), `unitaries.zero = [U_vx, U_xy, U_yu]`,
//!   `unitaries.one = [U_vy, U_yx, U_xu]`.
//! * `fuzz`: `psi` (length `n·d`), `branches: [{weight, order, label?, unitaries}]`
//!   with `order` one of `"yThenX"` (α class) or `"xThenY"` (β class).
//! * `superspacetime`: `psi` is the target state (length `d`),
//!   `referenceSet: ["x", "y"]`, `branches: [{amplitude, permutation,
//!   hamiltonians, times}]` with segments ordered in, mid, out.
//!
//! Every slot `s` with basis letters `λ_1 … λ_m` binds the symbols `s1 … sm`
//! (`s_1 … s_m` when `s` ends in a digit) and `s` itself to `λ_1`. Entries of
//! `symbols` add to or override these.

use std::collections::BTreeMap;

use causal_algebra::{CMatrix, CVector, FreeAlgebra, FreeElement, C64};
use serde::{Deserialize, Serialize};

use crate::error::invalid;
use crate::models::{
    FuzzBranch, FuzzModel, Model, Order, SequentialModel, SstBranch, SuperspacetimeModel,
    SwitchModel,
};
use crate::{AmplitudeModel, StateError, StateResult};

pub const CONFIG_VERSION: u32 = 1;

type JsonMatrix = Vec<Vec<[f64; 2]>>;
type JsonVector = Vec<[f64; 2]>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ModelConfig {
    pub version: u32,
    pub family: FamilyTag,
    pub dims: Dims,
    pub psi: JsonVector,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub links: Vec<JsonMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitaries: Option<SwitchUnitaries>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub branches: Vec<BranchConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reference_set: Option<Vec<String>>,
    #[serde(default = "full_basis")]
    pub phi_basis: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub symbols: BTreeMap<String, SymbolConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_word_len: Option<usize>,
}

fn full_basis() -> String {
    "full".into()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyTag {
    Sequential,
    Switch,
    Fuzz,
    Superspacetime,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dims {
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SwitchUnitaries {
    pub zero: [JsonMatrix; 3],
    pub one: [JsonMatrix; 3],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum OrderTag {
    YThenX,
    XThenY,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct BranchConfig {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unitaries: Option<[JsonMatrix; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitude: Option<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamiltonians: Option<[JsonMatrix; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub times: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymbolConfig {
    pub slot: String,
    pub matrix: JsonMatrix,
}

/// A built model and its symbol table.
#[derive(Debug, Clone)]
pub struct LoadedModel {
    pub model: Model,
    pub symbols: BTreeMap<String, FreeElement>,
}

fn matrix(name: &str, m: &JsonMatrix) -> StateResult<CMatrix> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(StateError::Config(format!("{name}: rows have different lengths")));
    }
    Ok(CMatrix::from_fn(rows, cols, |i, j| C64::new(m[i][j][0], m[i][j][1])))
}

fn matrices(name: &str, ms: &[JsonMatrix; 3]) -> StateResult<[CMatrix; 3]> {
    Ok([
        matrix(&format!("{name}[0]"), &ms[0])?,
        matrix(&format!("{name}[1]"), &ms[1])?,
        matrix(&format!("{name}[2]"), &ms[2])?,
    ])
}

fn vector(v: &JsonVector) -> CVector {
    CVector::from_iterator(v.len(), v.iter().map(|z| C64::new(z[0], z[1])))
}

fn json_matrix(m: &CMatrix) -> JsonMatrix {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

fn json_matrices(ms: &[CMatrix; 3]) -> [JsonMatrix; 3] {
    [json_matrix(&ms[0]), json_matrix(&ms[1]), json_matrix(&ms[2])]
}

fn json_vector(v: &CVector) -> JsonVector {
    v.iter().map(|z| [z.re, z.im]).collect()
}

fn required<'a, T>(v: &'a Option<T>, what: &str, k: usize) -> StateResult<&'a T> {
    v.as_ref()
        .ok_or_else(|| StateError::Config(format!("branch {k}: missing `{what}`")))
}

impl ModelConfig {
    pub fn from_json(text: &str) -> StateResult<Self> {
        let cfg: ModelConfig =
            serde_json::from_str(text).map_err(|e| StateError::Config(e.to_string()))?;
        if cfg.version != CONFIG_VERSION {
            return Err(StateError::Config(format!(
                "unsupported config version {} (expected {CONFIG_VERSION})",
                cfg.version
            )));
        }
        if cfg.phi_basis != "full" {
            return Err(StateError::Config(format!(
                "phiBasis must be \"full\", got {:?}",
                cfg.phi_basis
            )));
        }
        Ok(cfg)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization is infallible")
    }

    /// Validates and builds the model with its symbol table.
    pub fn build(&self) -> StateResult<LoadedModel> {
        let d = self.dims.target;
        let psi = vector(&self.psi);
        let model = match self.family {
            FamilyTag::Sequential => {
                let links = self
                    .links
                    .iter()
                    .enumerate()
                    .map(|(k, m)| matrix(&format!("links[{k}]"), m))
                    .collect::<StateResult<Vec<_>>>()?;
                Model::Sequential(SequentialModel::new(d, psi, links)?)
            }
            FamilyTag::Switch => {
                let u = self
                    .unitaries
                    .as_ref()
                    .ok_or_else(|| StateError::Config("switch needs `unitaries`".into()))?;
                Model::Switch(SwitchModel::new(
                    d,
                    psi,
                    matrices("unitaries.zero", &u.zero)?,
                    matrices("unitaries.one", &u.one)?,
                )?)
            }
            FamilyTag::Fuzz => {
                let mut branches = Vec::with_capacity(self.branches.len());
                for (k, b) in self.branches.iter().enumerate() {
                    let order = match required(&b.order, "order", k)? {
                        OrderTag::YThenX => Order::YThenX,
                        OrderTag::XThenY => Order::XThenY,
                    };
                    let u = matrices(&format!("branches[{k}].unitaries"), required(&b.unitaries, "unitaries", k)?)?;
                    let mut br = FuzzBranch::new(b.weight.unwrap_or(1.0), order, u);
                    br.label = b.label.clone();
                    branches.push(br);
                }
                Model::Fuzz(FuzzModel::new(d, branches, psi)?)
            }
            FamilyTag::Superspacetime => {
                let reference = self
                    .reference_set
                    .clone()
                    .unwrap_or_else(|| vec!["x".into(), "y".into()]);
                let mut branches = Vec::with_capacity(self.branches.len());
                for (k, b) in self.branches.iter().enumerate() {
                    let a = b.amplitude.unwrap_or([1.0, 0.0]);
                    branches.push(SstBranch {
                        permutation: b.permutation.clone().unwrap_or_else(|| vec![0, 1]),
                        hamiltonians: matrices(
                            &format!("branches[{k}].hamiltonians"),
                            required(&b.hamiltonians, "hamiltonians", k)?,
                        )?,
                        times: *required(&b.times, "times", k)?,
                        amplitude: C64::new(a[0], a[1]),
                    });
                }
                Model::Superspacetime(SuperspacetimeModel::new(d, reference, branches, psi)?)
            }
        };
        let model = match self.max_word_len {
            Some(cap) => model.with_max_word_len(cap),
            None => model,
        };
        let mut symbols = default_symbols(&model)?;
        let names = model.slot_names();
        for (name, s) in &self.symbols {
            let k = names
                .iter()
                .position(|n| *n == s.slot)
                .ok_or_else(|| invalid(format!("symbol {name}: unknown slot {:?}", s.slot)))?;
            let factor = model.slots()[k];
            let m = matrix(&format!("symbols.{name}"), &s.matrix)?;
            symbols.insert(name.clone(), model.algebra().embed(factor, &m)?);
        }
        Ok(LoadedModel { model, symbols })
    }

    /// The config that builds `model`, without custom symbols.
    pub fn describe(model: &Model) -> Self {
        let mut cfg = ModelConfig {
            version: CONFIG_VERSION,
            family: FamilyTag::Sequential,
            dims: Dims { target: 0 },
            psi: Vec::new(),
            links: Vec::new(),
            unitaries: None,
            branches: Vec::new(),
            reference_set: None,
            phi_basis: full_basis(),
            symbols: BTreeMap::new(),
            max_word_len: None,
        };
        match model {
            Model::Sequential(m) => {
                cfg.dims.target = m.dim();
                cfg.psi = json_vector(m.psi());
                cfg.links = m.links().iter().map(json_matrix).collect();
            }
            Model::Switch(m) => {
                cfg.family = FamilyTag::Switch;
                cfg.dims.target = m.target_dim();
                cfg.psi = json_vector(m.psi());
                cfg.unitaries = Some(SwitchUnitaries {
                    zero: json_matrices(m.zero_branch()),
                    one: json_matrices(m.one_branch()),
                });
            }
            Model::Fuzz(m) => {
                cfg.family = FamilyTag::Fuzz;
                cfg.dims.target = m.target_dim();
                cfg.psi = json_vector(m.psi());
                cfg.branches = m
                    .branches()
                    .iter()
                    .map(|b| BranchConfig {
                        weight: Some(b.weight),
                        order: Some(match b.order {
                            Order::YThenX => OrderTag::YThenX,
                            Order::XThenY => OrderTag::XThenY,
                        }),
                        label: b.label.clone(),
                        unitaries: Some(json_matrices(&b.unitaries)),
                        ..Default::default()
                    })
                    .collect();
            }
            Model::Superspacetime(m) => {
                cfg.family = FamilyTag::Superspacetime;
                cfg.dims.target = m.target_psi().len();
                cfg.psi = json_vector(m.target_psi());
                cfg.reference_set = Some(m.reference().to_vec());
                cfg.branches = m
                    .branches()
                    .iter()
                    .map(|b| BranchConfig {
                        amplitude: Some([b.amplitude.re, b.amplitude.im]),
                        permutation: Some(b.permutation.clone()),
                        hamiltonians: Some(json_matrices(&b.hamiltonians)),
                        times: Some(b.times),
                        ..Default::default()
                    })
                    .collect();
            }
        }
        cfg
    }
}

/// `s1 … sm` and `s` for every slot `s`; see the module docs.
pub fn default_symbols(model: &Model) -> StateResult<BTreeMap<String, FreeElement>> {
    default_symbols_for(model.algebra(), model.slots(), &model.slot_names())
}

pub(crate) fn default_symbols_for(
    alg: &FreeAlgebra,
    slots: &[u32],
    names: &[String],
) -> StateResult<BTreeMap<String, FreeElement>> {
    let mut out = BTreeMap::new();
    for (name, &factor) in names.iter().zip(slots) {
        let spec = alg.factor(factor)?;
        let sep = if name.ends_with(|c: char| c.is_ascii_digit()) { "_" } else { "" };
        for (k, m) in spec.basis().iter().enumerate() {
            let e = alg.embed(factor, m)?;
            if k == 0 {
                out.insert(name.clone(), e.clone());
            }
            out.insert(format!("{name}{sep}{}", k + 1), e);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use causal_algebra::{BasisLetter, Word};

    const SEQ: &str = r#"{
        "version": 1,
        "family": "sequential",
        "dims": {"target": 2},
        "psi": [[1, 0], [0, 0]],
        "links": [[[[1, 0], [0, 0]], [[0, 0], [1, 0]]]],
        "symbols": {"h": {"slot": "y", "matrix": [[[0, 0], [1, 0]], [[1, 0], [0, 0]]]}}
    }"#;

    #[test]
    fn sequential_config_builds_with_symbols() {
        let loaded = ModelConfig::from_json(SEQ).unwrap().build().unwrap();
        assert!(matches!(loaded.model, Model::Sequential(_)));
        let s = &loaded.symbols;
        assert_eq!(s["x"], s["x1"]);
        assert_eq!(s["y3"], FreeElement::term(Word::letter(2, 2), C64::new(1.0, 0.0)));
        assert_eq!(s["h"], FreeElement::term(Word::new(vec![BasisLetter::new(2, 0)]), C64::new(1.0, 0.0)));
        assert!(!s.contains_key("x4"));
    }

    #[test]
    fn bad_configs_are_rejected() {
        let v2 = SEQ.replace("\"version\": 1", "\"version\": 2");
        assert!(matches!(ModelConfig::from_json(&v2), Err(StateError::Config(_))));
        let extra = SEQ.replace("\"version\": 1", "\"version\": 1, \"bogus\": 0");
        assert!(matches!(ModelConfig::from_json(&extra), Err(StateError::Config(_))));
        let nonunitary = SEQ.replace("[[[[1, 0], [0, 0]]", "[[[[2, 0], [0, 0]]");
        let err = ModelConfig::from_json(&nonunitary).unwrap().build().unwrap_err();
        assert!(matches!(err, StateError::Validation(_)), "{err}");
        let short_psi = SEQ.replace("\"psi\": [[1, 0], [0, 0]]", "\"psi\": [[1, 0]]");
        let err = ModelConfig::from_json(&short_psi).unwrap().build().unwrap_err();
        assert!(matches!(err, StateError::Dimension(_)), "{err}");
    }

    #[test]
    fn describe_round_trips() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let models = vec![
            Model::Sequential(crate::random::sequential(&mut rng, 2, 3).unwrap()),
            Model::Switch(crate::random::switch(&mut rng, 2).unwrap()),
            Model::Fuzz(crate::random::fuzz(&mut rng, 2, 3).unwrap()),
            Model::Superspacetime(crate::random::superspacetime(&mut rng, 2, 2).unwrap()),
        ];
        for m in models {
            let cfg = ModelConfig::describe(&m);
            let back = ModelConfig::from_json(&cfg.to_json()).unwrap();
            assert_eq!(back, cfg);
            let rebuilt = back.build().unwrap().model;
            assert_eq!(rebuilt.family(), m.family());
            let w = Word::new(vec![BasisLetter::new(1, 1), BasisLetter::new(2, 0)]);
            assert_eq!(rebuilt.eval_words(&w, &w).unwrap(), m.eval_words(&w, &w).unwrap());
        }
    }
}
