use std::path::Path;

use causal_algebra::expr::{eval_expr, parse};
use causal_algebra::{FreeElement, Word};
use causal_core::gns::{self, GnsOptions, GnsReport, WordBasis};
use causal_core::{eval_bilinear, AmplitudeModel, CachedState, LoadedModel, ModelConfig};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::output::{line, Complex, Report};

pub fn load_model(path: &Path) -> CliResult<LoadedModel> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let loaded = ModelConfig::from_json(&text)?.build()?;
    log::info!("loaded {} model from {}", loaded.model.family(), path.display());
    Ok(loaded)
}

/// Parses `src` and evaluates it against the model's symbol table.
pub fn element(loaded: &LoadedModel, src: &str) -> CliResult<FreeElement> {
    let ast = parse(src)?;
    Ok(eval_expr(loaded.model.algebra(), &ast, &loaded.symbols)?)
}

#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct EvalReport(pub Complex);

impl Report for EvalReport {
    /// One line, `{"re":…,"im":…}`.
    fn json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("reports serialize");
        s.push('\n');
        s
    }

    fn pretty(&self) -> String {
        format!("ω(b, a) = {}\n", self.0.short())
    }

    fn csv(&self) -> Option<String> {
        Some(format!("re,im\n{},{}\n", self.0.re, self.0.im))
    }
}

/// `ω(b, a)`.
pub fn run_eval(loaded: &LoadedModel, b: &str, a: &str) -> CliResult<EvalReport> {
    let b = element(loaded, b)?;
    let a = element(loaded, a)?;
    let state = CachedState::new(loaded.model.clone());
    Ok(EvalReport(eval_bilinear(&state, &b, &a)?.into()))
}

#[derive(Debug, Clone, Serialize)]
pub struct GramReport {
    pub words: Vec<String>,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl Report for GramReport {
    fn pretty(&self) -> String {
        let mut out = String::new();
        for (i, w) in self.words.iter().enumerate() {
            let row: Vec<String> = (0..self.words.len())
                .map(|j| format!("{:>+.6}{:>+.6}i", self.re[i][j], self.im[i][j]))
                .collect();
            line(&mut out, format_args!("{w:<12} {}", row.join("  ")));
        }
        out
    }

    fn csv(&self) -> Option<String> {
        let mut out = String::new();
        line(&mut out, format_args!("word,{}", self.words.join(",")));
        for (i, w) in self.words.iter().enumerate() {
            let row: Vec<String> = (0..self.words.len())
                .map(|j| Complex { re: self.re[i][j], im: self.im[i][j] }.to_string())
                .collect();
            line(&mut out, format_args!("{w},{}", row.join(",")));
        }
        Some(out)
    }
}

fn word_label(w: &Word) -> String {
    w.to_string()
}

/// `G[a][b] = ω(a*, b)` over all words of length at most `max_len`.
pub fn run_gram(loaded: &LoadedModel, max_len: usize, jobs: usize) -> CliResult<GramReport> {
    let basis = WordBasis::new(loaded.model.algebra(), max_len);
    let g = gns::gram(&CachedState::new(loaded.model.clone()), &basis, jobs)?;
    let n = basis.len();
    Ok(GramReport {
        words: basis.words().iter().map(word_label).collect(),
        re: (0..n).map(|i| (0..n).map(|j| g[(i, j)].re).collect()).collect(),
        im: (0..n).map(|i| (0..n).map(|j| g[(i, j)].im).collect()).collect(),
    })
}

impl Report for GnsReport {
    fn pretty(&self) -> String {
        let mut out = String::new();
        line(&mut out, format_args!("basis size             {}", self.basis_size));
        line(&mut out, format_args!("null rank              {}", self.null_rank));
        line(&mut out, format_args!("min eigenvalue         {:.3e}", self.min_eigenvalue));
        line(&mut out, format_args!("left-ideal violation   {:.3e}", self.left_ideal_max_violation));
        match self.reconstruction_max_error {
            Some(e) => line(&mut out, format_args!("reconstruction error   {e:.3e}")),
            None => line(&mut out, format_args!("reconstruction error   n/a (no representation)")),
        }
        out
    }
}

pub fn run_gns(loaded: &LoadedModel, opts: &GnsOptions) -> CliResult<GnsReport> {
    let res = gns::run(&CachedState::new(loaded.model.clone()), opts)?;
    if let Err(e) = &res.representation {
        log::warn!("{e}");
    }
    Ok(res.report())
}
