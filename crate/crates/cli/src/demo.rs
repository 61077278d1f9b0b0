//! Bundled walkthroughs: a qubit-controlled switch on a qubit target, and
//! its fuzz-model reductions.

use causal_algebra::{gell_mann_basis, BasisLetter, CMatrix, CVector, Word};
use causal_core::linalg::{basis_vector, expm_hermitian, kron_vec};
use causal_core::{
    amplitude_switch, AmplitudeModel, FuzzBranch, FuzzModel, Model, Order, SwitchModel, C64,
};
use causal_oracle::{chain_amplitude, state_kernel_bruteforce};
use serde::Serialize;

use crate::bridge::to_oracle;
use crate::error::{CliError, CliResult};
use crate::output::{line, Complex, Report};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;

fn pauli(k: usize) -> CMatrix {
    gell_mann_basis(2)[k].clone()
}

fn rotation(k: usize, theta: f64) -> CMatrix {
    expm_hermitian(&pauli(k), theta / 2.0)
}

/// `[U_vx, U_xy, U_yu]` and `[U_vy, U_yx, U_xu]` for the demo switch.
pub fn demo_unitaries() -> ([CMatrix; 3], [CMatrix; 3]) {
    (
        [rotation(1, 0.3), rotation(0, 0.7), rotation(2, 1.1)],
        [rotation(2, 0.5), rotation(1, 0.9), rotation(0, 0.2)],
    )
}

/// Target state `|0⟩` and output projection `φ_t = 0.8|0⟩ + 0.6|1⟩`.
fn target_states() -> (CVector, CVector) {
    let t = basis_vector(2, 0);
    let phi = CVector::from_column_slice(&[C64::new(0.8, 0.0), C64::new(0.6, 0.0)]);
    (t, phi)
}

fn plus() -> CVector {
    CVector::from_column_slice(&[C64::new(FRAC_1_SQRT_2, 0.0), C64::new(FRAC_1_SQRT_2, 0.0)])
}

/// The operator pair probed by the demos: `x = σx` in slot x, `y = σz` in
/// slot y.
fn probes() -> (CMatrix, CMatrix, Word) {
    let w = Word::new(vec![BasisLetter::new(1, 0), BasisLetter::new(2, 2)]);
    (pauli(0), pauli(2), w)
}

pub fn demo_switch_model(control: &CVector) -> CliResult<SwitchModel> {
    let (zero, one) = demo_unitaries();
    let (t, _) = target_states();
    Ok(SwitchModel::new(2, kron_vec(control, &t), zero, one)?)
}

fn omega_xy(model: &Model) -> CliResult<C64> {
    let (_, _, w) = probes();
    Ok(model.eval_words(&Word::empty(), &w)?)
}

fn oracle_omega_xy(model: &Model) -> CliResult<C64> {
    let (_, _, w) = probes();
    state_kernel_bruteforce(&to_oracle(model), &Word::empty(), &w)
        .map_err(|e| CliError::Verify(e.to_string()))
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SwitchRow {
    pub control: &'static str,
    pub amplitude: Complex,
    /// The fixed-order chain, for the two definite controls.
    pub oracle_amplitude: Option<Complex>,
    pub omega: Complex,
    pub oracle_omega: Complex,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct SwitchDemo {
    pub observable: &'static str,
    pub rows: Vec<SwitchRow>,
    /// `|A(+) − (A(0) + A(1))/√2|`.
    pub linearity_error: f64,
    /// Largest deviation of a row from its oracle value.
    pub oracle_error: f64,
}

impl Report for SwitchDemo {
    fn pretty(&self) -> String {
        let mut out = String::new();
        line(&mut out, format_args!("quantum switch, qubit control and target; {}", self.observable));
        for r in &self.rows {
            let oracle = r.oracle_amplitude.map_or("-".to_string(), |z| z.short());
            line(
                &mut out,
                format_args!(
                    "  control {:<4} amplitude {}  (fixed order {})  ω(e, x·y) = {}",
                    r.control,
                    r.amplitude.short(),
                    oracle,
                    r.omega.short()
                ),
            );
        }
        line(&mut out, format_args!("  branch linearity error {:.3e}", self.linearity_error));
        line(&mut out, format_args!("  oracle error           {:.3e}", self.oracle_error));
        out
    }
}

pub fn run_demo_switch() -> CliResult<SwitchDemo> {
    let (zero, one) = demo_unitaries();
    let (t, phi_t) = target_states();
    let (x, y, _) = probes();
    let phi = kron_vec(&plus(), &phi_t);
    let id4 = CMatrix::identity(4, 4);
    let chains = [
        vec![zero[0].clone(), x.clone(), zero[1].clone(), y.clone(), zero[2].clone()],
        vec![one[0].clone(), y.clone(), one[1].clone(), x.clone(), one[2].clone()],
    ];
    let phi_block = &phi_t * C64::new(FRAC_1_SQRT_2, 0.0);

    let controls: [(&'static str, CVector); 3] =
        [("|0>", basis_vector(2, 0)), ("|1>", basis_vector(2, 1)), ("|+>", plus())];
    let mut rows = Vec::new();
    let mut oracle_error = 0.0f64;
    for (k, (label, c)) in controls.iter().enumerate() {
        let m = demo_switch_model(c)?;
        let amplitude = amplitude_switch(&m, &phi, &x, &y, &id4, &id4)?;
        let oracle_amplitude = match chains.get(k) {
            Some(chain) => {
                let a = chain_amplitude(chain, &t, &phi_block).map_err(|e| CliError::Verify(e.to_string()))?;
                oracle_error = oracle_error.max((a - amplitude).norm());
                Some(a.into())
            }
            None => None,
        };
        let model = Model::Switch(m);
        let omega = omega_xy(&model)?;
        let oracle_omega = oracle_omega_xy(&model)?;
        oracle_error = oracle_error.max((omega - oracle_omega).norm());
        rows.push(SwitchRow {
            control: label,
            amplitude: amplitude.into(),
            oracle_amplitude,
            omega: omega.into(),
            oracle_omega: oracle_omega.into(),
        });
    }
    let a = |k: usize| C64::new(rows[k].amplitude.re, rows[k].amplitude.im);
    let linearity_error = (a(2) - (a(0) + a(1)) * C64::new(FRAC_1_SQRT_2, 0.0)).norm();
    Ok(SwitchDemo {
        observable: "x = σx, y = σz, u = v = I, φ = |+>(0.8|0> + 0.6|1>)",
        rows,
        linearity_error,
        oracle_error,
    })
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzRow {
    pub case: &'static str,
    pub fuzz: Complex,
    pub switch: Complex,
}

#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FuzzDemo {
    pub rows: Vec<FuzzRow>,
    pub reduction_error: f64,
}

impl Report for FuzzDemo {
    fn pretty(&self) -> String {
        let mut out = String::new();
        line(&mut out, format_args!("fuzz model reductions of the demo switch"));
        for r in &self.rows {
            line(&mut out, format_args!("  {:<26} fuzz {}  switch {}", r.case, r.fuzz.short(), r.switch.short()));
        }
        line(&mut out, format_args!("  reduction error {:.3e}", self.reduction_error));
        out
    }
}

pub fn run_demo_fuzz() -> CliResult<FuzzDemo> {
    let (zero, _) = demo_unitaries();
    let (t, phi_t) = target_states();
    let (x, y, _) = probes();
    let id2 = CMatrix::identity(2, 2);
    let id4 = CMatrix::identity(4, 4);
    let phi = kron_vec(&plus(), &phi_t);

    let single = FuzzModel::new(2, vec![FuzzBranch::new(1.0, Order::YThenX, zero).with_label("zero")], t)?;
    let s0 = demo_switch_model(&basis_vector(2, 0))?;
    let s_plus = demo_switch_model(&plus())?;
    let both = FuzzModel::from_switch(&s_plus)?;

    let phi_block = &phi_t * C64::new(FRAC_1_SQRT_2, 0.0);
    let rows = vec![
        FuzzRow {
            case: "single branch, amplitude",
            fuzz: single.amplitude(&phi_block, &x, &y, &id2, &id2)?.into(),
            switch: amplitude_switch(&s0, &phi, &x, &y, &id4, &id4)?.into(),
        },
        FuzzRow {
            case: "single branch, ω(e, x·y)",
            fuzz: omega_xy(&Model::Fuzz(single.clone()))?.into(),
            switch: omega_xy(&Model::Switch(s0))?.into(),
        },
        FuzzRow {
            case: "two branches, amplitude",
            fuzz: both.amplitude(&phi, &x, &y, &id4, &id4)?.into(),
            switch: amplitude_switch(&s_plus, &phi, &x, &y, &id4, &id4)?.into(),
        },
        FuzzRow {
            case: "two branches, ω(e, x·y)",
            fuzz: omega_xy(&Model::Fuzz(both))?.into(),
            switch: omega_xy(&Model::Switch(s_plus))?.into(),
        },
    ];
    let reduction_error = rows
        .iter()
        .map(|r| ((r.fuzz.re - r.switch.re).powi(2) + (r.fuzz.im - r.switch.im).powi(2)).sqrt())
        .fold(0.0, f64::max);
    Ok(FuzzDemo { rows, reduction_error })
}
