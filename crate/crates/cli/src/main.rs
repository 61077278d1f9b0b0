use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use causal_cli::commands::{load_model, run_eval, run_gns, run_gram};
use causal_cli::demo::{run_demo_fuzz, run_demo_switch};
use causal_cli::verify::run_verify;
use causal_cli::{CliError, CliResult, Format, Report};
use causal_core::gns::{GnsOptions, DEFAULT_MAX_LEN, LEFT_IDEAL_TOL, NULL_TOL};
use clap::{Args, Parser, Subcommand};

/// Generalized states on free products of matrix algebras.
#[derive(Debug, Parser)]
#[command(name = "causal-kernel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    format: Format,
}

#[derive(Debug, Args)]
struct ModelArg {
    /// Model description (JSON).
    #[arg(long)]
    model: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print ω(b, a).
    Eval {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long = "b", value_name = "EXPR")]
        b: String,
        #[arg(long = "a", value_name = "EXPR")]
        a: String,
    },
    /// Gram matrix G[a][b] = ω(a*, b) over words of length ≤ L.
    Gram {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_name = "L", default_value_t = 2)]
        max_len: usize,
        #[arg(long, value_name = "N", default_value_t = 1)]
        jobs: usize,
    },
    /// Truncated GNS construction report.
    Gns {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_name = "L", default_value_t = DEFAULT_MAX_LEN)]
        max_len: usize,
        /// Left-ideal tolerance.
        #[arg(long, value_name = "X", default_value_t = LEFT_IDEAL_TOL)]
        tol: f64,
        /// Relative eigenvalue cutoff for the null space.
        #[arg(long, value_name = "X", default_value_t = NULL_TOL)]
        null_tol: f64,
        #[arg(long, value_name = "N", default_value_t = 1)]
        jobs: usize,
    },
    /// Randomized axiom and oracle checks; built-in models when no model is given.
    Verify {
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, value_name = "N", default_value_t = 0)]
        seed: u64,
        /// Override every tolerance.
        #[arg(long, value_name = "X")]
        tol: Option<f64>,
    },
    /// Walk through the bundled quantum switch.
    DemoSwitch,
    /// Fuzz-model reductions of the bundled switch.
    DemoFuzz,
}

fn render<R: Report>(r: &R, format: Format) -> CliResult<String> {
    r.render(format)
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Eval { model, b, a } => render(&run_eval(&load_model(&model.model)?, b, a)?, cli.format),
        Command::Gram { model, max_len, jobs } => {
            render(&run_gram(&load_model(&model.model)?, *max_len, *jobs)?, cli.format)
        }
        Command::Gns { model, max_len, tol, null_tol, jobs } => {
            let opts = GnsOptions {
                max_len: *max_len,
                null_tol: *null_tol,
                left_ideal_tol: *tol,
                jobs: *jobs,
                ..GnsOptions::default()
            };
            render(&run_gns(&load_model(&model.model)?, &opts)?, cli.format)
        }
        Command::Verify { model, seed, tol } => {
            let models = match model {
                Some(p) => Some(vec![(p.display().to_string(), load_model(p)?.model)]),
                None => None,
            };
            let report = run_verify(models, *seed, *tol)?;
            let text = render(&report, cli.format)?;
            if report.pass {
                Ok(text)
            } else {
                print!("{text}");
                Err(CliError::Verify(report.failures().join("; ")))
            }
        }
        Command::DemoSwitch => render(&run_demo_switch()?, cli.format),
        Command::DemoFuzz => render(&run_demo_fuzz()?, cli.format),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter("CAUSAL_KERNEL_LOG"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            // a closed pipe is not an error worth reporting
            let _ = out.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
