//! Library side of the `causal-kernel` binary: model loading, the
//! subcommands, and their reports.

pub mod bridge;
pub mod commands;
pub mod demo;
pub mod error;
pub mod output;
pub mod verify;

pub use bridge::to_oracle;
pub use error::{CliError, CliResult};
pub use output::{Complex, Format, Report};
