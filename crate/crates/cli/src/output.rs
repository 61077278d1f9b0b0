use std::fmt::Write as _;

use causal_core::C64;
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

/// A complex number as `{"re": …, "im": …}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for Complex {
    fn from(z: C64) -> Self {
        Complex { re: z.re, im: z.im }
    }
}

impl std::fmt::Display for Complex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Complex {
    /// Ten significant digits, for human-readable output.
    pub fn short(&self) -> String {
        let im = if self.im < 0.0 { "-" } else { "+" };
        format!("{:.10e}{im}{:.10e}i", self.re, self.im.abs())
    }
}

/// A command result that can be printed in each supported format.
pub trait Report: Serialize {
    fn pretty(&self) -> String;

    fn json(&self) -> String {
        json(self)
    }

    fn csv(&self) -> Option<String> {
        None
    }

    fn render(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => Ok(self.json()),
            Format::Pretty => Ok(self.pretty()),
            Format::Csv => self
                .csv()
                .ok_or_else(|| CliError::Usage("csv output is only available for eval and gram".into())),
        }
    }
}

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub(crate) fn line(out: &mut String, args: std::fmt::Arguments<'_>) {
    out.write_fmt(args).expect("writing to a String");
    out.push('\n');
}
