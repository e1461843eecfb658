//! Command-line front end: figure tables for the time-domain pulses, the
//! spectrum magnitudes and the parametric traces, plus a self-verification
//! report.

pub mod args;
pub mod figures;
pub mod format;
pub mod verify;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use genlogistic::{SigmoidParams, Which};
use thiserror::Error;

pub use args::Cli;
pub use verify::{Fault, VerifyReport};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const VERIFY_FAILED: i32 = 3;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("failed to write output: {0}")]
    Io(#[from] io::Error),
    #[error("numerical failure: {0}")]
    Numeric(#[from] genlogistic::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io(_) | CliError::Numeric(_) => exit::IO,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subcommand {
    TimeDomain,
    Spectrum,
    Parametric,
    Verify,
}

impl Subcommand {
    pub fn name(self) -> &'static str {
        match self {
            Subcommand::TimeDomain => "time-domain",
            Subcommand::Spectrum => "spectrum",
            Subcommand::Parametric => "parametric",
            Subcommand::Verify => "verify",
        }
    }
}

/// Uniform sampling bounds shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Fully resolved invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub curves: Vec<SigmoidParams>,
    pub grid: GridSpec,
    pub which: Which,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub fault: Fault,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.subcommand != Subcommand::Verify && self.curves.is_empty() {
            return Err(CliError::Usage("at least one --curve is required".into()));
        }
        let GridSpec { min, max, n } = self.grid;
        if !(min.is_finite() && max.is_finite() && min < max) {
            return Err(CliError::Usage(format!(
                "grid bounds must satisfy min < max (got {min}, {max})"
            )));
        }
        if n < 2 {
            return Err(CliError::Usage(format!("need at least 2 samples (got {n})")));
        }
        Ok(())
    }
}

/// Shapes ν of the time-domain and magnitude figures (k = 1, β = 2):
/// 1/ν ∈ {1, 1/4, 1/8, 1/12} and 1/ν ∈ {4, 8, 12}.
pub const FIGURE_SHAPES: [f64; 7] = [1.0, 4.0, 8.0, 12.0, 0.25, 0.125, 1.0 / 12.0];

/// Shapes of the parametric figure: ν = 1, 4, 8..12, 1/4, 1/8..1/12.
pub const PARAMETRIC_SHAPES: [f64; 13] = [
    1.0,
    4.0,
    8.0,
    9.0,
    10.0,
    11.0,
    12.0,
    0.25,
    0.125,
    1.0 / 9.0,
    0.1,
    1.0 / 11.0,
    1.0 / 12.0,
];

pub fn figure_curves(shapes: &[f64]) -> Vec<SigmoidParams> {
    shapes
        .iter()
        .map(|&nu| SigmoidParams::new(1.0, 2.0, nu).expect("figure shapes are positive"))
        .collect()
}

/// Output of one command and the exit status it should produce.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub text: String,
    pub status: i32,
}

/// Runs one command and returns the bytes it would emit.
pub fn render(cfg: &RunConfig) -> Result<Rendered, CliError> {
    cfg.validate()?;
    let text = match cfg.subcommand {
        Subcommand::TimeDomain => figures::cmd_time_domain(cfg)?,
        Subcommand::Spectrum => figures::cmd_spectrum(cfg)?,
        Subcommand::Parametric => figures::cmd_parametric(cfg)?,
        Subcommand::Verify => return Ok(verify::cmd_verify(cfg)),
    };
    Ok(Rendered { text, status: exit::OK })
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(text.as_bytes())?;
            lock.flush()?;
        }
    }
    Ok(())
}

/// Executes `cfg`, writes its output, and returns the process exit code.
pub fn execute(cfg: &RunConfig) -> i32 {
    match render(cfg).and_then(|r| emit(&cfg.output, &r.text).map(|()| r.status)) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("genlogistic: {e}");
            e.exit_code()
        }
    }
}
