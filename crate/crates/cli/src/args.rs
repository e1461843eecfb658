use std::path::PathBuf;

use clap::{Args, Parser, Subcommand as ClapSubcommand, ValueEnum};
use genlogistic::{SigmoidParams, Which};

use crate::{
    figure_curves, CliError, Fault, Format, GridSpec, RunConfig, Subcommand, FIGURE_SHAPES, PARAMETRIC_SHAPES,
};

#[derive(Debug, Parser)]
#[command(
    name = "genlogistic",
    version,
    about = "Generalized logistic pulses and their Fourier transforms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, ClapSubcommand)]
pub enum Command {
    /// Sample the pulse y'(t) (or the curve y(t)) for each parameter set.
    TimeDomain {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = -6.0, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, default_value_t = 6.0, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(short = 'n', long, default_value_t = 1201)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = WhichArg::Derivative)]
        which: WhichArg,
    },
    /// Re, Im, magnitude and phase of F(omega) for each parameter set.
    Spectrum {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = -15.0, allow_negative_numbers = true)]
        omega_min: f64,
        #[arg(long, default_value_t = 15.0, allow_negative_numbers = true)]
        omega_max: f64,
        #[arg(short = 'n', long, default_value_t = 1201)]
        samples: usize,
    },
    /// (Re F, Im F) traces ordered by omega, for parametric plots.
    Parametric {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = -30.0, allow_negative_numbers = true)]
        omega_min: f64,
        #[arg(long, default_value_t = 30.0, allow_negative_numbers = true)]
        omega_max: f64,
        #[arg(short = 'n', long, default_value_t = 2401)]
        samples: usize,
    },
    /// Check every closed-form identity against its independent route.
    Verify {
        /// Machine-readable report.
        #[arg(long)]
        json: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = FaultArg::None, hide = true)]
        inject_fault: FaultArg,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Parameter set `k,beta,nu`; repeat for several curves. Components
    /// may be fractions such as `1/12`.
    #[arg(long = "curve", value_parser = parse_curve)]
    pub curves: Vec<SigmoidParams>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum WhichArg {
    Curve,
    Derivative,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FaultArg {
    None,
    PhaseSign,
}

fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((num, den)) => {
            let num: f64 = num.trim().parse().map_err(|_| format!("bad number `{s}`"))?;
            let den: f64 = den.trim().parse().map_err(|_| format!("bad number `{s}`"))?;
            num / den
        }
        None => s.parse().map_err(|_| format!("bad number `{s}`"))?,
    };
    if value.is_finite() {
        Ok(value)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// Parses `k,beta,nu`.
pub fn parse_curve(s: &str) -> Result<SigmoidParams, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(format!("expected k,beta,nu but got `{s}`"));
    }
    let k = parse_number(parts[0])?;
    let beta = parse_number(parts[1])?;
    let nu = parse_number(parts[2])?;
    SigmoidParams::new(k, beta, nu).map_err(|e| e.to_string())
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Csv => Format::Csv,
        FormatArg::Json => Format::Json,
    }
}

fn curves_or(curves: Vec<SigmoidParams>, defaults: &[f64]) -> Vec<SigmoidParams> {
    if curves.is_empty() {
        figure_curves(defaults)
    } else {
        curves
    }
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig, CliError> {
        let cfg = match self.command {
            Command::TimeDomain {
                common,
                t_min,
                t_max,
                samples,
                which,
            } => RunConfig {
                subcommand: Subcommand::TimeDomain,
                curves: curves_or(common.curves, &FIGURE_SHAPES),
                grid: GridSpec {
                    min: t_min,
                    max: t_max,
                    n: samples,
                },
                which: match which {
                    WhichArg::Curve => Which::Curve,
                    WhichArg::Derivative => Which::Derivative,
                },
                format: format_of(common.format),
                output: common.output,
                fault: Fault::None,
            },
            Command::Spectrum {
                common,
                omega_min,
                omega_max,
                samples,
            } => RunConfig {
                subcommand: Subcommand::Spectrum,
                curves: curves_or(common.curves, &FIGURE_SHAPES),
                grid: GridSpec {
                    min: omega_min,
                    max: omega_max,
                    n: samples,
                },
                which: Which::Derivative,
                format: format_of(common.format),
                output: common.output,
                fault: Fault::None,
            },
            Command::Parametric {
                common,
                omega_min,
                omega_max,
                samples,
            } => RunConfig {
                subcommand: Subcommand::Parametric,
                curves: curves_or(common.curves, &PARAMETRIC_SHAPES),
                grid: GridSpec {
                    min: omega_min,
                    max: omega_max,
                    n: samples,
                },
                which: Which::Derivative,
                format: format_of(common.format),
                output: common.output,
                fault: Fault::None,
            },
            Command::Verify {
                json,
                output,
                inject_fault,
            } => RunConfig {
                subcommand: Subcommand::Verify,
                curves: Vec::new(),
                grid: GridSpec {
                    min: -20.0,
                    max: 20.0,
                    n: 64,
                },
                which: Which::Derivative,
                format: if json { Format::Json } else { Format::Csv },
                output,
                fault: match inject_fault {
                    FaultArg::None => Fault::None,
                    FaultArg::PhaseSign => Fault::PhaseSign,
                },
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_triples_and_fractions() {
        let p = parse_curve("1,2,1/12").unwrap();
        assert_eq!((p.k(), p.beta(), p.nu()), (1.0, 2.0, 1.0 / 12.0));
        let p = parse_curve(" 0.5 , 3 ,4").unwrap();
        assert_eq!((p.k(), p.beta(), p.nu()), (0.5, 3.0, 4.0));
    }

    #[test]
    fn curve_rejects_malformed_input() {
        assert!(parse_curve("1,2").is_err());
        assert!(parse_curve("1,2,3,4").is_err());
        assert!(parse_curve("1,x,3").is_err());
        assert!(parse_curve("1,2,0").is_err());
        assert!(parse_curve("-1,2,1").is_err());
        assert!(parse_curve("1,2,1/0").is_err());
    }

    #[test]
    fn defaults_follow_figures() {
        let cli = Cli::try_parse_from(["genlogistic", "time-domain"]).unwrap();
        let cfg = cli.into_config().unwrap();
        assert_eq!(cfg.curves.len(), 7);
        assert_eq!(
            cfg.grid,
            GridSpec {
                min: -6.0,
                max: 6.0,
                n: 1201
            }
        );

        let cfg = Cli::try_parse_from(["genlogistic", "spectrum"])
            .unwrap()
            .into_config()
            .unwrap();
        assert_eq!(
            cfg.grid,
            GridSpec {
                min: -15.0,
                max: 15.0,
                n: 1201
            }
        );

        let cfg = Cli::try_parse_from(["genlogistic", "parametric"])
            .unwrap()
            .into_config()
            .unwrap();
        assert_eq!(
            cfg.grid,
            GridSpec {
                min: -30.0,
                max: 30.0,
                n: 2401
            }
        );
        assert_eq!(cfg.curves.len(), 13);
    }

    #[test]
    fn invalid_grid_is_a_usage_error() {
        let cli = Cli::try_parse_from(["genlogistic", "spectrum", "--omega-min", "3", "--omega-max", "-3"]).unwrap();
        assert!(matches!(cli.into_config(), Err(CliError::Usage(_))));
        let cli = Cli::try_parse_from(["genlogistic", "time-domain", "-n", "1"]).unwrap();
        assert!(matches!(cli.into_config(), Err(CliError::Usage(_))));
    }
}
