//! Figure tables: pulses in time, spectrum magnitudes, parametric traces.

use genlogistic::logistic_model::sample_time_domain;
use genlogistic::spectral::sample_spectrum;
use genlogistic::{FrequencyGrid, SpectrumTable, Which};
use serde::Serialize;

use crate::format::{json, label, CsvTable, GridJson, ParamsJson};
use crate::{CliError, Format, RunConfig};

fn grid_json(cfg: &RunConfig) -> GridJson {
    GridJson {
        min: cfg.grid.min,
        max: cfg.grid.max,
        n: cfg.grid.n,
    }
}

fn spectra(cfg: &RunConfig) -> Result<Vec<SpectrumTable>, CliError> {
    let grid = FrequencyGrid::new(cfg.grid.min, cfg.grid.max, cfg.grid.n)?;
    cfg.curves
        .iter()
        .map(|p| sample_spectrum(p, &grid).map_err(CliError::from))
        .collect()
}

#[derive(Serialize)]
struct TimeDomainJson {
    subcommand: &'static str,
    which: &'static str,
    grid: GridJson,
    t: Vec<f64>,
    curves: Vec<TimeCurveJson>,
}

#[derive(Serialize)]
struct TimeCurveJson {
    params: ParamsJson,
    values: Vec<f64>,
}

/// Columns `t`, then one value column per parameter set.
pub fn cmd_time_domain(cfg: &RunConfig) -> Result<String, CliError> {
    let series = cfg
        .curves
        .iter()
        .map(|p| sample_time_domain(p, cfg.grid.min, cfg.grid.max, cfg.grid.n, cfg.which))
        .collect::<Result<Vec<_>, _>>()?;
    let t = series[0].t().to_vec();
    let prefix = match cfg.which {
        Which::Curve => "y",
        Which::Derivative => "f",
    };
    match cfg.format {
        Format::Csv => {
            let mut table = CsvTable::new();
            table.push("t", t);
            for s in &series {
                table.push(format!("{prefix}[{}]", label(s.params())), s.values().to_vec());
            }
            table.render()
        }
        Format::Json => json(&TimeDomainJson {
            subcommand: "time-domain",
            which: match cfg.which {
                Which::Curve => "curve",
                Which::Derivative => "derivative",
            },
            grid: grid_json(cfg),
            t,
            curves: series
                .iter()
                .map(|s| TimeCurveJson {
                    params: s.params().into(),
                    values: s.values().to_vec(),
                })
                .collect(),
        }),
    }
}

#[derive(Serialize)]
struct SpectrumJson {
    subcommand: &'static str,
    grid: GridJson,
    omega: Vec<f64>,
    curves: Vec<SpectrumCurveJson>,
}

#[derive(Serialize)]
struct SpectrumCurveJson {
    params: ParamsJson,
    re: Vec<f64>,
    im: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    magnitude: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phase: Option<Vec<f64>>,
}

fn spectrum_output(cfg: &RunConfig, name: &'static str, polar: bool) -> Result<String, CliError> {
    let tables = spectra(cfg)?;
    let omega = tables[0].omega().to_vec();
    let re = |t: &SpectrumTable| t.values().iter().map(|v| v.re).collect::<Vec<_>>();
    let im = |t: &SpectrumTable| t.values().iter().map(|v| v.im).collect::<Vec<_>>();
    match cfg.format {
        Format::Csv => {
            let mut table = CsvTable::new();
            table.push("omega", omega);
            for t in &tables {
                let l = label(t.params());
                table.push(format!("re[{l}]"), re(t));
                table.push(format!("im[{l}]"), im(t));
                if polar {
                    table.push(format!("magnitude[{l}]"), t.magnitudes().collect());
                    table.push(format!("phase[{l}]"), t.phases().collect());
                }
            }
            table.render()
        }
        Format::Json => json(&SpectrumJson {
            subcommand: name,
            grid: grid_json(cfg),
            omega,
            curves: tables
                .iter()
                .map(|t| SpectrumCurveJson {
                    params: t.params().into(),
                    re: re(t),
                    im: im(t),
                    magnitude: polar.then(|| t.magnitudes().collect()),
                    phase: polar.then(|| t.phases().collect()),
                })
                .collect(),
        }),
    }
}

/// Columns `omega`, then `re`, `im`, `magnitude`, `phase` per parameter set.
pub fn cmd_spectrum(cfg: &RunConfig) -> Result<String, CliError> {
    spectrum_output(cfg, "spectrum", true)
}

/// Columns `omega`, then the `(re, im)` pair per parameter set.
pub fn cmd_parametric(cfg: &RunConfig) -> Result<String, CliError> {
    spectrum_output(cfg, "parametric", false)
}
