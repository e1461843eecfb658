//! CSV and JSON encodings of figure tables.
//!
//! CSV: comma-delimited, one header row, every number in scientific notation
//! with 17 significant digits. Output never depends on the locale.

use genlogistic::SigmoidParams;
use serde::Serialize;

use crate::CliError;

/// 17 significant digits; negative zero prints as zero.
pub fn number(x: f64) -> String {
    format!("{:.16e}", x + 0.0)
}

/// Column label for one parameter set, free of CSV delimiters.
pub fn label(p: &SigmoidParams) -> String {
    format!("k={};beta={};nu={}", p.k(), p.beta(), p.nu())
}

/// Column-major numeric table.
#[derive(Debug, Default)]
pub struct CsvTable {
    header: Vec<String>,
    columns: Vec<Vec<f64>>,
}

impl CsvTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: impl Into<String>, values: Vec<f64>) {
        if let Some(first) = self.columns.first() {
            assert_eq!(first.len(), values.len(), "ragged CSV column");
        }
        self.header.push(name.into());
        self.columns.push(values);
    }

    pub fn render(&self) -> Result<String, CliError> {
        if self.columns.iter().flatten().any(|v| !v.is_finite()) {
            return Err(CliError::Numeric(genlogistic::Error::NonFinite("table value")));
        }
        let rows = self.columns.first().map_or(0, Vec::len);
        let mut out = self.header.join(",");
        out.push('\n');
        for r in 0..rows {
            let line: Vec<String> = self.columns.iter().map(|c| number(c[r])).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        Ok(out)
    }
}

#[derive(Debug, Serialize)]
pub struct ParamsJson {
    pub k: f64,
    pub beta: f64,
    pub nu: f64,
    pub label: String,
}

impl From<&SigmoidParams> for ParamsJson {
    fn from(p: &SigmoidParams) -> Self {
        Self {
            k: p.k(),
            beta: p.beta(),
            nu: p.nu(),
            label: label(p),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct GridJson {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

/// Compact JSON with a trailing newline; refuses NaN and infinities, which
/// JSON cannot represent.
pub fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let v = serde_json::to_value(value).map_err(|e| CliError::Usage(e.to_string()))?;
    if has_null_number(&v) {
        return Err(CliError::Numeric(genlogistic::Error::NonFinite("json value")));
    }
    let mut s = v.to_string();
    s.push('\n');
    Ok(s)
}

// serde_json maps non-finite floats to null; no field here is nullable
// except inside arrays of numbers, so any null signals a bad value.
fn has_null_number(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Null => true,
        serde_json::Value::Array(a) => a.iter().any(has_null_number),
        serde_json::Value::Object(o) => o.values().any(has_null_number),
        _ => false,
    }
}
