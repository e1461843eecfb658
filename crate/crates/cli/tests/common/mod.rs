#![allow(dead_code)]

use clap::Parser;
use genlogistic_cli::{render, Cli};

/// Parsed CSV: header names and numeric columns.
pub struct Table {
    pub header: Vec<String>,
    pub columns: Vec<Vec<f64>>,
}

impl Table {
    pub fn parse(text: &str) -> Table {
        let mut lines = text.lines();
        let header: Vec<String> = lines.next().expect("header").split(',').map(String::from).collect();
        let mut columns = vec![Vec::new(); header.len()];
        for line in lines {
            let cells: Vec<&str> = line.split(',').collect();
            assert_eq!(cells.len(), header.len(), "ragged row: {line}");
            for (col, cell) in columns.iter_mut().zip(cells) {
                col.push(cell.parse::<f64>().unwrap_or_else(|_| panic!("bad number {cell}")));
            }
        }
        Table { header, columns }
    }

    pub fn rows(&self) -> usize {
        self.columns[0].len()
    }

    pub fn column(&self, name: &str) -> &[f64] {
        let i = self
            .header
            .iter()
            .position(|h| h == name)
            .unwrap_or_else(|| panic!("no column {name}"));
        &self.columns[i]
    }

    /// Columns whose name starts with `prefix[`, in order.
    pub fn family(&self, prefix: &str) -> Vec<(&str, &[f64])> {
        let tag = format!("{prefix}[");
        self.header
            .iter()
            .zip(&self.columns)
            .filter(|(h, _)| h.starts_with(&tag))
            .map(|(h, c)| (h.as_str(), c.as_slice()))
            .collect()
    }
}

/// `nu` parsed out of a `...;nu=<value>]` column label.
pub fn nu_of(label: &str) -> f64 {
    let start = label.find("nu=").expect("nu in label") + 3;
    label[start..label.len() - 1].parse().unwrap()
}

/// Runs the CLI in-process and returns (text, status).
pub fn run(args: &[&str]) -> (String, i32) {
    let mut full = vec!["genlogistic"];
    full.extend_from_slice(args);
    let cfg = Cli::try_parse_from(full)
        .expect("valid flags")
        .into_config()
        .expect("valid config");
    let r = render(&cfg).expect("render");
    (r.text, r.status)
}

pub fn argmax(v: &[f64]) -> usize {
    let mut best = 0;
    for (i, &x) in v.iter().enumerate() {
        if x > v[best] {
            best = i;
        }
    }
    best
}

/// One strict rise to the maximum and one strict fall after it, ignoring
/// stretches that have underflowed to zero.
pub fn is_unimodal(v: &[f64]) -> bool {
    let m = argmax(v);
    let rising = v[..=m].windows(2).all(|w| w[1] > w[0] || (w[0] == 0.0 && w[1] == 0.0));
    let falling = v[m..].windows(2).all(|w| w[1] < w[0] || (w[0] == 0.0 && w[1] == 0.0));
    rising && falling
}
