use std::fs;
use std::io::{self, Write};
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use holoflow_core::rational::{format_decimal, format_rational};
use holoflow_core::verify::Sweep;
use holoflow_core::{Rational, ResidualReport};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// A finished report in all three renderings. Everything is built after the
/// computation, from sorted data, so output is deterministic.
pub struct Report {
    pub pass: bool,
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub text: Vec<String>,
}

impl Report {
    pub fn new(pass: bool, json: Value) -> Self {
        Report {
            pass,
            json,
            header: Vec::new(),
            rows: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn emit(&self, format: Format, out: Option<&Path>) -> Result<()> {
        let bytes = match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json)?;
                s.push('\n');
                s.into_bytes()
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header)?;
                for row in &self.rows {
                    w.write_record(row)?;
                }
                w.into_inner().context("flushing csv")?
            }
            Format::Text => {
                let mut s = self.text.join("\n");
                s.push('\n');
                s.into_bytes()
            }
        };
        match out {
            Some(path) => fs::write(path, bytes).with_context(|| format!("writing {}", path.display())),
            None => io::stdout().write_all(&bytes).context("writing stdout"),
        }
    }
}

/// Exact value, plus a rounded one when asked for.
pub fn value_json(v: &Rational, decimal: Option<usize>) -> Value {
    match decimal {
        Some(k) => json!({ "exact": format_rational(v), "decimal": format_decimal(v, k) }),
        None => json!(format_rational(v)),
    }
}

pub fn value_cells(v: &Rational, decimal: Option<usize>) -> Vec<String> {
    let mut out = vec![format_rational(v)];
    if let Some(k) = decimal {
        out.push(format_decimal(v, k));
    }
    out
}

pub fn value_header(name: &str, decimal: Option<usize>) -> Vec<String> {
    let mut out = vec![name.to_string()];
    if decimal.is_some() {
        out.push(format!("{name}_decimal"));
    }
    out
}

pub fn residual_json(r: &ResidualReport, decimal: Option<usize>) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable report");
    if let Some(k) = decimal {
        v["decimal"] = json!(format_decimal(&r.value, k));
    }
    v
}

/// Sweeps rendered as one report; CSV and text list the violations only.
pub fn sweeps_report(command: &str, operator: Value, sweeps: &[Sweep], decimal: Option<usize>) -> Report {
    let total: usize = sweeps.iter().map(|s| s.violations.len()).sum();
    let checked: usize = sweeps.iter().map(|s| s.checked).sum();
    let json = json!({
        "command": command,
        "operator": operator,
        "sweeps": sweeps.iter().map(|s| json!({
            "condition": s.condition,
            "scale": s.scale,
            "checked": s.checked,
            "violations": s.violations.iter().map(|r| residual_json(r, decimal)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "checked": checked,
        "violations": total,
        "pass": total == 0,
    });
    let mut report = Report::new(total == 0, json);
    report.header = ["condition", "scale", "site"].iter().map(|s| s.to_string()).collect();
    report.header.extend(value_header("value", decimal));
    for s in sweeps {
        report
            .text
            .push(format!("{} scale {}: {} sites, {} violations", s.condition, s.scale, s.checked, s.violations.len()));
        for r in &s.violations {
            let mut row = vec![s.condition.to_string(), s.scale.to_string(), r.site.to_string()];
            row.extend(value_cells(&r.value, decimal));
            report.rows.push(row);
            report.text.push(format!("  {}: {}", r.site, r.value));
        }
    }
    report.text.push(format!("{checked} sites checked, {total} violations"));
    report
}
