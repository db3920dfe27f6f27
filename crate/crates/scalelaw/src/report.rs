//! Rendering of operation results as aligned tables, CSV, or JSON.
//!
//! Tables are for humans, CSV is plot-ready, JSON carries the full structure
//! with the field names of the underlying types. Scalar results render as
//! the bare number in table form.

use scalelaw_core::{FitResult, SerialFraction, SpeedupBound, SpeedupCurve, TimingRecord};
use serde_json::{json, Value};

use crate::timing_csv::timing_records_to_csv;

/// Output format selected with `--format`; tables are the default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum ReportFormat {
    Table,
    Csv,
    Json,
}

/// A result that knows how to render itself in every [`ReportFormat`].
pub trait Render {
    fn table(&self) -> String;
    fn csv(&self) -> String;
    fn json(&self) -> Value;
}

/// Renders a report in the requested format, without a trailing newline.
pub fn emit<R: Render + ?Sized>(report: &R, format: ReportFormat) -> String {
    match format {
        ReportFormat::Table => report.table(),
        ReportFormat::Csv => report.csv(),
        ReportFormat::Json => report.json().to_string(),
    }
}

/// Left-aligns each column to its widest cell.
fn aligned_columns(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let mut widths = vec![0usize; columns];
    for row in rows {
        for (idx, cell) in row.iter().enumerate() {
            widths[idx] = widths[idx].max(cell.len());
        }
    }
    let mut out = String::new();
    for (row_idx, row) in rows.iter().enumerate() {
        if row_idx > 0 {
            out.push('\n');
        }
        let mut line = String::new();
        for (idx, cell) in row.iter().enumerate() {
            if idx > 0 {
                line.push_str("  ");
            }
            if idx + 1 == row.len() {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<width$}", width = widths[idx]));
            }
        }
        out.push_str(line.trim_end());
    }
    out
}

fn csv_lines(header: &str, rows: &[Vec<String>]) -> String {
    let mut out = String::from(header);
    for row in rows {
        out.push('\n');
        out.push_str(&row.join(","));
    }
    out
}

/// The `limit` result: the speedup bound itself.
pub struct LimitReport(pub SpeedupBound);

impl Render for LimitReport {
    fn table(&self) -> String {
        self.0.to_string()
    }

    fn csv(&self) -> String {
        format!("limit\n{}", self.0)
    }

    fn json(&self) -> Value {
        json!({ "limit": self.0 })
    }
}

/// The `predict` result: a single speedup.
pub struct SpeedupReport(pub f64);

impl Render for SpeedupReport {
    fn table(&self) -> String {
        self.0.to_string()
    }

    fn csv(&self) -> String {
        format!("speedup\n{}", self.0)
    }

    fn json(&self) -> Value {
        json!({ "speedup": self.0 })
    }
}

/// The `convert` result: a serial fraction in its new frame.
pub struct FractionReport(pub SerialFraction);

impl Render for FractionReport {
    fn table(&self) -> String {
        self.0.value().to_string()
    }

    fn csv(&self) -> String {
        format!("beta\n{}", self.0.value())
    }

    fn json(&self) -> Value {
        json!(self.0)
    }
}

/// A speedup curve, optionally with the strong-scaling bound as an extra
/// plot-ready column.
pub struct CurveReport {
    pub curve: SpeedupCurve,
    pub limit: Option<SpeedupBound>,
}

impl CurveReport {
    fn rows(&self) -> Vec<Vec<String>> {
        self.curve
            .points
            .iter()
            .map(|point| {
                let mut row = vec![point.p.to_string(), point.speedup.to_string()];
                if let Some(bound) = self.limit {
                    // A plot-ready number: unbounded becomes IEEE infinity.
                    row.push(bound.finite().unwrap_or(f64::INFINITY).to_string());
                }
                row
            })
            .collect()
    }

    fn header(&self) -> Vec<String> {
        let mut header = vec!["p".to_string(), "speedup".to_string()];
        if self.limit.is_some() {
            header.push("limit".to_string());
        }
        header
    }
}

impl Render for CurveReport {
    fn table(&self) -> String {
        let mut rows = vec![self.header()];
        rows.extend(self.rows());
        aligned_columns(&rows)
    }

    fn csv(&self) -> String {
        csv_lines(&self.header().join(","), &self.rows())
    }

    fn json(&self) -> Value {
        let mut value = json!(self.curve);
        if let Some(bound) = self.limit {
            value["limit"] = json!(bound);
        }
        value
    }
}

/// Generated or ingested timing records.
pub struct TimingsReport(pub Vec<TimingRecord>);

impl Render for TimingsReport {
    fn table(&self) -> String {
        let with_replicates = self.0.iter().any(|r| r.replicate().is_some());
        let mut rows = vec![vec!["n".to_string(), "p".to_string(), "time".to_string()]];
        if with_replicates {
            rows[0].push("replicate".to_string());
        }
        for record in &self.0 {
            let mut row = vec![
                record.n().to_string(),
                record.p().to_string(),
                record.time().to_string(),
            ];
            if with_replicates {
                row.push(record.replicate().map_or(String::new(), |r| r.to_string()));
            }
            rows.push(row);
        }
        aligned_columns(&rows)
    }

    fn csv(&self) -> String {
        timing_records_to_csv(&self.0).trim_end().to_string()
    }

    fn json(&self) -> Value {
        json!({ "records": self.0 })
    }
}

/// One fitted model per problem size found in the input.
pub struct FitReport(pub Vec<FitResult>);

impl FitReport {
    fn summary_row(fit: &FitResult) -> Vec<String> {
        vec![
            fit.model
                .problem_size()
                .map_or(String::from("-"), |n| n.to_string()),
            fit.model.serial_time().to_string(),
            fit.model.parallel_work().to_string(),
            fit.base_fraction.value().to_string(),
            fit.rms_relative_residual.to_string(),
            fit.clamped.to_string(),
        ]
    }
}

const FIT_FIELDS: [&str; 6] = [
    "n",
    "serial_time",
    "parallel_work",
    "base_fraction",
    "rms_relative_residual",
    "clamped",
];

impl Render for FitReport {
    fn table(&self) -> String {
        let blocks: Vec<String> = self
            .0
            .iter()
            .map(|fit| {
                let rows: Vec<Vec<String>> = FIT_FIELDS
                    .iter()
                    .zip(Self::summary_row(fit))
                    .map(|(name, value)| vec![name.to_string(), value])
                    .collect();
                aligned_columns(&rows)
            })
            .collect();
        blocks.join("\n\n")
    }

    fn csv(&self) -> String {
        let rows: Vec<Vec<String>> = self.0.iter().map(Self::summary_row).collect();
        csv_lines(&FIT_FIELDS.join(","), &rows)
    }

    fn json(&self) -> Value {
        if self.0.len() == 1 {
            json!(self.0[0])
        } else {
            json!({ "fits": self.0 })
        }
    }
}

/// Result of the law-equivalence grid check.
pub struct VerifyReport {
    pub beta_steps: u32,
    pub p_max: u32,
    pub max_relative_deviation: f64,
}

impl Render for VerifyReport {
    fn table(&self) -> String {
        aligned_columns(&[
            vec!["beta_steps".to_string(), self.beta_steps.to_string()],
            vec!["p_max".to_string(), self.p_max.to_string()],
            vec![
                "max_relative_deviation".to_string(),
                self.max_relative_deviation.to_string(),
            ],
        ])
    }

    fn csv(&self) -> String {
        format!(
            "beta_steps,p_max,max_relative_deviation\n{},{},{}",
            self.beta_steps, self.p_max, self.max_relative_deviation
        )
    }

    fn json(&self) -> Value {
        json!({
            "beta_steps": self.beta_steps,
            "p_max": self.p_max,
            "max_relative_deviation": self.max_relative_deviation,
        })
    }
}
