//! Report files.
//!
//! * `comparison.json` (or `report.json`): the whole structure, via serde.
//! * `scalars.csv`: header `graph_id,model,seed,metric,value`, one row per
//!   graph and present scalar, rows in report order.
//! * `plotdata/<graph_id>/<name>.dat`: `key value` lines, one file per
//!   distribution; eigenvalues are written as `index value`.

use std::fs;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use super::compare::ComparisonRun;
use super::report::MetricReport;
use crate::error::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Plotdata,
}

impl ReportFormat {
    pub const ALL: [ReportFormat; 3] = [ReportFormat::Json, ReportFormat::Csv, ReportFormat::Plotdata];
}

impl std::str::FromStr for ReportFormat {
    type Err = crate::error::ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "plotdata" => Ok(ReportFormat::Plotdata),
            other => Err(crate::error::ConfigError::invalid(
                "report",
                format!("unknown format `{other}` (json, csv, plotdata)"),
            )),
        }
    }
}

pub const SCALARS_HEADER: [&str; 5] = ["graph_id", "model", "seed", "metric", "value"];

struct Row<'a> {
    model: &'a str,
    seed: Option<u64>,
    report: &'a MetricReport,
}

fn comparison_rows(run: &ComparisonRun) -> Vec<Row<'_>> {
    let mut rows = vec![Row {
        model: "target",
        seed: None,
        report: &run.target,
    }];
    for model in &run.models {
        for r in &model.runs {
            rows.push(Row {
                model: model.model.name(),
                seed: Some(r.seed),
                report: &r.report,
            });
        }
    }
    rows
}

/// Writes `run` in `format` under `out`, creating the directory. Returns
/// the files written.
pub fn emit_report(run: &ComparisonRun, format: ReportFormat, out: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    fs::create_dir_all(out)?;
    match format {
        ReportFormat::Json => {
            let path = out.join("comparison.json");
            write_json(run, &path)?;
            Ok(vec![path])
        }
        ReportFormat::Csv => {
            let path = out.join("scalars.csv");
            write_csv(&comparison_rows(run), &path)?;
            Ok(vec![path])
        }
        ReportFormat::Plotdata => write_plotdata(&comparison_rows(run), &out.join("plotdata")),
    }
}

/// Single-report variant used by `analyze`. For json and csv `out` is the
/// file; for plotdata it is a directory.
pub fn emit_metric_report(report: &MetricReport, format: ReportFormat, out: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let rows = [Row {
        model: "input",
        seed: None,
        report,
    }];
    if let Some(parent) = out.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent)?;
    }
    match format {
        ReportFormat::Json => {
            write_json(report, out)?;
            Ok(vec![out.to_path_buf()])
        }
        ReportFormat::Csv => {
            write_csv(&rows, out)?;
            Ok(vec![out.to_path_buf()])
        }
        ReportFormat::Plotdata => write_plotdata(&rows, out),
    }
}

pub fn read_comparison(path: &Path) -> Result<ComparisonRun, HarnessError> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_json<T: serde::Serialize>(value: &T, path: &Path) -> Result<(), HarnessError> {
    let mut file = BufWriter::new(fs::File::create(path)?);
    serde_json::to_writer_pretty(&mut file, value)?;
    file.write_all(b"\n")?;
    file.flush()?;
    Ok(())
}

fn write_csv(rows: &[Row<'_>], path: &Path) -> Result<(), HarnessError> {
    let mut w = csv::Writer::from_path(path).map_err(csv_io)?;
    w.write_record(SCALARS_HEADER).map_err(csv_io)?;
    for row in rows {
        let seed = row.seed.map(|s| s.to_string()).unwrap_or_default();
        for (name, value) in row.report.scalars.entries() {
            w.write_record([
                row.report.graph_id.as_str(),
                row.model,
                seed.as_str(),
                name,
                &value.to_string(),
            ])
            .map_err(csv_io)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn csv_io(e: csv::Error) -> HarnessError {
    HarnessError::Io(std::io::Error::other(e))
}

/// File-system-safe version of a graph id.
fn safe_name(id: &str) -> String {
    let cleaned: String = id
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' { c } else { '_' })
        .collect();
    match cleaned.trim_matches('.') {
        "" => "graph".to_owned(),
        s => s.to_owned(),
    }
}

fn write_plotdata(rows: &[Row<'_>], dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    let mut written = Vec::new();
    for row in rows {
        let graph_dir = dir.join(safe_name(&row.report.graph_id));
        fs::create_dir_all(&graph_dir)?;
        let d = &row.report.distributions;
        for (name, dist) in d.keyed() {
            let path = graph_dir.join(format!("{name}.dat"));
            let mut f = BufWriter::new(fs::File::create(&path)?);
            for (k, v) in dist {
                writeln!(f, "{k} {v:?}")?;
            }
            f.flush()?;
            written.push(path);
        }
        if let Some(eigs) = &d.eigenvalues {
            let path = graph_dir.join("eigenvalues.dat");
            let mut f = BufWriter::new(fs::File::create(&path)?);
            for (i, v) in eigs.iter().enumerate() {
                writeln!(f, "{i} {v:?}")?;
            }
            f.flush()?;
            written.push(path);
        }
    }
    Ok(written)
}
