//! `porism-lab sweep`: one CSV row per t.

use std::path::{Path, PathBuf};

use crate::config::LabConfig;
use crate::error::{LabError, Result};
use crate::quantity;
use crate::verify::{build_samples, evaluate};

pub const SWEEP_FILE: &str = "sweep.csv";
pub const SKIP_FILE: &str = "sweep_skipped.csv";

/// Where the sweep wrote its files.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutput {
    pub csv: PathBuf,
    pub skip_log: PathBuf,
    pub rows: usize,
    pub skipped: usize,
}

/// 17 significant digits, so every f64 round-trips.
pub fn format_value(v: f64) -> String {
    format!("{v:.16e}")
}

pub fn run(lab: &LabConfig, out_dir: &Path) -> Result<SweepOutput> {
    let quantities = quantity::select(lab.quantities.as_deref())?;
    let cfg = lab.poristic()?;
    let csv_path = out_dir.join(SWEEP_FILE);
    let skip_path = out_dir.join(SKIP_FILE);
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(&csv_path)?;
    let mut skips = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(&skip_path)?;
    skips.write_record(["t", "quantity", "reason"])?;

    let header: Vec<&str> = std::iter::once("t").chain(quantities.iter().map(|q| q.name)).collect();
    w.write_record(&header)?;
    let mut rows = 0;
    let mut skipped = 0;
    if !quantities.is_empty() {
        let samples = build_samples(lab, &cfg)?;
        let columns = evaluate(&cfg, &samples, &quantities);
        for (k, s) in samples.iter().enumerate() {
            let mut record = vec![format_value(s.t)];
            for (q, column) in quantities.iter().zip(&columns) {
                match &column[k] {
                    Ok(v) => record.push(format_value(*v)),
                    Err(reason) => {
                        record.push(String::new());
                        skips.write_record([format_value(s.t).as_str(), q.name, reason])?;
                        skipped += 1;
                    }
                }
            }
            w.write_record(&record)?;
            rows += 1;
        }
    }
    w.flush().map_err(|e| LabError::io(&csv_path, e))?;
    skips.flush().map_err(|e| LabError::io(&skip_path, e))?;
    Ok(SweepOutput { csv: csv_path, skip_log: skip_path, rows, skipped })
}
