//! Report schema and writers. Field order is fixed, so a given run always
//! produces the same bytes.

use std::path::Path;

use porism_core::family::PoristicConfig;
use serde::Serialize;

use crate::config::LabConfig;
use crate::error::{LabError, Result};
use crate::quantity::{Expectation, Quantity};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Invariant,
    Varying,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepReport {
    pub quantity: String,
    pub samples: usize,
    pub min: Option<f64>,
    pub max: Option<f64>,
    pub mean: Option<f64>,
    /// (max − min) / |mean|, with the quantity's scale floor under |mean|.
    pub spread_rel: Option<f64>,
    pub expected: Option<f64>,
    /// Largest |value − expected| over the same denominator.
    pub max_dev_rel: Option<f64>,
    pub tolerance: f64,
    pub expectation: Expectation,
    pub verdict: Verdict,
    pub pass: bool,
}

impl SweepReport {
    /// Summarizes one quantity's column; `None` entries are skipped samples.
    pub fn from_values(q: &Quantity, cfg: &PoristicConfig, run_tolerance: f64, values: &[Option<f64>]) -> Self {
        let tolerance = q.tolerance(run_tolerance);
        let expectation = q.expectation(cfg);
        let expected = q.expected(cfg);
        let present: Vec<f64> = values.iter().flatten().copied().collect();
        let samples = present.len();
        if samples == 0 {
            return SweepReport {
                quantity: q.name.to_string(),
                samples,
                min: None,
                max: None,
                mean: None,
                spread_rel: None,
                expected,
                max_dev_rel: None,
                tolerance,
                expectation,
                verdict: Verdict::Skipped,
                pass: expectation == Expectation::NotApplicable,
            };
        }
        let min = present.iter().copied().fold(f64::INFINITY, f64::min);
        let max = present.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = present.iter().sum::<f64>() / samples as f64;
        let spread_rel = if max == min { 0.0 } else { (max - min) / q.denominator(cfg, mean) };
        let max_dev_rel = expected.map(|e| {
            let den = q.denominator(cfg, e);
            present.iter().map(|v| (v - e).abs()).fold(0.0, f64::max) / den
        });
        let verdict = if spread_rel < tolerance { Verdict::Invariant } else { Verdict::Varying };
        let pass = match expectation {
            Expectation::Invariant => verdict == Verdict::Invariant && max_dev_rel.is_none_or(|d| d < tolerance),
            Expectation::Varying => verdict == Verdict::Varying,
            Expectation::NotApplicable => false,
        };
        SweepReport {
            quantity: q.name.to_string(),
            samples,
            min: Some(min),
            max: Some(max),
            mean: Some(mean),
            spread_rel: Some(spread_rel),
            expected,
            max_dev_rel,
            tolerance,
            expectation,
            verdict,
            pass,
        }
    }
}

/// A residual-style property check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Recorded for comparison only; never affects the exit status.
    pub informational: bool,
}

impl CheckReport {
    pub fn new(name: &str, residuals: &[f64], tolerance: f64) -> Self {
        // NaN residuals count as failures
        let max_residual = if residuals.iter().any(|r| r.is_nan()) {
            f64::NAN
        } else {
            residuals.iter().copied().fold(0.0, f64::max)
        };
        CheckReport {
            name: name.to_string(),
            samples: residuals.len(),
            max_residual,
            tolerance,
            pass: !residuals.is_empty() && max_residual < tolerance,
            informational: false,
        }
    }

    pub fn informational(name: &str, residuals: &[f64], tolerance: f64) -> Self {
        CheckReport { informational: true, ..Self::new(name, residuals, tolerance) }
    }

    pub fn counts(&self) -> bool {
        !self.informational
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SkippedSample {
    pub t: f64,
    pub quantity: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub version: u32,
    pub config: LabConfig,
    pub reports: Vec<SweepReport>,
    pub checks: Vec<CheckReport>,
    pub skipped: Vec<SkippedSample>,
    pub pass: bool,
}

impl Report {
    pub fn new(config: LabConfig, reports: Vec<SweepReport>, checks: Vec<CheckReport>, skipped: Vec<SkippedSample>) -> Self {
        let pass = reports.iter().all(|r| r.pass) && checks.iter().filter(|c| c.counts()).all(|c| c.pass);
        Report { version: SCHEMA_VERSION, config, reports, checks, skipped, pass }
    }

    pub fn failures(&self) -> Vec<String> {
        let q = self.reports.iter().filter(|r| !r.pass).map(|r| {
            format!("{}: expected {:?}, got {:?} (spread_rel {:?})", r.quantity, r.expectation, r.verdict, r.spread_rel)
        });
        let c = self.checks.iter().filter(|c| c.counts() && !c.pass).map(|c| {
            format!("{}: max residual {:e} ≥ {:e}", c.name, c.max_residual, c.tolerance)
        });
        q.chain(c).collect()
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self)?;
        text.push('\n');
        std::fs::write(path, text).map_err(|e| LabError::io(path, e))
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        #[derive(Serialize)]
        struct Row<'a> {
            kind: &'a str,
            name: &'a str,
            samples: usize,
            min: Option<f64>,
            max: Option<f64>,
            mean: Option<f64>,
            spread_rel: Option<f64>,
            expected: Option<f64>,
            max_dev_rel: Option<f64>,
            tolerance: f64,
            expectation: String,
            verdict: String,
            pass: bool,
        }
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_path(path)?;
        for r in &self.reports {
            w.serialize(Row {
                kind: "quantity",
                name: &r.quantity,
                samples: r.samples,
                min: r.min,
                max: r.max,
                mean: r.mean,
                spread_rel: r.spread_rel,
                expected: r.expected,
                max_dev_rel: r.max_dev_rel,
                tolerance: r.tolerance,
                expectation: format!("{:?}", r.expectation),
                verdict: format!("{:?}", r.verdict),
                pass: r.pass,
            })?;
        }
        for c in &self.checks {
            w.serialize(Row {
                kind: if c.informational { "info" } else { "check" },
                name: &c.name,
                samples: c.samples,
                min: None,
                max: Some(c.max_residual),
                mean: None,
                spread_rel: None,
                expected: None,
                max_dev_rel: None,
                tolerance: c.tolerance,
                expectation: String::new(),
                verdict: String::new(),
                pass: c.pass,
            })?;
        }
        w.flush().map_err(|e| LabError::io(path, e))
    }
}
