//! `porism-lab`: sweeps, invariance verification, reports and figures for
//! the Poristic triangle family.
//!
//! Exit codes: 0 pass, 1 verdict failure, 2 usage or configuration error.

pub mod config;
mod error;
pub mod figure;
pub mod quantity;
pub mod report;
pub mod svg;
pub mod sweep;
pub mod verify;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use config::LabConfig;
pub use error::{LabError, Result};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "porism-lab", version, about = "Invariant sweeps and figures for the Poristic triangle family")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the full invariance suite; write report.json and report.csv.
    Verify(Options),
    /// Write one CSV row per t for the chosen quantities.
    Sweep(Options),
    /// Render SVG figures.
    Figure(Options),
}

#[derive(Debug, Args)]
struct Options {
    /// Ratio r/R in (0, 1/2], with R = 1.
    #[arg(long, conflicts_with_all = ["big_r", "r"])]
    rho: Option<f64>,
    /// Circumradius (with --r).
    #[arg(long = "R", id = "big_r", requires = "r")]
    big_r: Option<f64>,
    /// Inradius (with --R).
    #[arg(long, requires = "big_r")]
    r: Option<f64>,
    /// Number of uniform t samples on [0, 2π).
    #[arg(long)]
    t_samples: Option<usize>,
    /// Relative tolerance for invariance verdicts.
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for the randomized checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory (created if missing).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated quantity names (sweep); empty for none.
    #[arg(long)]
    quantities: Option<String>,
    /// Figure id (figure); all figures when omitted.
    #[arg(long)]
    figure: Option<String>,
    /// key = value file; flags override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Displace one vertex of sample N by 1e-6 R (self-test of the verdicts).
    #[arg(long, hide = true)]
    perturb_sample: Option<usize>,
}

impl Options {
    fn into_config(self) -> Result<LabConfig> {
        let file = match &self.config {
            Some(p) => config::parse_config_file(p)?,
            None => config::Overrides::default(),
        };
        let flags = config::Overrides {
            rho: self.rho,
            big_r: self.big_r,
            r: self.r,
            t_samples: self.t_samples,
            tolerance: self.tol,
            seed: self.seed,
            output_dir: self.out,
            quantities: self.quantities,
            figure: self.figure,
            perturb_sample: self.perturb_sample,
        };
        flags.over(file).into_config()
    }
}

fn prepare_out(cfg: &LabConfig) -> Result<PathBuf> {
    let dir = cfg.output_dir.clone();
    std::fs::create_dir_all(&dir).map_err(|e| LabError::io(&dir, e))?;
    Ok(dir)
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Verify(opts) => {
            let cfg = opts.into_config()?;
            let out = prepare_out(&cfg)?;
            let report = verify::run(&cfg)?;
            report.write_json(&out.join("report.json"))?;
            report.write_csv(&out.join("report.csv"))?;
            let invariant = report.reports.iter().filter(|r| r.verdict == report::Verdict::Invariant).count();
            println!(
                "{} quantities ({} invariant), {} checks, {} skipped samples",
                report.reports.len(),
                invariant,
                report.checks.len(),
                report.skipped.len()
            );
            for f in report.failures() {
                eprintln!("FAIL {f}");
            }
            println!("verdict: {}", if report.pass { "pass" } else { "FAIL" });
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Sweep(opts) => {
            let cfg = opts.into_config()?;
            // resolve names before touching the filesystem
            quantity::select(cfg.quantities.as_deref())?;
            let out = prepare_out(&cfg)?;
            let res = sweep::run(&cfg, &out)?;
            println!("{} rows -> {} ({} skipped values)", res.rows, res.csv.display(), res.skipped);
            Ok(EXIT_PASS)
        }
        Command::Figure(opts) => {
            let cfg = opts.into_config()?;
            if let Some(id) = &cfg.figure {
                figure::check_id(id)?;
            }
            let out = prepare_out(&cfg)?;
            for path in figure::run(&cfg, &out)? {
                println!("{}", path.display());
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("porism-lab: {e}");
            e.exit_code()
        }
    }
}
