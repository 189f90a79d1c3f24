//! Run configuration: flags, an optional key=value file, and validation.

use std::path::{Path, PathBuf};

use porism_core::family::PoristicConfig;
use serde::Serialize;

use crate::error::{LabError, Result};

pub const DEFAULT_T_SAMPLES: usize = 720;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_RHO: f64 = 0.36266;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Radii {
    Rho { rho: f64 },
    Pair {
        #[serde(rename = "R")]
        big_r: f64,
        r: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabConfig {
    pub radii: Radii,
    pub t_samples: usize,
    pub tolerance: f64,
    pub seed: u64,
    pub output_dir: PathBuf,
    /// `None` means every registered quantity.
    pub quantities: Option<Vec<String>>,
    pub figure: Option<String>,
    /// Test hook: displace one vertex of sample `k` by 1e-6.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perturb_sample: Option<usize>,
}

impl Default for LabConfig {
    fn default() -> Self {
        LabConfig {
            radii: Radii::Rho { rho: DEFAULT_RHO },
            t_samples: DEFAULT_T_SAMPLES,
            tolerance: DEFAULT_TOLERANCE,
            seed: 0,
            output_dir: PathBuf::from("out"),
            quantities: None,
            figure: None,
            perturb_sample: None,
        }
    }
}

/// Values gathered from flags or a config file before validation; `None`
/// means "not given here".
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub rho: Option<f64>,
    pub big_r: Option<f64>,
    pub r: Option<f64>,
    pub t_samples: Option<usize>,
    pub tolerance: Option<f64>,
    pub seed: Option<u64>,
    pub output_dir: Option<PathBuf>,
    pub quantities: Option<String>,
    pub figure: Option<String>,
    pub perturb_sample: Option<usize>,
}

impl Overrides {
    /// Fields set in `self` win over `base`.
    pub fn over(self, base: Overrides) -> Overrides {
        // An explicit radius choice replaces the other form entirely.
        let (rho, big_r, r) = if self.rho.is_some() || self.big_r.is_some() || self.r.is_some() {
            (self.rho, self.big_r, self.r)
        } else {
            (base.rho, base.big_r, base.r)
        };
        Overrides {
            rho,
            big_r,
            r,
            t_samples: self.t_samples.or(base.t_samples),
            tolerance: self.tolerance.or(base.tolerance),
            seed: self.seed.or(base.seed),
            output_dir: self.output_dir.or(base.output_dir),
            quantities: self.quantities.or(base.quantities),
            figure: self.figure.or(base.figure),
            perturb_sample: self.perturb_sample.or(base.perturb_sample),
        }
    }

    pub fn into_config(self) -> Result<LabConfig> {
        let d = LabConfig::default();
        let radii = match (self.rho, self.big_r, self.r) {
            (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
                return Err(LabError::Config("give either rho or the (R, r) pair, not both".into()))
            }
            (Some(rho), None, None) => Radii::Rho { rho },
            (None, Some(big_r), Some(r)) => Radii::Pair { big_r, r },
            (None, Some(_), None) | (None, None, Some(_)) => {
                return Err(LabError::Config("R and r must be given together".into()))
            }
            (None, None, None) => d.radii,
        };
        let quantities = self.quantities.map(|q| {
            q.split(',').map(str::trim).filter(|s| !s.is_empty()).map(String::from).collect()
        });
        let cfg = LabConfig {
            radii,
            t_samples: self.t_samples.unwrap_or(d.t_samples),
            tolerance: self.tolerance.unwrap_or(d.tolerance),
            seed: self.seed.unwrap_or(d.seed),
            output_dir: self.output_dir.unwrap_or(d.output_dir),
            quantities,
            figure: self.figure,
            perturb_sample: self.perturb_sample,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

impl LabConfig {
    pub fn validate(&self) -> Result<()> {
        if self.t_samples < 3 {
            return Err(LabError::Config(format!("t-samples must be at least 3, got {}", self.t_samples)));
        }
        if !(self.tolerance > 0.0 && self.tolerance <= 1e-3) {
            return Err(LabError::Config(format!("tol must lie in (0, 1e-3], got {}", self.tolerance)));
        }
        self.poristic()?;
        Ok(())
    }

    pub fn poristic(&self) -> Result<PoristicConfig> {
        let cfg = match self.radii {
            Radii::Rho { rho } => PoristicConfig::from_rho(rho),
            Radii::Pair { big_r, r } => PoristicConfig::from_radii(big_r, r),
        };
        cfg.map_err(|e| LabError::Config(e.to_string()))
    }
}

/// Parses `key = value` lines; `#` starts a comment.
pub fn parse_config_file(path: &Path) -> Result<Overrides> {
    let text = std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))?;
    parse_config_text(&text).map_err(|(line, msg)| LabError::ConfigFile { path: path.to_owned(), line, msg })
}

fn parse_config_text(text: &str) -> std::result::Result<Overrides, (usize, String)> {
    let mut o = Overrides::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| (i + 1, msg);
        let (key, value) = line.split_once('=').ok_or_else(|| err(format!("expected key = value, got `{line}`")))?;
        let (key, value) = (key.trim(), value.trim());
        fn num<T: std::str::FromStr>(key: &str, v: &str) -> std::result::Result<T, String> {
            v.parse().map_err(|_| format!("bad value for {key}: `{v}`"))
        }
        match key {
            "rho" => o.rho = Some(num(key, value).map_err(err)?),
            "R" => o.big_r = Some(num(key, value).map_err(err)?),
            "r" => o.r = Some(num(key, value).map_err(err)?),
            "t_samples" | "t-samples" => o.t_samples = Some(num(key, value).map_err(err)?),
            "tol" => o.tolerance = Some(num(key, value).map_err(err)?),
            "seed" => o.seed = Some(num(key, value).map_err(err)?),
            "out" => o.output_dir = Some(PathBuf::from(value)),
            "quantities" => o.quantities = Some(value.to_string()),
            "figure" => o.figure = Some(value.to_string()),
            _ => return Err(err(format!("unknown key `{key}`"))),
        }
    }
    Ok(o)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        let cfg = Overrides::default().into_config().unwrap();
        assert_eq!(cfg, LabConfig::default());
    }

    #[test]
    fn rejects_bad_values() {
        let bad = [
            Overrides { rho: Some(0.6), ..Default::default() },
            Overrides { t_samples: Some(2), ..Default::default() },
            Overrides { tolerance: Some(0.0), ..Default::default() },
            Overrides { tolerance: Some(1e-2), ..Default::default() },
            Overrides { big_r: Some(1.0), ..Default::default() },
            Overrides { rho: Some(0.3), r: Some(0.2), ..Default::default() },
        ];
        for o in bad {
            assert!(matches!(o.clone().into_config(), Err(LabError::Config(_))), "{o:?}");
        }
    }

    #[test]
    fn file_values_lose_to_flags() {
        let file = parse_config_text("# run\nR = 2\nr = 0.5\nseed=3 # trailing\nquantities = perimeter, theta\n").unwrap();
        let flags = Overrides { rho: Some(0.2), seed: Some(9), ..Default::default() };
        let cfg = flags.over(file).into_config().unwrap();
        assert_eq!(cfg.radii, Radii::Rho { rho: 0.2 });
        assert_eq!(cfg.seed, 9);
        assert_eq!(cfg.quantities, Some(vec!["perimeter".to_string(), "theta".to_string()]));
    }

    #[test]
    fn config_file_errors_carry_line() {
        assert_eq!(parse_config_text("rho = 0.3\nbogus = 1").unwrap_err().0, 2);
        assert_eq!(parse_config_text("rho 0.3").unwrap_err().0, 1);
        assert_eq!(parse_config_text("seed = x").unwrap_err().0, 1);
    }

    #[test]
    fn empty_quantity_list_is_kept_empty() {
        let cfg = Overrides { quantities: Some(String::new()), ..Default::default() }.into_config().unwrap();
        assert_eq!(cfg.quantities, Some(vec![]));
    }
}
