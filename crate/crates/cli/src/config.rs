use std::path::Path;

use anyhow::{ensure, Context, Result};
use serde::Deserialize;

/// Optional TOML configuration. Command-line flags take precedence.
#[derive(Debug, Clone, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub default_bound: usize,
    pub threshold_constant: u32,
    pub random_seed: Option<u64>,
    /// Wall-clock limit per solver call, in seconds.
    pub time_limit_secs: Option<f64>,
    /// Conflicts allowed per domain size.
    pub max_conflicts: u64,
    /// Clauses allowed per domain size.
    pub max_clauses: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            default_bound: relsyl::solver::DEFAULT_BOUND,
            threshold_constant: 1,
            random_seed: None,
            time_limit_secs: None,
            max_conflicts: 5_000_000,
            max_clauses: 20_000_000,
        }
    }
}

impl Config {
    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let cfg: Config = toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
        if let Some(t) = cfg.time_limit_secs {
            ensure!(t.is_finite() && t > 0.0, "time_limit_secs must be positive");
        }
        Ok(cfg)
    }
}
