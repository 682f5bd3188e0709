//! Optional `key = value` defaults file, located by `SPECTRAL_CHROMA_CONFIG`.
//!
//! Precedence: command-line flags, then this file, then built-in defaults.

use std::path::Path;

use serde::Serialize;

use crate::spherical::QuadratureSpec;

pub const CONFIG_ENV: &str = "SPECTRAL_CHROMA_CONFIG";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub quad: QuadratureSpec,
    pub s_max: Option<f64>,
    pub grid_step: Option<f64>,
    pub n_points: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            quad: QuadratureSpec::default(),
            s_max: None,
            grid_step: None,
            n_points: 2048,
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut cfg = Config::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("config line {}: expected key=value", idx + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let bad = |e: &dyn std::fmt::Display| format!("config line {}: {key}: {e}", idx + 1);
            match key {
                "abs_tol" => cfg.quad.abs_tol = value.parse().map_err(|e| bad(&e))?,
                "max_subdivisions" => {
                    cfg.quad.max_subdivisions = value.parse().map_err(|e| bad(&e))?
                }
                "oscillation_panel_factor" => {
                    cfg.quad.oscillation_panel_factor = value.parse().map_err(|e| bad(&e))?
                }
                "s_max" => cfg.s_max = Some(value.parse().map_err(|e| bad(&e))?),
                "grid_step" => cfg.grid_step = Some(value.parse().map_err(|e| bad(&e))?),
                "n_points" => cfg.n_points = value.parse().map_err(|e| bad(&e))?,
                _ => return Err(format!("config line {}: unknown key {key:?}", idx + 1)),
            }
        }
        cfg.quad.validate().map_err(|e| e.to_string())?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        Self::parse(&text)
    }

    /// Reads the file named by [`CONFIG_ENV`], or returns the defaults.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Self::load(Path::new(&path)),
            _ => Ok(Config::default()),
        }
    }
}
