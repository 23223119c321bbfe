//! Scenario files (TOML).
//!
//! ```toml
//! building = "dwelling.json"   # optional; relative paths resolve against the scenario file
//! weather = "week.csv"         # optional; synthetic weather is used when absent
//!
//! [synthetic]                  # parameters of the generated weather
//! days = 7
//! t_max = 31.0
//!
//! [zone]                       # ZoneOptions overrides
//! roof_exposure = "adiabatic"
//! openings = "closed"
//!
//! [simulation]
//! substeps_per_hour = 4
//! ```
//!
//! Unknown keys are rejected.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::simulate::SimulationOptions;
use super::zone::ZoneOptions;
use crate::error::{Error, Result};
use crate::io::SyntheticWeather;

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub building: Option<PathBuf>,
    pub weather: Option<PathBuf>,
    pub synthetic: SyntheticWeather,
    pub zone: ZoneOptions,
    pub simulation: SimulationOptions,
}

impl Scenario {
    pub fn from_toml_str(text: &str) -> Result<Scenario> {
        toml::from_str(text).map_err(|e| Error::Toml {
            path: PathBuf::from("<scenario>"),
            message: e.message().to_string(),
        })
    }

    /// Load a scenario; relative building/weather paths are made relative to its directory.
    pub fn load(path: impl AsRef<Path>) -> Result<Scenario> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let mut s: Scenario = toml::from_str(&text).map_err(|e| Error::Toml {
            path: path.to_path_buf(),
            message: e.message().to_string(),
        })?;
        let base = path.parent().unwrap_or_else(|| Path::new(""));
        for p in [&mut s.building, &mut s.weather].into_iter().flatten() {
            if p.is_relative() {
                *p = base.join(&*p);
            }
        }
        Ok(s)
    }
}
