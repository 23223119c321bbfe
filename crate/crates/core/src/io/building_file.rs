use std::path::Path;

use crate::building::{validate, BuildingDescription, SCHEMA_VERSION};
use crate::error::{Error, Result};

/// Read, version-check and validate a building description.
pub fn load_building(path: impl AsRef<Path>) -> Result<BuildingDescription> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_building(&text).map_err(|e| match e {
        Error::Json { source, .. } => Error::Json {
            path: path.to_path_buf(),
            source,
        },
        other => other,
    })
}

pub fn parse_building(text: &str) -> Result<BuildingDescription> {
    let json_err = |source| Error::Json {
        path: "<building>".into(),
        source,
    };
    // Check the version before the full schema so old files get a clear error.
    let raw: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
    let found = raw
        .get("schema_version")
        .map(|v| v.as_str().map(str::to_owned).unwrap_or_else(|| v.to_string()))
        .unwrap_or_default();
    if found != SCHEMA_VERSION {
        return Err(Error::SchemaVersion {
            found,
            expected: SCHEMA_VERSION.into(),
        });
    }
    let building: BuildingDescription = serde_json::from_value(raw).map_err(json_err)?;
    let errors = validate(&building);
    if !errors.is_empty() {
        return Err(Error::Validation(errors));
    }
    Ok(building)
}
