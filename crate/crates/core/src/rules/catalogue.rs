//! Versioned rule catalogue holding the prescriptive tables as data.
//!
//! The bundled catalogue lives in `data/catalogue.json` with its SHA-256 in
//! `data/catalogue.json.sha256`. A catalogue file loaded from disk is verified
//! against a `<file>.sha256` sidecar when one exists.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::building::{AtticRegime, ColorClass, InsulationLayer, Orientation, WallConstruction};
use crate::error::{Error, Result};

pub const BUNDLED_CATALOGUE: &str = include_str!("../../data/catalogue.json");
pub const BUNDLED_CATALOGUE_SHA256: &str = include_str!("../../data/catalogue.json.sha256");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReferenceConductivity {
    pub polystyrene: f64,
    pub polyurethane: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoofCell {
    pub polystyrene_cm: f64,
    pub polyurethane_cm: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ByColor<T> {
    pub light: T,
    pub medium: T,
    pub dark: T,
}

impl<T> ByColor<T> {
    pub fn get(&self, c: ColorClass) -> &T {
        match c {
            ColorClass::Light => &self.light,
            ColorClass::Medium => &self.medium,
            ColorClass::Dark => &self.dark,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoofTable {
    pub simple: ByColor<RoofCell>,
    pub ventilated_attic: ByColor<RoofCell>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ByOrientation {
    pub east: f64,
    pub south: f64,
    pub west: f64,
    pub north: f64,
}

impl ByOrientation {
    pub fn get(&self, o: Orientation) -> f64 {
        match o {
            Orientation::East => self.east,
            Orientation::South => self.south,
            Orientation::West => self.west,
            Orientation::North => self.north,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallRow {
    pub construction: WallConstruction,
    pub color: ColorClass,
    #[serde(flatten)]
    pub values: ByOrientation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CollectorRow {
    pub min_main_rooms: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_main_rooms: Option<u32>,
    pub area_m2: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Bounds {
    pub min: f64,
    pub max: f64,
}

/// Why a wall table has no value for a key.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotTabulated {
    DarkColor,
    MissingRow(WallConstruction, ColorClass),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleCatalogue {
    pub version: String,
    pub region: String,
    #[serde(default)]
    pub notes: Vec<String>,
    pub reference_conductivity: ReferenceConductivity,
    pub roof: RoofTable,
    pub overhang_ratio: Vec<WallRow>,
    pub wall_insulation_cm: Vec<WallRow>,
    pub window_ratio: ByOrientation,
    pub porosity_threshold: f64,
    pub collector_area: Vec<CollectorRow>,
    pub storage_l_per_m2: Bounds,
    pub min_annual_productivity_kwh_m2: f64,
    /// SHA-256 of the catalogue file bytes.
    #[serde(skip)]
    pub sha256: String,
}

/// Which reference insulation column applies to a material.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReferenceMaterial {
    Polystyrene,
    Polyurethane,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl RuleCatalogue {
    pub fn bundled() -> Self {
        Self::from_json_bytes(BUNDLED_CATALOGUE.as_bytes()).expect("bundled catalogue is valid JSON")
    }

    pub fn from_json_bytes(bytes: &[u8]) -> std::result::Result<Self, serde_json::Error> {
        let mut cat: RuleCatalogue = serde_json::from_slice(bytes)?;
        cat.sha256 = sha256_hex(bytes);
        Ok(cat)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
        let cat = Self::from_json_bytes(&bytes).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
        let mut sidecar = path.as_os_str().to_owned();
        sidecar.push(".sha256");
        if let Ok(expected) = fs::read_to_string(&sidecar) {
            let expected = expected.split_whitespace().next().unwrap_or("").to_lowercase();
            if expected != cat.sha256 {
                return Err(Error::Checksum {
                    expected,
                    computed: cat.sha256,
                });
            }
        }
        cat.check()?;
        Ok(cat)
    }

    fn check(&self) -> Result<()> {
        let rc = &self.reference_conductivity;
        if !(rc.polyurethane > 0.0 && rc.polystyrene > rc.polyurethane) {
            return Err(Error::invalid(
                "catalogue: reference conductivities must satisfy 0 < polyurethane < polystyrene",
            ));
        }
        if !(self.porosity_threshold > 0.0) {
            return Err(Error::invalid("catalogue: porosity_threshold must be > 0"));
        }
        if self.storage_l_per_m2.min > self.storage_l_per_m2.max {
            return Err(Error::invalid("catalogue: storage bounds are inverted"));
        }
        Ok(())
    }

    pub fn reference_material(&self, conductivity: f64) -> ReferenceMaterial {
        if conductivity <= self.reference_conductivity.polyurethane {
            ReferenceMaterial::Polyurethane
        } else {
            ReferenceMaterial::Polystyrene
        }
    }

    pub fn roof_cell(&self, color: ColorClass, attic: AtticRegime) -> RoofCell {
        let block = match attic {
            AtticRegime::WellVentilated => &self.roof.ventilated_attic,
            AtticRegime::None | AtticRegime::ClosedOrBarelyVentilated => &self.roof.simple,
        };
        *block.get(color)
    }

    /// Required roof insulation resistance, m²·K/W.
    ///
    /// Materials at or below the polyurethane conductivity use the polyurethane
    /// column; everything else is held to the polystyrene column.
    pub fn required_roof_resistance(&self, color: ColorClass, material: &InsulationLayer, attic: AtticRegime) -> f64 {
        let cell = self.roof_cell(color, attic);
        let rc = &self.reference_conductivity;
        match self.reference_material(material.conductivity) {
            ReferenceMaterial::Polyurethane => cell.polyurethane_cm / 100.0 / rc.polyurethane,
            ReferenceMaterial::Polystyrene => cell.polystyrene_cm / 100.0 / rc.polystyrene,
        }
    }

    /// Required roof insulation thickness in cm for the given material.
    ///
    /// Returns the tabulated value for materials in the two reference classes and
    /// the equivalent-resistance thickness for any other conductivity.
    pub fn required_roof_insulation(&self, color: ColorClass, material: &InsulationLayer, attic: AtticRegime) -> f64 {
        let cell = self.roof_cell(color, attic);
        let lambda = material.conductivity;
        if lambda <= self.reference_conductivity.polyurethane {
            cell.polyurethane_cm
        } else if lambda <= self.reference_conductivity.polystyrene {
            cell.polystyrene_cm
        } else {
            self.required_roof_resistance(color, material, attic) * lambda * 100.0
        }
    }

    fn wall_lookup(
        rows: &[WallRow],
        construction: WallConstruction,
        color: ColorClass,
        orientation: Orientation,
    ) -> std::result::Result<f64, NotTabulated> {
        if color == ColorClass::Dark {
            return Err(NotTabulated::DarkColor);
        }
        let exact = rows.iter().find(|r| r.construction == construction && r.color == color);
        let row = exact.or_else(|| {
            rows.iter().find(|r| {
                r.color == color && (r.construction.base_resistance() - construction.base_resistance()).abs() < 1e-12
            })
        });
        row.map(|r| r.values.get(orientation))
            .ok_or(NotTabulated::MissingRow(construction, color))
    }

    /// Minimum overhang ratio d/h for a wall.
    pub fn required_overhang_ratio(
        &self,
        construction: WallConstruction,
        color: ColorClass,
        orientation: Orientation,
    ) -> std::result::Result<f64, NotTabulated> {
        Self::wall_lookup(&self.overhang_ratio, construction, color, orientation)
    }

    /// Minimum wall insulation thickness in cm at the polystyrene reference conductivity.
    pub fn required_wall_insulation(
        &self,
        construction: WallConstruction,
        color: ColorClass,
        orientation: Orientation,
    ) -> std::result::Result<f64, NotTabulated> {
        Self::wall_lookup(&self.wall_insulation_cm, construction, color, orientation)
    }

    pub fn required_window_ratio(&self, orientation: Orientation) -> f64 {
        self.window_ratio.get(orientation)
    }

    /// Minimum solar collector area for a dwelling with `main_rooms` main rooms.
    pub fn required_collector_area(&self, main_rooms: u32) -> Option<f64> {
        self.collector_area
            .iter()
            .find(|r| main_rooms >= r.min_main_rooms && r.max_main_rooms.map_or(true, |m| main_rooms <= m))
            .map(|r| r.area_m2)
    }
}

impl Default for RuleCatalogue {
    fn default() -> Self {
        Self::bundled()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn layer(lambda: f64, cm: f64) -> InsulationLayer {
        InsulationLayer {
            material_name: "x".into(),
            conductivity: lambda,
            thickness: cm,
            humidity_protected: false,
        }
    }

    #[test]
    fn bundled_checksum_matches() {
        let cat = RuleCatalogue::bundled();
        assert_eq!(cat.sha256, BUNDLED_CATALOGUE_SHA256.trim());
    }

    #[test]
    fn roof_examples() {
        let cat = RuleCatalogue::bundled();
        let simple = AtticRegime::None;
        assert_eq!(
            cat.required_roof_insulation(ColorClass::Light, &layer(0.041, 0.0), simple),
            5.0
        );
        assert_eq!(
            cat.required_roof_insulation(ColorClass::Dark, &layer(0.029, 0.0), simple),
            8.0
        );
        assert_eq!(
            cat.required_roof_insulation(ColorClass::Light, &layer(0.035, 0.0), AtticRegime::WellVentilated),
            0.0
        );
        assert_eq!(
            cat.required_roof_insulation(ColorClass::Dark, &layer(0.041, 0.0), AtticRegime::WellVentilated),
            2.0
        );
    }

    #[test]
    fn roof_other_material_uses_equivalent_resistance() {
        let cat = RuleCatalogue::bundled();
        // 8 cm at 0.041 is R = 1.9512; at 0.082 the same resistance needs 16 cm
        let cm = cat.required_roof_insulation(ColorClass::Medium, &layer(0.082, 0.0), AtticRegime::None);
        assert!((cm - 16.0).abs() < 1e-12);
    }

    #[test]
    fn overhang_examples() {
        let cat = RuleCatalogue::bundled();
        use Orientation::*;
        use WallConstruction::*;
        assert_eq!(
            cat.required_overhang_ratio(PouredConcrete15, ColorClass::Medium, West),
            Ok(1.3)
        );
        assert_eq!(cat.required_overhang_ratio(Wood, ColorClass::Light, East), Ok(0.0));
        assert_eq!(
            cat.required_overhang_ratio(HollowConcreteBlock, ColorClass::Medium, North),
            Ok(0.5)
        );
        assert_eq!(
            cat.required_overhang_ratio(Wood, ColorClass::Dark, North),
            Err(NotTabulated::DarkColor)
        );
        // concrete 20 shares the R = 0.1 row
        assert_eq!(
            cat.required_overhang_ratio(Concrete20, ColorClass::Light, West),
            Ok(0.7)
        );
    }

    #[test]
    fn wall_insulation_examples() {
        let cat = RuleCatalogue::bundled();
        use Orientation::*;
        use WallConstruction::*;
        assert_eq!(
            cat.required_wall_insulation(Concrete20, ColorClass::Medium, East),
            Ok(2.0)
        );
        for o in Orientation::ALL {
            assert_eq!(cat.required_wall_insulation(Wood, ColorClass::Light, o), Ok(0.0));
        }
        assert_eq!(
            cat.required_wall_insulation(HollowConcreteBlock, ColorClass::Light, East),
            Ok(1.0)
        );
        assert_eq!(
            cat.required_wall_insulation(PouredConcrete15, ColorClass::Medium, South),
            Ok(1.0)
        );
    }

    #[test]
    fn window_and_collector() {
        let cat = RuleCatalogue::bundled();
        assert_eq!(cat.required_window_ratio(Orientation::West), 1.0);
        assert_eq!(cat.required_window_ratio(Orientation::South), 0.3);
        assert_eq!(cat.required_window_ratio(Orientation::East), 0.8);
        assert_eq!(cat.required_collector_area(1), Some(1.5));
        assert_eq!(cat.required_collector_area(2), Some(1.5));
        assert_eq!(cat.required_collector_area(4), Some(2.5));
        assert_eq!(cat.required_collector_area(9), Some(3.5));
        assert_eq!(cat.required_collector_area(0), None);
    }

    #[test]
    fn load_verifies_sidecar() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cat.json");
        fs::write(&path, BUNDLED_CATALOGUE).unwrap();
        fs::write(dir.path().join("cat.json.sha256"), BUNDLED_CATALOGUE_SHA256).unwrap();
        let cat = RuleCatalogue::load(&path).unwrap();
        assert_eq!(cat, RuleCatalogue::bundled());

        fs::write(dir.path().join("cat.json.sha256"), "deadbeef\n").unwrap();
        assert!(matches!(RuleCatalogue::load(&path), Err(Error::Checksum { .. })));
    }
}
