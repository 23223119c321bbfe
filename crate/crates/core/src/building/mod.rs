//! Dwelling description: site, rooms, facades, envelope surfaces, openings and
//! the hot-water system.
//!
//! Units follow the building JSON schema: areas in m², lengths in m, insulation
//! thickness in cm, conductivity in W/(m·K), azimuths in degrees clockwise from
//! North.

mod orientation;
pub(crate) mod porosity;
mod validate;

use serde::{Deserialize, Serialize};

pub use orientation::{orientation_from_azimuth, Orientation};
pub use porosity::{facade_porosities, PairPorosity};
pub use validate::{validate, ValidationError};

/// Current version of the building description schema.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ColorClass {
    Light,
    Medium,
    Dark,
}

impl ColorClass {
    /// Solar absorptivity associated with the colour class.
    pub fn absorptivity(self) -> f64 {
        match self {
            ColorClass::Light => 0.4,
            ColorClass::Medium => 0.6,
            ColorClass::Dark => 0.8,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ColorClass::Light => "light",
            ColorClass::Medium => "medium",
            ColorClass::Dark => "dark",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InsulationLayer {
    pub material_name: String,
    /// W/(m·K)
    pub conductivity: f64,
    /// cm
    pub thickness: f64,
    /// Attestation that a moisture-sensitive material is protected from ambient humidity.
    #[serde(default)]
    pub humidity_protected: bool,
}

impl InsulationLayer {
    pub fn none() -> Self {
        InsulationLayer {
            material_name: "none".into(),
            conductivity: 0.041,
            thickness: 0.0,
            humidity_protected: false,
        }
    }

    /// Thermal resistance in m²·K/W.
    pub fn resistance(&self) -> f64 {
        if self.thickness <= 0.0 {
            0.0
        } else {
            self.thickness / 100.0 / self.conductivity
        }
    }

    /// Fibrous mineral insulation loses performance when it absorbs moisture.
    pub fn is_mineral_wool(&self) -> bool {
        let name = self.material_name.to_lowercase();
        ["mineral wool", "rock wool", "rockwool", "glass wool", "laine"]
            .iter()
            .any(|k| name.contains(k))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtticRegime {
    /// Terraced roof or tilted roof directly over the living space.
    None,
    ClosedOrBarelyVentilated,
    WellVentilated,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RoofSpec {
    pub color: ColorClass,
    pub attic: AtticRegime,
    pub insulation: InsulationLayer,
    /// m²
    pub area: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WallConstruction {
    #[serde(rename = "poured_concrete_15")]
    PouredConcrete15,
    #[serde(rename = "concrete_20")]
    Concrete20,
    #[serde(rename = "hollow_concrete_block")]
    HollowConcreteBlock,
    #[serde(rename = "wood")]
    Wood,
}

impl WallConstruction {
    pub const ALL: [WallConstruction; 4] = [
        WallConstruction::PouredConcrete15,
        WallConstruction::Concrete20,
        WallConstruction::HollowConcreteBlock,
        WallConstruction::Wood,
    ];

    /// Resistance of the bare construction, m²·K/W.
    pub fn base_resistance(self) -> f64 {
        match self {
            WallConstruction::PouredConcrete15 | WallConstruction::Concrete20 => 0.1,
            WallConstruction::HollowConcreteBlock => 0.2,
            WallConstruction::Wood => 0.5,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WallConstruction::PouredConcrete15 => "poured_concrete_15",
            WallConstruction::Concrete20 => "concrete_20",
            WallConstruction::HollowConcreteBlock => "hollow_concrete_block",
            WallConstruction::Wood => "wood",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallSpec {
    pub id: String,
    pub construction: WallConstruction,
    pub color: ColorClass,
    pub orientation: Orientation,
    /// Net opaque area, m².
    pub area: f64,
    /// Overhang depth `d`, m.
    #[serde(default)]
    pub overhang_depth: f64,
    /// Vertical distance `h` from the overhang underside to the wall base, m.
    #[serde(default)]
    pub overhang_height: f64,
    #[serde(default = "InsulationLayer::none")]
    pub insulation: InsulationLayer,
    /// Vertical shading system or ventilated double skin covering the entire wall.
    #[serde(default)]
    pub full_shading: bool,
}

impl WallSpec {
    pub fn base_resistance(&self) -> f64 {
        self.construction.base_resistance()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShadingCase {
    /// Overhang set above the window top by an offset `a`; ratio d/(2a+h).
    Case1,
    /// Overhang flush with the window top; ratio d/h.
    Case2,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowSpec {
    pub id: String,
    pub orientation: Orientation,
    /// m²
    pub glazed_area: f64,
    pub shading_case: ShadingCase,
    /// Overhang depth, m.
    #[serde(default)]
    pub overhang_depth: f64,
    /// Window height, m.
    pub height: f64,
    /// Overhang-to-window-top offset, m (case 1 only).
    #[serde(default)]
    pub offset: f64,
    /// Venetian blinds or opaque mobile louvers.
    #[serde(default)]
    pub mobile_shading: bool,
}

impl WindowSpec {
    /// Geometric protection ratio for the window's shading case.
    pub fn shading_ratio(&self) -> f64 {
        self.overhang_depth / self.ratio_denominator()
    }

    /// `2a + h` for case 1, `h` for case 2.
    pub fn ratio_denominator(&self) -> f64 {
        match self.shading_case {
            ShadingCase::Case1 => 2.0 * self.offset + self.height,
            ShadingCase::Case2 => self.height,
        }
    }

    /// Vertical offset between overhang and window top used for shading geometry.
    pub fn effective_offset(&self) -> f64 {
        match self.shading_case {
            ShadingCase::Case1 => self.offset,
            ShadingCase::Case2 => 0.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoomKind {
    /// Bedrooms, living and dining rooms and other living spaces.
    Main,
    Service,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpeningLocation {
    External(String),
    Internal,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Opening {
    pub id: String,
    /// m²
    pub net_area: f64,
    pub location: OpeningLocation,
}

impl Opening {
    pub fn facade(&self) -> Option<&str> {
        match &self.location {
            OpeningLocation::External(f) => Some(f),
            OpeningLocation::Internal => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacadeMembership {
    pub facade: String,
    /// Gross wall area of the room on that facade, m².
    pub gross_area: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Room {
    pub id: String,
    pub kind: RoomKind,
    #[serde(default)]
    pub floor_level: i32,
    #[serde(default)]
    pub under_roof: bool,
    #[serde(default)]
    pub facade_memberships: Vec<FacadeMembership>,
    #[serde(default)]
    pub external_openings: Vec<Opening>,
    #[serde(default)]
    pub internal_openings: Vec<Opening>,
}

impl Room {
    pub fn gross_area_on(&self, facade: &str) -> f64 {
        self.facade_memberships
            .iter()
            .filter(|m| m.facade == facade)
            .map(|m| m.gross_area)
            .sum()
    }

    pub fn opening_area_on(&self, facade: &str) -> f64 {
        self.external_openings
            .iter()
            .filter(|o| o.facade() == Some(facade))
            .map(|o| o.net_area)
            .sum()
    }

    pub fn internal_opening_area(&self) -> f64 {
        self.internal_openings.iter().map(|o| o.net_area).sum()
    }

    pub fn is_main(&self) -> bool {
        self.kind == RoomKind::Main
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Facade {
    pub id: String,
    pub orientation: Orientation,
}

/// Two opposite facades forming one cross-ventilation axis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacadePair {
    pub id: String,
    pub facade_1: String,
    pub facade_2: String,
    /// Restrict the pair to rooms on one level; all levels when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub floor_level: Option<i32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WaterHeaterKind {
    Solar,
    Electric,
    Gas,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WaterHeaterSpec {
    pub kind: WaterHeaterKind,
    /// Net collector area, m² (solar only).
    #[serde(default)]
    pub collector_area: f64,
    /// Storage tank volume, L.
    #[serde(default)]
    pub tank_volume: f64,
    /// Conventional annual productivity, kWh per m² of collector per year (solar only).
    #[serde(default)]
    pub annual_productivity: f64,
    #[serde(default)]
    pub certified: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MassClass {
    Light,
    #[default]
    Heavy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BuildingDescription {
    pub schema_version: String,
    pub name: String,
    pub latitude: f64,
    pub longitude: f64,
    /// Offset of local standard time from UTC, hours.
    #[serde(default)]
    pub utc_offset_hours: Option<f64>,
    /// Number of main rooms (F1..F6+).
    pub dwelling_type: u32,
    /// Conditioned floor area, m².
    pub floor_area: f64,
    /// m
    pub ceiling_height: f64,
    #[serde(default)]
    pub mass_class: MassClass,
    #[serde(default)]
    pub facades: Vec<Facade>,
    #[serde(default)]
    pub rooms: Vec<Room>,
    #[serde(default)]
    pub walls: Vec<WallSpec>,
    #[serde(default)]
    pub roof: Option<RoofSpec>,
    #[serde(default)]
    pub windows: Vec<WindowSpec>,
    #[serde(default)]
    pub facade_pairs: Vec<FacadePair>,
    #[serde(default)]
    pub water_heater: Option<WaterHeaterSpec>,
    #[serde(default)]
    pub vegetation_note: String,
}

impl BuildingDescription {
    pub fn facade(&self, id: &str) -> Option<&Facade> {
        self.facades.iter().find(|f| f.id == id)
    }

    pub fn room(&self, id: &str) -> Option<&Room> {
        self.rooms.iter().find(|r| r.id == id)
    }

    pub fn utc_offset(&self) -> f64 {
        self.utc_offset_hours.unwrap_or_else(|| (self.longitude / 15.0).round())
    }

    pub fn volume(&self) -> f64 {
        self.floor_area * self.ceiling_height
    }

    /// True when some room sits directly under the roof.
    pub fn has_exposed_roof(&self) -> bool {
        self.roof.is_some() && self.rooms.iter().any(|r| r.under_roof)
    }

    /// Every opening in the building, external then internal, in room order.
    pub fn openings(&self) -> impl Iterator<Item = (&Room, &Opening)> {
        self.rooms.iter().flat_map(|r| {
            r.external_openings
                .iter()
                .chain(r.internal_openings.iter())
                .map(move |o| (r, o))
        })
    }

    /// Multiply every area in the description by `k`.
    pub fn scale_areas(&mut self, k: f64) {
        for room in &mut self.rooms {
            for m in &mut room.facade_memberships {
                m.gross_area *= k;
            }
            for o in room
                .external_openings
                .iter_mut()
                .chain(room.internal_openings.iter_mut())
            {
                o.net_area *= k;
            }
        }
    }
}
