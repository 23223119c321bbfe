use serde::{Deserialize, Serialize};

use super::airflow::VentilationApertures;
use super::shading::OverhangGeometry;
use crate::building::{facade_porosities, AtticRegime, BuildingDescription, ColorClass, MassClass};
use crate::error::{Error, Result};

/// Volumetric heat capacity of air, J/(m³·K).
pub const AIR_HEAT_CAPACITY: f64 = 1206.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    Roof,
    Wall,
    Window,
}

impl SurfaceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SurfaceKind::Roof => "roof",
            SurfaceKind::Wall => "wall",
            SurfaceKind::Window => "window",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceShading {
    None,
    /// Beam shading by an overhang.
    Overhang(OverhangGeometry),
    /// Constant fraction of beam and diffuse blocked (blinds, screens).
    Fixed(f64),
}

/// One envelope element exchanging heat with the outdoors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceModel {
    pub id: String,
    pub kind: SurfaceKind,
    /// m²
    pub area: f64,
    /// Outward normal, degrees clockwise from North.
    pub azimuth: f64,
    /// 0 = horizontal, 90 = vertical.
    pub tilt: f64,
    /// Opaque surfaces only.
    pub absorptivity: f64,
    /// Windows only: share of incident solar entering the zone.
    pub transmittance: f64,
    /// Resistance of the layers between the two films, m²·K/W.
    pub layer_resistance: f64,
    pub exterior_film: f64,
    pub interior_film: f64,
    pub shading: SurfaceShading,
}

impl SurfaceModel {
    pub fn total_resistance(&self) -> f64 {
        1.0 / self.exterior_film + self.layer_resistance + 1.0 / self.interior_film
    }

    /// Area × U, W/K.
    pub fn conductance(&self) -> f64 {
        self.area / self.total_resistance()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RoofExposure {
    /// Exposed when some room is under the roof.
    #[default]
    Auto,
    Exposed,
    /// Another dwelling above: the ceiling exchanges no heat.
    Adiabatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OpeningState {
    #[default]
    Open,
    Closed,
}

/// Knobs used when deriving a [`ZoneModel`] from a building description.
///
/// Defaults are calibration choices for a single-zone stand-in model, not
/// values taken from any measurement campaign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ZoneOptions {
    pub roof_exposure: RoofExposure,
    pub openings: OpeningState,
    /// Background leakage, air changes per hour.
    pub infiltration_ach: f64,
    pub discharge_coefficient: f64,
    pub delta_cp: f64,
    pub mass_class: Option<MassClass>,
    /// J/(K·m² floor)
    pub light_capacitance: f64,
    pub heavy_capacitance: f64,
    /// Constant internal gains, W.
    pub internal_gains_w: f64,
    pub exterior_film: f64,
    pub interior_film: f64,
    pub ground_reflectance: f64,
    pub window_transmittance: f64,
    pub window_resistance: f64,
    /// Roof structure without insulation, m²·K/W.
    pub roof_base_resistance: f64,
    /// Air layer of a closed attic, m²·K/W.
    pub attic_air_resistance: f64,
    /// Share of the roof's absorbed solar that still reaches the ceiling under a
    /// well-ventilated attic.
    pub ventilated_attic_solar_factor: f64,
    /// Fraction of solar blocked by mobile window shading or full wall screens.
    pub device_shading_fraction: f64,
    /// Override the roof colour.
    pub roof_color: Option<ColorClass>,
    /// Override the roof insulation thickness, cm.
    pub roof_insulation_cm: Option<f64>,
}

impl Default for ZoneOptions {
    fn default() -> Self {
        ZoneOptions {
            roof_exposure: RoofExposure::Auto,
            openings: OpeningState::Open,
            infiltration_ach: 1.0,
            discharge_coefficient: 0.6,
            delta_cp: 0.5,
            mass_class: None,
            light_capacitance: 80_000.0,
            heavy_capacitance: 260_000.0,
            internal_gains_w: 300.0,
            exterior_film: 25.0,
            interior_film: 8.0,
            ground_reflectance: 0.2,
            window_transmittance: 0.75,
            window_resistance: 0.005,
            roof_base_resistance: 0.15,
            attic_air_resistance: 0.16,
            ventilated_attic_solar_factor: 0.3,
            device_shading_fraction: 0.8,
            roof_color: None,
            roof_insulation_cm: None,
        }
    }
}

/// Lumped single-zone model: one air+fabric node coupled to every envelope surface.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZoneModel {
    pub name: String,
    pub latitude: f64,
    pub longitude: f64,
    pub utc_offset_hours: f64,
    pub floor_area: f64,
    /// m³
    pub volume: f64,
    pub mass_class: MassClass,
    /// J/K
    pub capacitance: f64,
    pub surfaces: Vec<SurfaceModel>,
    /// Interior area of adiabatic boundaries (floor, ceiling under another
    /// dwelling), assumed at air temperature.
    pub adiabatic_area: f64,
    /// Internal gains by local hour of day, W.
    pub internal_gains: [f64; 24],
    pub ventilation: VentilationApertures,
    pub infiltration_ach: f64,
    pub ground_reflectance: f64,
}

impl ZoneModel {
    pub fn validate(&self) -> Result<()> {
        if !(self.capacitance > 0.0) {
            return Err(Error::invalid("zone capacitance must be > 0"));
        }
        if !(self.volume > 0.0) {
            return Err(Error::invalid("zone volume must be > 0"));
        }
        for s in &self.surfaces {
            if !(s.total_resistance() > 0.0) || !(s.area >= 0.0) {
                return Err(Error::invalid(format!("surface {}: invalid area or resistance", s.id)));
            }
        }
        Ok(())
    }

    pub fn surface(&self, id: &str) -> Option<&SurfaceModel> {
        self.surfaces.iter().find(|s| s.id == id)
    }

    /// Build the zone for a dwelling description.
    ///
    /// Walls and windows map one-to-one to surfaces. The roof is included when
    /// exposed; an adiabatic ceiling is added to the interior area instead. The
    /// first facade pair provides the cross-ventilation openings.
    pub fn from_building(b: &BuildingDescription, o: &ZoneOptions) -> Result<ZoneModel> {
        let mass_class = o.mass_class.unwrap_or(b.mass_class);
        let per_m2 = match mass_class {
            MassClass::Light => o.light_capacitance,
            MassClass::Heavy => o.heavy_capacitance,
        };
        let volume = b.volume();
        let capacitance = per_m2 * b.floor_area + AIR_HEAT_CAPACITY * volume;
        let mut surfaces = Vec::new();

        for w in &b.walls {
            let shading = if w.full_shading {
                SurfaceShading::Fixed(o.device_shading_fraction)
            } else if w.overhang_depth > 0.0 && w.overhang_height > 0.0 {
                SurfaceShading::Overhang(OverhangGeometry {
                    depth: w.overhang_depth,
                    height: w.overhang_height,
                    offset: 0.0,
                })
            } else {
                SurfaceShading::None
            };
            surfaces.push(SurfaceModel {
                id: w.id.clone(),
                kind: SurfaceKind::Wall,
                area: w.area,
                azimuth: w.orientation.azimuth(),
                tilt: 90.0,
                absorptivity: w.color.absorptivity(),
                transmittance: 0.0,
                layer_resistance: w.base_resistance() + w.insulation.resistance(),
                exterior_film: o.exterior_film,
                interior_film: o.interior_film,
                shading,
            });
        }

        for w in &b.windows {
            let shading = if w.mobile_shading {
                SurfaceShading::Fixed(o.device_shading_fraction)
            } else if w.overhang_depth > 0.0 {
                SurfaceShading::Overhang(OverhangGeometry {
                    depth: w.overhang_depth,
                    height: w.height,
                    offset: w.effective_offset(),
                })
            } else {
                SurfaceShading::None
            };
            surfaces.push(SurfaceModel {
                id: w.id.clone(),
                kind: SurfaceKind::Window,
                area: w.glazed_area,
                azimuth: w.orientation.azimuth(),
                tilt: 90.0,
                absorptivity: 0.0,
                transmittance: o.window_transmittance,
                layer_resistance: o.window_resistance,
                exterior_film: o.exterior_film,
                interior_film: o.interior_film,
                shading,
            });
        }

        let exposed = match o.roof_exposure {
            RoofExposure::Auto => b.has_exposed_roof(),
            RoofExposure::Exposed => true,
            RoofExposure::Adiabatic => false,
        };
        let mut adiabatic_area = b.floor_area;
        match (&b.roof, exposed) {
            (Some(roof), true) => {
                let color = o.roof_color.unwrap_or(roof.color);
                let mut insulation = roof.insulation.clone();
                if let Some(cm) = o.roof_insulation_cm {
                    insulation.thickness = cm;
                }
                let (absorptivity, attic_r) = match roof.attic {
                    AtticRegime::None => (color.absorptivity(), 0.0),
                    AtticRegime::ClosedOrBarelyVentilated => (color.absorptivity(), o.attic_air_resistance),
                    AtticRegime::WellVentilated => (
                        color.absorptivity() * o.ventilated_attic_solar_factor,
                        o.attic_air_resistance,
                    ),
                };
                surfaces.push(SurfaceModel {
                    id: "roof".into(),
                    kind: SurfaceKind::Roof,
                    area: roof.area,
                    azimuth: 0.0,
                    tilt: 0.0,
                    absorptivity,
                    transmittance: 0.0,
                    layer_resistance: o.roof_base_resistance + attic_r + insulation.resistance(),
                    exterior_film: o.exterior_film,
                    interior_film: o.interior_film,
                    shading: SurfaceShading::None,
                });
            }
            (None, true) => {
                return Err(Error::invalid("roof exposure requested but the building has no roof"));
            }
            (_, false) => adiabatic_area += b.floor_area,
        }

        let ventilation = match (o.openings, b.facade_pairs.first()) {
            (OpeningState::Open, Some(pair)) => {
                let p = facade_porosities(b)?.swap_remove(0);
                let axis_azimuth = b.facade(&pair.facade_1).map(|f| f.orientation.azimuth()).unwrap_or(0.0);
                VentilationApertures {
                    inlet_area: p.so1,
                    outlet_area: p.so2,
                    discharge_coefficient: o.discharge_coefficient,
                    delta_cp: o.delta_cp,
                    axis_azimuth,
                }
            }
            _ => VentilationApertures {
                discharge_coefficient: o.discharge_coefficient,
                delta_cp: o.delta_cp,
                ..VentilationApertures::closed()
            },
        };

        let zone = ZoneModel {
            name: b.name.clone(),
            latitude: b.latitude,
            longitude: b.longitude,
            utc_offset_hours: b.utc_offset(),
            floor_area: b.floor_area,
            volume,
            mass_class,
            capacitance,
            surfaces,
            adiabatic_area,
            internal_gains: [o.internal_gains_w; 24],
            ventilation,
            infiltration_ach: o.infiltration_ach,
            ground_reflectance: o.ground_reflectance,
        };
        zone.validate()?;
        Ok(zone)
    }
}
