use serde::{Deserialize, Serialize};

use super::solar::SolarPosition;

/// Horizontal overhang of infinite width above a vertical surface.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OverhangGeometry {
    /// Projection from the facade, m.
    pub depth: f64,
    /// Height of the protected surface, m.
    pub height: f64,
    /// Gap between the overhang underside and the top of the surface, m.
    pub offset: f64,
}

/// Fraction of a vertical surface shaded by an overhang.
///
/// Uses the profile angle Ω (the sun altitude projected on the plane normal to
/// the facade): the shadow edge falls `d·tan Ω` below the overhang. A sun
/// below the horizon or behind the facade returns 1.
pub fn overhang_shading_fraction(geometry: &OverhangGeometry, sun: &SolarPosition, surface_azimuth: f64) -> f64 {
    let gamma = (sun.azimuth - surface_azimuth).to_radians();
    if sun.altitude <= 0.0 || gamma.cos() <= 0.0 {
        return 1.0;
    }
    let OverhangGeometry { depth, height, offset } = *geometry;
    if depth <= 0.0 {
        return 0.0;
    }
    if height <= 0.0 {
        return 1.0;
    }
    let tan_profile = sun.altitude.to_radians().tan() / gamma.cos();
    let shaded = (depth * tan_profile - offset).clamp(0.0, height);
    (shaded / height).clamp(0.0, 1.0)
}
