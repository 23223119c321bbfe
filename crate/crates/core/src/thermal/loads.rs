use serde::{Deserialize, Serialize};

use super::solar::SolarPosition;

/// Below this altitude beam irradiance is folded into the diffuse part.
const MIN_BEAM_ALTITUDE: f64 = 2.0;

/// Equivalent outdoor temperature for conduction through a sunlit opaque surface.
pub fn sol_air_temperature(t_out: f64, irradiance: f64, absorptivity: f64, exterior_film: f64) -> f64 {
    t_out + absorptivity * irradiance / exterior_film
}

/// Irradiance on a tilted plane, split into beam and diffuse (sky + ground) parts, W/m².
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct PlaneIrradiance {
    pub beam: f64,
    pub diffuse: f64,
}

impl PlaneIrradiance {
    pub fn total(&self) -> f64 {
        self.beam + self.diffuse
    }
}

/// Isotropic-sky transposition of horizontal direct and diffuse irradiance.
pub fn plane_irradiance(
    sun: &SolarPosition,
    direct_horizontal: f64,
    diffuse_horizontal: f64,
    surface_azimuth: f64,
    tilt: f64,
    ground_reflectance: f64,
) -> PlaneIrradiance {
    let cos_tilt = tilt.to_radians().cos();
    let (beam_h, diffuse_h) = if sun.altitude > MIN_BEAM_ALTITUDE {
        (direct_horizontal, diffuse_horizontal)
    } else {
        (0.0, direct_horizontal + diffuse_horizontal)
    };
    let beam = if beam_h > 0.0 {
        let normal = beam_h / sun.altitude.to_radians().sin();
        normal * sun.incidence_cosine(surface_azimuth, tilt).max(0.0)
    } else {
        0.0
    };
    let sky = diffuse_h * (1.0 + cos_tilt) / 2.0;
    let ground = ground_reflectance * (beam_h + diffuse_h) * (1.0 - cos_tilt) / 2.0;
    PlaneIrradiance {
        beam,
        diffuse: sky + ground,
    }
}
