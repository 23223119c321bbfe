use serde::{Deserialize, Serialize};

/// Openings of one cross-ventilation axis treated as two orifices in series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VentilationApertures {
    /// Net opening area on the windward facade, m².
    pub inlet_area: f64,
    /// Net opening area on the opposite facade, m².
    pub outlet_area: f64,
    pub discharge_coefficient: f64,
    /// Pressure-coefficient difference between the two facades.
    pub delta_cp: f64,
    /// Outward normal of the inlet facade, degrees clockwise from North.
    pub axis_azimuth: f64,
}

impl VentilationApertures {
    pub fn closed() -> Self {
        VentilationApertures {
            inlet_area: 0.0,
            outlet_area: 0.0,
            discharge_coefficient: 0.6,
            delta_cp: 0.5,
            axis_azimuth: 0.0,
        }
    }

    /// Series combination `(A_in⁻² + A_out⁻²)^(-1/2)`, zero if either side is shut.
    pub fn equivalent_area(&self) -> f64 {
        if self.inlet_area <= 0.0 || self.outlet_area <= 0.0 {
            return 0.0;
        }
        (self.inlet_area.powi(-2) + self.outlet_area.powi(-2)).powf(-0.5)
    }

    /// Pressure scaling for a wind blowing from `wind_direction`.
    ///
    /// The facade-pressure difference goes with the normal component of the wind,
    /// so the effective ΔCp is scaled by |cos θ| where θ is the angle between the
    /// wind and the axis; wind blowing along the facades drives no flow.
    pub fn incidence_factor(&self, wind_direction: f64) -> f64 {
        (wind_direction - self.axis_azimuth).to_radians().cos().abs()
    }

    /// Volume flow in m³/s.
    pub fn flow_rate(&self, wind_speed: f64, incidence_factor: f64) -> f64 {
        let dcp = (self.delta_cp * incidence_factor).max(0.0);
        self.discharge_coefficient * self.equivalent_area() * wind_speed.max(0.0) * dcp.sqrt()
    }
}

/// Air changes per hour of wind-driven cross ventilation.
///
/// `incidence_factor` is 1 for wind normal to the axis facades; see
/// [`VentilationApertures::incidence_factor`].
pub fn ventilation_ach(apertures: &VentilationApertures, volume: f64, wind_speed: f64, incidence_factor: f64) -> f64 {
    if !(volume > 0.0) {
        return 0.0;
    }
    3600.0 * apertures.flow_rate(wind_speed, incidence_factor) / volume
}
