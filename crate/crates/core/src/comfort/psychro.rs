use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const STANDARD_PRESSURE: f64 = 101_325.0;

/// Ratio of molar masses water/dry air, in g/kg.
const EPSILON_G_KG: f64 = 621.945;

/// Saturation vapour pressure over liquid water, Pa (Magnus form, Alduchov–Eskridge coefficients).
///
/// Valid for −20..60 °C.
pub fn saturation_vapor_pressure(t: f64) -> Result<f64> {
    if !(-20.0..=60.0).contains(&t) {
        return Err(Error::invalid(format!(
            "temperature {t} °C outside the psychrometric range -20..60 °C"
        )));
    }
    Ok(610.94 * (17.625 * t / (t + 243.04)).exp())
}

/// Humidity ratio, g of water per kg of dry air.
pub fn humidity_ratio(t: f64, rh: f64, pressure: f64) -> Result<f64> {
    if !(0.0..=100.0).contains(&rh) {
        return Err(Error::invalid(format!("relative humidity {rh} % outside 0..100")));
    }
    let pv = rh / 100.0 * saturation_vapor_pressure(t)?;
    if pv >= pressure {
        return Err(Error::invalid(format!(
            "vapour pressure {pv:.0} Pa is not below total pressure {pressure} Pa"
        )));
    }
    Ok(EPSILON_G_KG * pv / (pressure - pv))
}

/// Relative humidity for a humidity ratio, %. May exceed 100 for supersaturated input.
pub fn relative_humidity(t: f64, w: f64, pressure: f64) -> Result<f64> {
    if w < 0.0 {
        return Err(Error::invalid("humidity ratio must be >= 0"));
    }
    let pv = pressure * w / (EPSILON_G_KG + w);
    Ok(100.0 * pv / saturation_vapor_pressure(t)?)
}

/// State plotted on a psychrometric chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PsychroPoint {
    /// Temperature used for comfort (resultant when available, else dry bulb), °C.
    pub temperature: f64,
    pub relative_humidity: f64,
    /// g/kg
    pub humidity_ratio: f64,
    /// m/s
    pub air_speed: f64,
}

impl PsychroPoint {
    /// Point whose humidity ratio follows from `temperature` and `rh` at standard pressure.
    pub fn new(temperature: f64, rh: f64, air_speed: f64) -> Result<Self> {
        Self::measured(temperature, temperature, rh, air_speed)
    }

    /// Humidity from the air temperature, plotted at a (possibly different) comfort temperature.
    pub fn measured(air_temperature: f64, comfort_temperature: f64, rh: f64, air_speed: f64) -> Result<Self> {
        if !(air_speed >= 0.0) {
            return Err(Error::invalid("air speed must be >= 0"));
        }
        Ok(PsychroPoint {
            temperature: comfort_temperature,
            relative_humidity: rh,
            humidity_ratio: humidity_ratio(air_temperature, rh, STANDARD_PRESSURE)?,
            air_speed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn range_is_enforced() {
        assert!(saturation_vapor_pressure(-25.0).is_err());
        assert!(saturation_vapor_pressure(61.0).is_err());
    }

    #[test]
    fn zero_humidity() {
        assert_eq!(humidity_ratio(25.0, 0.0, STANDARD_PRESSURE).unwrap(), 0.0);
    }

    #[test]
    fn pressure_too_low() {
        assert!(humidity_ratio(50.0, 100.0, 10_000.0).is_err());
    }

    #[test]
    fn inverse() {
        let w = humidity_ratio(27.0, 60.0, STANDARD_PRESSURE).unwrap();
        let rh = relative_humidity(27.0, w, STANDARD_PRESSURE).unwrap();
        assert!((rh - 60.0).abs() < 1e-9);
    }
}
