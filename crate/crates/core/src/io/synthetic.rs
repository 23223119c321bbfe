use std::f64::consts::PI;

use chrono::{Duration, NaiveDate, NaiveDateTime};
use serde::{Deserialize, Serialize};

use super::{WeatherRecord, WeatherSeries};
use crate::error::{Error, Result};
use crate::thermal::solar_position_local;

/// Parameters of a deterministic clear-sky weather sequence.
///
/// Defaults describe a hot-season coastal day in Reunion (January).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SyntheticWeather {
    pub start: NaiveDateTime,
    pub days: u32,
    pub latitude: f64,
    pub longitude: f64,
    pub utc_offset_hours: f64,
    /// Daily maximum, reached at `peak_hour`, °C.
    pub t_max: f64,
    pub t_min: f64,
    pub peak_hour: f64,
    /// Relative humidity at the temperature minimum and maximum, %.
    pub rh_at_t_min: f64,
    pub rh_at_t_max: f64,
    /// Clear-sky beam model `DNI = a·exp(−b / sin(altitude))`, W/m².
    pub beam_a: f64,
    pub beam_b: f64,
    /// Diffuse horizontal as a fraction of DNI.
    pub diffuse_ratio: f64,
    pub wind_speed: f64,
    pub wind_direction: f64,
}

impl Default for SyntheticWeather {
    fn default() -> Self {
        SyntheticWeather {
            start: NaiveDate::from_ymd_opt(2024, 1, 15)
                .and_then(|d| d.and_hms_opt(0, 0, 0))
                .expect("valid date"),
            days: 7,
            latitude: -20.9,
            longitude: 55.5,
            utc_offset_hours: 4.0,
            t_max: 31.0,
            t_min: 24.0,
            peak_hour: 14.0,
            rh_at_t_min: 85.0,
            rh_at_t_max: 60.0,
            beam_a: 1100.0,
            beam_b: 0.2,
            diffuse_ratio: 0.12,
            wind_speed: 3.0,
            wind_direction: 160.0,
        }
    }
}

/// Hourly series: cosine temperature cycle, humidity moving opposite to
/// temperature, clear-sky sun from the solar position, constant wind.
pub fn synthetic_weather(p: &SyntheticWeather) -> Result<WeatherSeries> {
    if p.days < 1 {
        return Err(Error::invalid("synthetic weather needs at least one day"));
    }
    if p.t_min > p.t_max {
        return Err(Error::invalid("t_min must not exceed t_max"));
    }
    let mean = (p.t_max + p.t_min) / 2.0;
    let amp = (p.t_max - p.t_min) / 2.0;
    let records = (0..p.days as i64 * 24)
        .map(|h| {
            let timestamp = p.start + Duration::hours(h);
            let hour = (h % 24) as f64;
            let phase = (2.0 * PI * (hour - p.peak_hour) / 24.0).cos();
            let temperature = mean + amp * phase;
            // 0 at t_min, 1 at t_max
            let s = (phase + 1.0) / 2.0;
            let relative_humidity = p.rh_at_t_min + (p.rh_at_t_max - p.rh_at_t_min) * s;
            let sun = solar_position_local(p.latitude, p.longitude, timestamp, p.utc_offset_hours);
            let (direct, diffuse) = if sun.altitude > 0.0 {
                let sin_alt = sun.altitude.to_radians().sin();
                let dni = p.beam_a * (-p.beam_b / sin_alt).exp();
                (dni * sin_alt, p.diffuse_ratio * dni)
            } else {
                (0.0, 0.0)
            };
            WeatherRecord {
                timestamp,
                temperature,
                relative_humidity,
                direct_horizontal: direct,
                diffuse_horizontal: diffuse,
                wind_speed: p.wind_speed,
                wind_direction: p.wind_direction,
            }
        })
        .collect();
    Ok(WeatherSeries::new(records))
}
