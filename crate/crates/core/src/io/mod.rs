//! File formats: building JSON, weather and indoor CSV, synthetic weather.

mod building_file;
mod indoor;
mod synthetic;
mod weather;

use chrono::{NaiveDateTime, Timelike};

pub use building_file::{load_building, parse_building};
pub use indoor::{load_indoor, parse_indoor, IndoorRecord, IndoorSeries, INDOOR_HEADER};
pub use synthetic::{synthetic_weather, SyntheticWeather};
pub use weather::{load_weather, parse_weather, WeatherFormat, WeatherRecord, WeatherSeries, WEATHER_HEADER};

use crate::error::{Error, Result};

pub const TIMESTAMP_FORMAT: &str = "%Y-%m-%dT%H:%M:%S";

pub(crate) fn parse_timestamp(s: &str) -> Option<NaiveDateTime> {
    const FORMATS: [&str; 4] = [
        "%Y-%m-%dT%H:%M:%S",
        "%Y-%m-%dT%H:%M",
        "%Y-%m-%d %H:%M:%S",
        "%Y-%m-%d %H:%M",
    ];
    FORMATS.iter().find_map(|f| NaiveDateTime::parse_from_str(s, f).ok())
}

pub(crate) fn floor_hour(t: NaiveDateTime) -> NaiveDateTime {
    t.with_minute(0)
        .and_then(|t| t.with_second(0))
        .and_then(|t| t.with_nanosecond(0))
        .expect("valid time")
}

pub(crate) fn check_range(line: u64, field: &'static str, value: f64, min: f64, max: f64) -> Result<f64> {
    if value.is_finite() && value >= min && value <= max {
        Ok(value)
    } else {
        Err(Error::OutOfRange {
            line,
            field,
            value,
            min,
            max,
        })
    }
}
