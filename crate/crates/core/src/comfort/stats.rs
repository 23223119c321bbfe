use chrono::NaiveDateTime;
use serde::{Deserialize, Serialize};

use super::psychro::{relative_humidity, PsychroPoint, STANDARD_PRESSURE};
use super::zone::{classify, Classification, ComfortZone};
use crate::error::{Error, Result};
use crate::io::{IndoorSeries, WeatherSeries};
use crate::thermal::SimulationResult;

/// Differences `a − b` between two aligned series, °C.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OffsetStats {
    pub samples: usize,
    pub mean: f64,
    pub max: f64,
    pub min: f64,
    /// Share of samples with an offset of at least 1 °C.
    pub fraction_at_least_1c: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComfortStats {
    pub samples: usize,
    pub total_hours: f64,
    pub outside_samples: usize,
    pub discomfort_fraction: f64,
    /// Degrees above the (air-speed extended) warm edge, over outside samples.
    pub mean_exceedance_c: f64,
    pub max_exceedance_c: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paired_offset: Option<OffsetStats>,
}

/// Discomfort statistics of hourly samples.
pub fn discomfort_fraction(points: &[PsychroPoint], zone: &ComfortZone) -> Result<ComfortStats> {
    discomfort_stats(points, zone, 1.0)
}

/// Discomfort statistics where each sample stands for `sample_hours`.
pub fn discomfort_stats(points: &[PsychroPoint], zone: &ComfortZone, sample_hours: f64) -> Result<ComfortStats> {
    if points.is_empty() {
        return Err(Error::invalid("comfort analysis needs at least one sample"));
    }
    let mut outside = 0usize;
    let (mut sum_exc, mut max_exc) = (0.0, 0.0f64);
    for p in points {
        if classify(p, zone) == Classification::Outside {
            outside += 1;
            let exc = (p.temperature - zone.at_air_speed(p.air_speed).max_temperature()).max(0.0);
            sum_exc += exc;
            max_exc = max_exc.max(exc);
        }
    }
    Ok(ComfortStats {
        samples: points.len(),
        total_hours: points.len() as f64 * sample_hours,
        outside_samples: outside,
        discomfort_fraction: outside as f64 / points.len() as f64,
        mean_exceedance_c: if outside > 0 { sum_exc / outside as f64 } else { 0.0 },
        max_exceedance_c: max_exc,
        paired_offset: None,
    })
}

pub fn paired_offset(a: &[(NaiveDateTime, f64)], b: &[(NaiveDateTime, f64)]) -> Result<OffsetStats> {
    if a.len() != b.len() {
        return Err(Error::invalid(format!(
            "paired series differ in length ({} vs {})",
            a.len(),
            b.len()
        )));
    }
    if a.is_empty() {
        return Err(Error::invalid("paired series are empty"));
    }
    let mut diffs = Vec::with_capacity(a.len());
    for (x, y) in a.iter().zip(b) {
        if x.0 != y.0 {
            return Err(Error::invalid(format!(
                "paired series timestamps differ: {} vs {}",
                x.0, y.0
            )));
        }
        diffs.push(x.1 - y.1);
    }
    let n = diffs.len() as f64;
    Ok(OffsetStats {
        samples: diffs.len(),
        mean: diffs.iter().sum::<f64>() / n,
        max: diffs.iter().copied().fold(f64::MIN, f64::max),
        min: diffs.iter().copied().fold(f64::MAX, f64::min),
        fraction_at_least_1c: diffs.iter().filter(|d| **d >= 1.0).count() as f64 / n,
    })
}

/// Points of an indoor series; resultant temperature is plotted when present.
pub fn points_from_indoor(series: &IndoorSeries) -> Result<Vec<PsychroPoint>> {
    series
        .records
        .iter()
        .map(|r| {
            PsychroPoint::measured(
                r.air_temperature,
                r.comfort_temperature(),
                r.relative_humidity,
                r.air_speed.unwrap_or(0.0),
            )
        })
        .collect()
}

/// `(timestamp, comfort temperature)` pairs of an indoor series.
pub fn indoor_temperatures(series: &IndoorSeries) -> Vec<(NaiveDateTime, f64)> {
    series
        .records
        .iter()
        .map(|r| (r.timestamp, r.comfort_temperature()))
        .collect()
}

/// Points of a simulation at resultant temperature.
///
/// The zone has no moisture balance, so indoor air keeps the outdoor humidity
/// ratio; relative humidity is recomputed at the indoor air temperature and
/// clipped to 100 %.
pub fn points_from_simulation(result: &SimulationResult, weather: &WeatherSeries) -> Result<Vec<PsychroPoint>> {
    if result.len() != weather.len() {
        return Err(Error::invalid("simulation and weather lengths differ"));
    }
    result
        .air_temperature
        .iter()
        .zip(&result.resultant_temperature)
        .zip(&weather.records)
        .map(|((&t_air, &t_res), rec)| {
            let w = super::psychro::humidity_ratio(rec.temperature, rec.relative_humidity, STANDARD_PRESSURE)?;
            let rh = relative_humidity(t_air, w, STANDARD_PRESSURE)?.min(100.0);
            PsychroPoint::measured(t_air, t_res, rh, 0.0)
        })
        .collect()
}

/// `(timestamp, resultant temperature)` pairs of a simulation.
pub fn resultant_series(result: &SimulationResult) -> Vec<(NaiveDateTime, f64)> {
    result
        .timestamps
        .iter()
        .copied()
        .zip(result.resultant_temperature.iter().copied())
        .collect()
}
