//! Weather CSV (schema v1).
//!
//! Header, in this order:
//!
//! ```text
//! timestamp,temperature_c,relative_humidity_pct,direct_horizontal_w_m2,diffuse_horizontal_w_m2,wind_speed_m_s,wind_direction_deg
//! ```
//!
//! Timestamps are ISO-8601 local standard time without offset
//! (`2024-01-15T13:00:00`). Direct and diffuse components are on the horizontal
//! plane. Wind direction is where the wind blows from, degrees clockwise from North.

use std::collections::{BTreeMap, BTreeSet};
use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use chrono::{Duration, NaiveDateTime};
use serde::{Deserialize, Serialize};

use super::{check_range, floor_hour, parse_timestamp, TIMESTAMP_FORMAT};
use crate::error::{Error, Result};

pub const WEATHER_HEADER: [&str; 7] = [
    "timestamp",
    "temperature_c",
    "relative_humidity_pct",
    "direct_horizontal_w_m2",
    "diffuse_horizontal_w_m2",
    "wind_speed_m_s",
    "wind_direction_deg",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeatherRecord {
    pub timestamp: NaiveDateTime,
    pub temperature: f64,
    pub relative_humidity: f64,
    pub direct_horizontal: f64,
    pub diffuse_horizontal: f64,
    pub wind_speed: f64,
    pub wind_direction: f64,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct WeatherSeries {
    pub records: Vec<WeatherRecord>,
    /// Hours between the first and last record that hold no sample.
    pub gaps: Vec<NaiveDateTime>,
}

/// Options for [`load_weather`].
#[derive(Debug, Clone, Copy)]
pub struct WeatherFormat {
    pub delimiter: u8,
    /// Average sub-hourly samples into hourly records after loading.
    pub resample_hourly: bool,
}

impl Default for WeatherFormat {
    fn default() -> Self {
        WeatherFormat {
            delimiter: b',',
            resample_hourly: false,
        }
    }
}

impl WeatherSeries {
    pub fn new(records: Vec<WeatherRecord>) -> Self {
        let gaps = missing_hours(records.iter().map(|r| r.timestamp));
        WeatherSeries { records, gaps }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// True when records are exactly one hour apart.
    pub fn is_hourly(&self) -> bool {
        self.records
            .windows(2)
            .all(|w| w[1].timestamp - w[0].timestamp == Duration::hours(1))
    }

    /// Average samples into hour buckets (bucket = timestamp floored to the hour).
    ///
    /// Wind direction is averaged as a unit vector.
    pub fn resample_hourly(&self) -> WeatherSeries {
        let mut buckets: BTreeMap<NaiveDateTime, Vec<&WeatherRecord>> = BTreeMap::new();
        for r in &self.records {
            buckets.entry(floor_hour(r.timestamp)).or_default().push(r);
        }
        let records = buckets
            .into_iter()
            .map(|(hour, rs)| {
                let n = rs.len() as f64;
                let mean = |f: fn(&WeatherRecord) -> f64| rs.iter().map(|r| f(r)).sum::<f64>() / n;
                let (sx, sy) = rs.iter().fold((0.0, 0.0), |(x, y), r| {
                    let a = r.wind_direction.to_radians();
                    (x + a.sin(), y + a.cos())
                });
                let dir = if sx == 0.0 && sy == 0.0 {
                    rs[0].wind_direction
                } else {
                    sx.atan2(sy).to_degrees().rem_euclid(360.0)
                };
                WeatherRecord {
                    timestamp: hour,
                    temperature: mean(|r| r.temperature),
                    relative_humidity: mean(|r| r.relative_humidity),
                    direct_horizontal: mean(|r| r.direct_horizontal),
                    diffuse_horizontal: mean(|r| r.diffuse_horizontal),
                    wind_speed: mean(|r| r.wind_speed),
                    wind_direction: dir,
                }
            })
            .collect();
        WeatherSeries::new(records)
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let io_err = |e: csv::Error| Error::invalid(format!("writing weather CSV: {e}"));
        wtr.write_record(WEATHER_HEADER).map_err(io_err)?;
        for r in &self.records {
            wtr.write_record([
                r.timestamp.format(TIMESTAMP_FORMAT).to_string(),
                r.temperature.to_string(),
                r.relative_humidity.to_string(),
                r.direct_horizontal.to_string(),
                r.diffuse_horizontal.to_string(),
                r.wind_speed.to_string(),
                r.wind_direction.to_string(),
            ])
            .map_err(io_err)?;
        }
        wtr.flush()
            .map_err(|e| Error::invalid(format!("writing weather CSV: {e}")))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf8")
    }
}

/// Hours strictly between the first and last sample with no sample in them.
pub(crate) fn missing_hours(ts: impl Iterator<Item = NaiveDateTime>) -> Vec<NaiveDateTime> {
    let covered: BTreeSet<NaiveDateTime> = ts.map(floor_hour).collect();
    let (Some(first), Some(last)) = (covered.first().copied(), covered.last().copied()) else {
        return Vec::new();
    };
    let mut gaps = Vec::new();
    let mut h = first;
    while h < last {
        if !covered.contains(&h) {
            gaps.push(h);
        }
        h += Duration::hours(1);
    }
    gaps
}

pub fn load_weather(path: impl AsRef<Path>, format: &WeatherFormat) -> Result<WeatherSeries> {
    let path = path.as_ref();
    let mut file = File::open(path).map_err(|e| Error::io(path, e))?;
    let mut text = String::new();
    file.read_to_string(&mut text).map_err(|e| Error::io(path, e))?;
    parse_weather(text.as_bytes(), format)
}

pub fn parse_weather<R: Read>(input: R, format: &WeatherFormat) -> Result<WeatherSeries> {
    let mut rdr = csv::ReaderBuilder::new()
        .delimiter(format.delimiter)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(input);
    let headers = rdr
        .headers()
        .map_err(|e| Error::Malformed {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    let cols: Vec<usize> = WEATHER_HEADER
        .iter()
        .map(|name| {
            headers.iter().position(|h| h == *name).ok_or_else(|| Error::Malformed {
                line: 1,
                message: format!("missing column {name:?}"),
            })
        })
        .collect::<Result<_>>()?;

    let mut records: Vec<WeatherRecord> = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Malformed {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let field = |i: usize| row.get(cols[i]).unwrap_or("");
        let num = |i: usize| -> Result<f64> {
            field(i).parse::<f64>().map_err(|_| Error::Malformed {
                line,
                message: format!("{}: cannot parse {:?} as a number", WEATHER_HEADER[i], field(i)),
            })
        };
        let timestamp = parse_timestamp(field(0)).ok_or_else(|| Error::Malformed {
            line,
            message: format!("cannot parse timestamp {:?}", field(0)),
        })?;
        let rec = WeatherRecord {
            timestamp,
            temperature: check_range(line, "temperature_c", num(1)?, -60.0, 70.0)?,
            relative_humidity: check_range(line, "relative_humidity_pct", num(2)?, 0.0, 100.0)?,
            direct_horizontal: check_range(line, "direct_horizontal_w_m2", num(3)?, 0.0, 1500.0)?,
            diffuse_horizontal: check_range(line, "diffuse_horizontal_w_m2", num(4)?, 0.0, 1500.0)?,
            wind_speed: check_range(line, "wind_speed_m_s", num(5)?, 0.0, 80.0)?,
            wind_direction: check_range(line, "wind_direction_deg", num(6)?, 0.0, 360.0)?,
        };
        if let Some(prev) = records.last() {
            if rec.timestamp <= prev.timestamp {
                return Err(Error::NonMonotonic {
                    line,
                    timestamp: rec.timestamp,
                });
            }
        }
        records.push(rec);
    }
    let series = WeatherSeries::new(records);
    Ok(if format.resample_hourly {
        series.resample_hourly()
    } else {
        series
    })
}
