//! Indoor monitoring CSV (schema v1).
//!
//! ```text
//! timestamp,zone_id,air_temperature_c,resultant_temperature_c,relative_humidity_pct,air_speed_m_s
//! ```
//!
//! `resultant_temperature_c` and `air_speed_m_s` may be left empty. Timestamps
//! must increase strictly within each zone; zones may be interleaved.

use std::collections::{BTreeMap, HashMap};
use std::io::Read;
use std::path::Path;

use chrono::NaiveDateTime;
use serde::{Deserialize, Serialize};

use super::{check_range, floor_hour, parse_timestamp};
use crate::error::{Error, Result};

pub const INDOOR_HEADER: [&str; 6] = [
    "timestamp",
    "zone_id",
    "air_temperature_c",
    "resultant_temperature_c",
    "relative_humidity_pct",
    "air_speed_m_s",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IndoorRecord {
    pub timestamp: NaiveDateTime,
    pub zone_id: String,
    pub air_temperature: f64,
    pub resultant_temperature: Option<f64>,
    pub relative_humidity: f64,
    pub air_speed: Option<f64>,
}

impl IndoorRecord {
    /// Resultant temperature when measured, else air temperature.
    pub fn comfort_temperature(&self) -> f64 {
        self.resultant_temperature.unwrap_or(self.air_temperature)
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct IndoorSeries {
    pub records: Vec<IndoorRecord>,
}

impl IndoorSeries {
    /// Zone ids in order of first appearance.
    pub fn zones(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for r in &self.records {
            if !out.contains(&r.zone_id) {
                out.push(r.zone_id.clone());
            }
        }
        out
    }

    pub fn zone(&self, id: &str) -> IndoorSeries {
        IndoorSeries {
            records: self.records.iter().filter(|r| r.zone_id == id).cloned().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Hourly means per zone. Optional fields are averaged over the samples that have them.
    pub fn resample_hourly(&self) -> IndoorSeries {
        let mut buckets: BTreeMap<(String, NaiveDateTime), Vec<&IndoorRecord>> = BTreeMap::new();
        for r in &self.records {
            buckets
                .entry((r.zone_id.clone(), floor_hour(r.timestamp)))
                .or_default()
                .push(r);
        }
        let mean_opt = |xs: Vec<f64>| (!xs.is_empty()).then(|| xs.iter().sum::<f64>() / xs.len() as f64);
        let records = buckets
            .into_iter()
            .map(|((zone_id, hour), rs)| {
                let n = rs.len() as f64;
                IndoorRecord {
                    timestamp: hour,
                    zone_id,
                    air_temperature: rs.iter().map(|r| r.air_temperature).sum::<f64>() / n,
                    resultant_temperature: mean_opt(rs.iter().filter_map(|r| r.resultant_temperature).collect()),
                    relative_humidity: rs.iter().map(|r| r.relative_humidity).sum::<f64>() / n,
                    air_speed: mean_opt(rs.iter().filter_map(|r| r.air_speed).collect()),
                }
            })
            .collect();
        IndoorSeries { records }
    }
}

pub fn load_indoor(path: impl AsRef<Path>) -> Result<IndoorSeries> {
    let path = path.as_ref();
    let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
    parse_indoor(file)
}

pub fn parse_indoor<R: Read>(input: R) -> Result<IndoorSeries> {
    let mut rdr = csv::ReaderBuilder::new()
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
    let col = |name: &str| headers.iter().position(|h| h == name);
    let mut cols = Vec::new();
    for (i, name) in INDOOR_HEADER.iter().enumerate() {
        match col(name) {
            Some(c) => cols.push(Some(c)),
            // resultant and air speed columns are optional
            None if i == 3 || i == 5 => cols.push(None),
            None => {
                return Err(Error::Malformed {
                    line: 1,
                    message: format!("missing column {name:?}"),
                })
            }
        }
    }

    let mut last: HashMap<String, NaiveDateTime> = HashMap::new();
    let mut records = Vec::new();
    for row in rdr.records() {
        let row = row.map_err(|e| Error::Malformed {
            line: e.position().map_or(0, |p| p.line()),
            message: e.to_string(),
        })?;
        let line = row.position().map_or(0, |p| p.line());
        let field = |i: usize| cols[i].and_then(|c| row.get(c)).unwrap_or("");
        let num = |i: usize| -> Result<f64> {
            field(i).parse::<f64>().map_err(|_| Error::Malformed {
                line,
                message: format!("{}: cannot parse {:?} as a number", INDOOR_HEADER[i], field(i)),
            })
        };
        let opt = |i: usize| -> Result<Option<f64>> {
            if field(i).is_empty() {
                Ok(None)
            } else {
                num(i).map(Some)
            }
        };
        let timestamp = parse_timestamp(field(0)).ok_or_else(|| Error::Malformed {
            line,
            message: format!("cannot parse timestamp {:?}", field(0)),
        })?;
        let zone_id = field(1).to_string();
        if zone_id.is_empty() {
            return Err(Error::Malformed {
                line,
                message: "empty zone_id".into(),
            });
        }
        let resultant = match opt(3)? {
            Some(v) => Some(check_range(line, "resultant_temperature_c", v, -30.0, 70.0)?),
            None => None,
        };
        let air_speed = match opt(5)? {
            Some(v) => Some(check_range(line, "air_speed_m_s", v, 0.0, 20.0)?),
            None => None,
        };
        let rec = IndoorRecord {
            timestamp,
            air_temperature: check_range(line, "air_temperature_c", num(2)?, -30.0, 70.0)?,
            resultant_temperature: resultant,
            relative_humidity: check_range(line, "relative_humidity_pct", num(4)?, 0.0, 100.0)?,
            air_speed,
            zone_id,
        };
        if let Some(prev) = last.get(&rec.zone_id) {
            if rec.timestamp <= *prev {
                return Err(Error::NonMonotonic {
                    line,
                    timestamp: rec.timestamp,
                });
            }
        }
        last.insert(rec.zone_id.clone(), rec.timestamp);
        records.push(rec);
    }
    Ok(IndoorSeries { records })
}

#[cfg(test)]
mod tests {
    use super::*;

    const TEXT: &str = "timestamp,zone_id,air_temperature_c,resultant_temperature_c,relative_humidity_pct,air_speed_m_s
2024-02-01T00:00:00,top,28.0,,70,
2024-02-01T00:00:00,mid,27.0,27.5,72,0.2
2024-02-01T00:30:00,top,29.0,,74,
2024-02-01T00:30:00,mid,27.4,27.9,70,0.4
";

    #[test]
    fn parses_interleaved_zones() {
        let s = parse_indoor(TEXT.as_bytes()).unwrap();
        assert_eq!(s.zones(), vec!["top".to_string(), "mid".to_string()]);
        assert_eq!(s.zone("top").len(), 2);
        assert_eq!(s.records[0].resultant_temperature, None);
        assert_eq!(s.records[1].air_speed, Some(0.2));
    }

    #[test]
    fn resample_means_pairs() {
        let h = parse_indoor(TEXT.as_bytes()).unwrap().resample_hourly();
        assert_eq!(h.len(), 2);
        let top = &h.zone("top").records[0];
        assert_eq!(top.air_temperature, 28.5);
        assert_eq!(top.relative_humidity, 72.0);
        assert_eq!(top.resultant_temperature, None);
        let mid = &h.zone("mid").records[0];
        assert!((mid.resultant_temperature.unwrap() - 27.7).abs() < 1e-12);
    }

    #[test]
    fn per_zone_monotonic() {
        let bad = TEXT.to_string() + "2024-02-01T00:15:00,top,28,,70,\n";
        assert!(matches!(
            parse_indoor(bad.as_bytes()),
            Err(Error::NonMonotonic { line: 6, .. })
        ));
    }
}
