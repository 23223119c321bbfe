use std::path::Path;

use serde::{Deserialize, Serialize};

use super::psychro::PsychroPoint;
use crate::error::{Error, Result};

const EPS: f64 = 1e-9;

/// Widening of the warm side of the zone with air movement.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AirSpeedExtension {
    /// °C gained per m/s of air speed.
    pub per_m_s: f64,
    /// Upper temperature the extension may reach, °C.
    pub cap_c: f64,
}

/// Polygon in (temperature °C, humidity ratio g/kg) space.
///
/// JSON override format:
///
/// ```json
/// { "vertices": [[22, 4], [29, 4], [29, 17], [22, 17]],
///   "air_speed_extension": { "per_m_s": 2.0, "cap_c": 32.0 } }
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComfortZone {
    pub vertices: Vec<[f64; 2]>,
    #[serde(default)]
    pub air_speed_extension: Option<AirSpeedExtension>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Inside,
    Outside,
}

impl Default for ComfortZone {
    /// Warm-humid zone: 22–29 °C between 4 and 17 g/kg, warm edge moved by
    /// 2 °C per m/s of air speed up to 32 °C.
    fn default() -> Self {
        ComfortZone {
            vertices: vec![[22.0, 4.0], [29.0, 4.0], [29.0, 17.0], [22.0, 17.0]],
            air_speed_extension: Some(AirSpeedExtension {
                per_m_s: 2.0,
                cap_c: 32.0,
            }),
        }
    }
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn on_segment(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    let scale = 1.0 + (b[0] - a[0]).abs() + (b[1] - a[1]).abs();
    cross(a, b, p).abs() <= EPS * scale * scale
        && p[0] >= a[0].min(b[0]) - EPS
        && p[0] <= a[0].max(b[0]) + EPS
        && p[1] >= a[1].min(b[1]) - EPS
        && p[1] <= a[1].max(b[1]) + EPS
}

fn segments_intersect(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let (d1, d2) = (cross(c, d, a), cross(c, d, b));
    let (d3, d4) = (cross(a, b, c), cross(a, b, d));
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0)) {
        return true;
    }
    on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b)
}

impl ComfortZone {
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let zone: ComfortZone = serde_json::from_str(&text).map_err(|source| Error::Json {
            path: path.to_path_buf(),
            source,
        })?;
        zone.validated()
    }

    /// Drop a repeated closing vertex and check that the polygon is simple.
    pub fn validated(mut self) -> Result<Self> {
        if self.vertices.len() > 1 && self.vertices.first() == self.vertices.last() {
            self.vertices.pop();
        }
        let v = &self.vertices;
        let n = v.len();
        if n < 3 {
            return Err(Error::invalid("comfort zone needs at least 3 vertices"));
        }
        if v.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::invalid("comfort zone vertices must be finite"));
        }
        if self.area().abs() < EPS {
            return Err(Error::invalid("comfort zone has zero area"));
        }
        for i in 0..n {
            for j in i + 1..n {
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent {
                    continue;
                }
                if segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n]) {
                    return Err(Error::invalid(format!(
                        "comfort zone edges {i} and {j} intersect; polygon must be simple"
                    )));
                }
            }
        }
        if let Some(ext) = self.air_speed_extension {
            if !(ext.per_m_s >= 0.0) || !ext.cap_c.is_finite() {
                return Err(Error::invalid(
                    "air-speed extension must have per_m_s >= 0 and a finite cap",
                ));
            }
        }
        Ok(self)
    }

    /// Signed shoelace area.
    pub fn area(&self) -> f64 {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let (a, b) = (v[i], v[(i + 1) % v.len()]);
                a[0] * b[1] - b[0] * a[1]
            })
            .sum::<f64>()
            / 2.0
    }

    pub fn max_temperature(&self) -> f64 {
        self.vertices.iter().map(|v| v[0]).fold(f64::MIN, f64::max)
    }

    pub fn centroid(&self) -> [f64; 2] {
        let v = &self.vertices;
        let a = self.area();
        let (mut cx, mut cy) = (0.0, 0.0);
        for i in 0..v.len() {
            let (p, q) = (v[i], v[(i + 1) % v.len()]);
            let c = p[0] * q[1] - q[0] * p[1];
            cx += (p[0] + q[0]) * c;
            cy += (p[1] + q[1]) * c;
        }
        [cx / (6.0 * a), cy / (6.0 * a)]
    }

    /// The zone for a given air speed: vertices on the warm edge move toward
    /// higher temperature, never past the cap (and never backwards).
    pub fn at_air_speed(&self, air_speed: f64) -> ComfortZone {
        let Some(ext) = self.air_speed_extension else {
            return self.clone();
        };
        let t_max = self.max_temperature();
        let shift = (ext.per_m_s * air_speed.max(0.0)).min((ext.cap_c - t_max).max(0.0));
        let vertices = self
            .vertices
            .iter()
            .map(|&[t, w]| {
                if (t - t_max).abs() <= EPS {
                    [t + shift, w]
                } else {
                    [t, w]
                }
            })
            .collect();
        ComfortZone {
            vertices,
            air_speed_extension: None,
        }
    }

    /// Boundary-inclusive point-in-polygon test.
    pub fn contains(&self, t: f64, w: f64) -> bool {
        let v = &self.vertices;
        let n = v.len();
        let p = [t, w];
        if (0..n).any(|i| on_segment(p, v[i], v[(i + 1) % n])) {
            return true;
        }
        let mut inside = false;
        for i in 0..n {
            let (a, b) = (v[i], v[(i + 1) % n]);
            if (a[1] > w) != (b[1] > w) {
                let x = a[0] + (w - a[1]) * (b[0] - a[0]) / (b[1] - a[1]);
                if t < x {
                    inside = !inside;
                }
            }
        }
        inside
    }
}

pub fn classify(point: &PsychroPoint, zone: &ComfortZone) -> Classification {
    if zone
        .at_air_speed(point.air_speed)
        .contains(point.temperature, point.humidity_ratio)
    {
        Classification::Inside
    } else {
        Classification::Outside
    }
}
