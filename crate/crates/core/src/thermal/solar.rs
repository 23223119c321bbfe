use chrono::{DateTime, Duration, NaiveDateTime, Utc};
use serde::{Deserialize, Serialize};

/// Apparent sun direction. Altitude is geometric (no refraction).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolarPosition {
    /// Degrees above the horizon, [-90, 90].
    pub altitude: f64,
    /// Degrees clockwise from North, [0, 360).
    pub azimuth: f64,
}

impl SolarPosition {
    pub fn is_up(&self) -> bool {
        self.altitude > 0.0
    }

    /// Cosine of the angle between the sun and the normal of a surface.
    pub fn incidence_cosine(&self, surface_azimuth: f64, tilt: f64) -> f64 {
        let alt = self.altitude.to_radians();
        let tilt = tilt.to_radians();
        alt.cos() * tilt.sin() * (self.azimuth - surface_azimuth).to_radians().cos() + alt.sin() * tilt.cos()
    }
}

/// Sun position from the NOAA low-precision ephemeris.
///
/// Good to a few hundredths of a degree between 1950 and 2050, well below the
/// 0.5° needed for shading geometry.
pub fn solar_position(latitude: f64, longitude: f64, instant: DateTime<Utc>) -> SolarPosition {
    let secs = instant.timestamp() as f64 + instant.timestamp_subsec_nanos() as f64 * 1e-9;
    let jd = secs / 86_400.0 + 2_440_587.5;
    let t = (jd - 2_451_545.0) / 36_525.0;

    let l0 = (280.46646 + t * (36_000.76983 + 0.0003032 * t)).rem_euclid(360.0);
    let m = 357.52911 + t * (35_999.05029 - 0.0001537 * t);
    let e = 0.016708634 - t * (0.000042037 + 0.0000001267 * t);
    let mr = m.to_radians();
    let c = mr.sin() * (1.914602 - t * (0.004817 + 0.000014 * t))
        + (2.0 * mr).sin() * (0.019993 - 0.000101 * t)
        + (3.0 * mr).sin() * 0.000289;
    let omega = (125.04 - 1934.136 * t).to_radians();
    let lambda = (l0 + c - 0.00569 - 0.00478 * omega.sin()).to_radians();
    let eps0 = 23.0 + (26.0 + (21.448 - t * (46.815 + t * (0.00059 - t * 0.001813))) / 60.0) / 60.0;
    let eps = (eps0 + 0.00256 * omega.cos()).to_radians();
    let decl = (eps.sin() * lambda.sin()).asin();

    let y = (eps / 2.0).tan().powi(2);
    let l0r = l0.to_radians();
    let eot_min = 4.0
        * (y * (2.0 * l0r).sin() - 2.0 * e * mr.sin() + 4.0 * e * y * mr.sin() * (2.0 * l0r).cos()
            - 0.5 * y * y * (4.0 * l0r).sin()
            - 1.25 * e * e * (2.0 * mr).sin())
        .to_degrees();

    let minutes_utc = secs.rem_euclid(86_400.0) / 60.0;
    let true_solar = (minutes_utc + eot_min + 4.0 * longitude).rem_euclid(1440.0);
    let hour_angle = (true_solar / 4.0 - 180.0).to_radians();

    let lat = latitude.to_radians();
    let cos_zen = (lat.sin() * decl.sin() + lat.cos() * decl.cos() * hour_angle.cos()).clamp(-1.0, 1.0);
    let altitude = 90.0 - cos_zen.acos().to_degrees();
    let azimuth = (hour_angle.sin())
        .atan2(hour_angle.cos() * lat.sin() - decl.tan() * lat.cos())
        .to_degrees()
        + 180.0;
    SolarPosition {
        altitude,
        azimuth: azimuth.rem_euclid(360.0),
    }
}

/// Sun position for a local standard-time timestamp.
pub fn solar_position_local(
    latitude: f64,
    longitude: f64,
    local: NaiveDateTime,
    utc_offset_hours: f64,
) -> SolarPosition {
    let utc = local - Duration::milliseconds((utc_offset_hours * 3_600_000.0).round() as i64);
    solar_position(latitude, longitude, utc.and_utc())
}

#[cfg(test)]
mod tests {
    use super::*;
    use chrono::{NaiveDate, TimeZone};

    fn at(y: i32, mo: u32, d: u32, h: u32, mi: u32) -> DateTime<Utc> {
        Utc.from_utc_datetime(
            &NaiveDate::from_ymd_opt(y, mo, d)
                .unwrap()
                .and_hms_opt(h, mi, 0)
                .unwrap(),
        )
    }

    #[test]
    fn equator_equinox_noon_is_overhead() {
        // 2024-03-20 equinox; solar noon at Greenwich ≈ 12:07 UTC.
        let p = solar_position(0.0, 0.0, at(2024, 3, 20, 12, 7));
        assert!(p.altitude > 89.0, "{p:?}");
    }

    #[test]
    fn reunion_december_noon_sun_is_south() {
        // Solar noon at 55.5°E is about 08:18 UTC in late December.
        let p = solar_position(-21.1, 55.5, at(2024, 12, 21, 8, 18));
        assert!(p.altitude > 85.0);
        assert!((p.azimuth - 180.0).abs() < 30.0 || p.altitude > 89.5, "{p:?}");
        let p = solar_position(-21.1, 55.5, at(2024, 12, 21, 6, 0));
        assert!(p.azimuth > 90.0 && p.azimuth < 180.0, "{p:?}");
    }

    #[test]
    fn midnight_is_below_horizon() {
        let p = solar_position(-21.1, 55.5, at(2024, 1, 15, 20, 0));
        assert!(p.altitude < 0.0);
    }

    #[test]
    fn local_time_shift() {
        let local = NaiveDate::from_ymd_opt(2024, 1, 15)
            .unwrap()
            .and_hms_opt(12, 0, 0)
            .unwrap();
        let a = solar_position_local(-21.0, 55.5, local, 4.0);
        let b = solar_position(-21.0, 55.5, at(2024, 1, 15, 8, 0));
        assert_eq!(a, b);
    }
}
