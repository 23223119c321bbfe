use std::fmt::Write as _;

use super::psychro::PsychroPoint;
use super::zone::{classify, Classification, ComfortZone};

/// Column order of [`psychro_scatter_export`].
pub const SCATTER_COLUMNS: [&str; 7] = [
    "kind",
    "index",
    "temperature_c",
    "humidity_ratio_g_kg",
    "relative_humidity_pct",
    "air_speed_m_s",
    "inside",
];

/// Plot data: one `point` row per sample, then one `zone` row per polygon vertex
/// (still-air zone, in vertex order). Numbers carry 4 decimals; `inside` is 1/0
/// for points and empty for zone rows.
pub fn psychro_scatter_export(points: &[PsychroPoint], zone: &ComfortZone) -> String {
    let mut out = SCATTER_COLUMNS.join(",");
    out.push('\n');
    for (i, p) in points.iter().enumerate() {
        let inside = u8::from(classify(p, zone) == Classification::Inside);
        let _ = writeln!(
            out,
            "point,{i},{:.4},{:.4},{:.4},{:.4},{inside}",
            p.temperature, p.humidity_ratio, p.relative_humidity, p.air_speed
        );
    }
    for (i, [t, w]) in zone.vertices.iter().enumerate() {
        let _ = writeln!(out, "zone,{i},{t:.4},{w:.4},,,");
    }
    out
}
