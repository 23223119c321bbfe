//! Psychrometrics and comfort-zone statistics.
//!
//! The default comfort zone is a warm-humid polygon of our own choosing (see
//! [`ComfortZone::default`]); discomfort fractions depend entirely on it, so it
//! can be replaced by a JSON file.

mod export;
mod psychro;
mod stats;
mod zone;

pub use export::{psychro_scatter_export, SCATTER_COLUMNS};
pub use psychro::{humidity_ratio, relative_humidity, saturation_vapor_pressure, PsychroPoint, STANDARD_PRESSURE};
pub use stats::{
    discomfort_fraction, discomfort_stats, indoor_temperatures, paired_offset, points_from_indoor,
    points_from_simulation, resultant_series, ComfortStats, OffsetStats,
};
pub use zone::{classify, AirSpeedExtension, Classification, ComfortZone};
