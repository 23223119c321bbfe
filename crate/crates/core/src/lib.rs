//! Passive-cooling design checks for dwellings in humid tropical climates.
//!
//! The crate is organised around five areas:
//!
//! - [`building`]: the dwelling description and the geometric quantities derived
//!   from it (facade porosities, cardinal orientations).
//! - [`rules`]: a data-driven catalogue of the prescriptive tables (roof, overhang,
//!   wall insulation, window shading, solar hot water, ventilation porosity) and
//!   the checks that turn a building into a [`rules::ComplianceReport`].
//! - [`thermal`]: a single-zone lumped-capacitance model with sol-air envelope
//!   loads, overhang shading and wind-driven cross ventilation.
//! - [`comfort`]: psychrometrics and comfort-zone statistics over indoor series.
//! - [`io`]: CSV/JSON ingestion, validation, resampling and synthetic weather.
//!
//! The [`cli`] module hosts the command-line front end used by the `ecodom` binary.

pub mod building;
pub mod cli;
pub mod comfort;
pub mod error;
pub mod io;
pub mod rules;
pub mod thermal;

pub use error::{Error, Result};

/// Directory holding the bundled building fixtures and reference data.
pub const FIXTURE_DIR: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures");
