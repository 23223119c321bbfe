//! Simplified single-zone thermal and airflow model.
//!
//! One capacitance node (air plus fabric) exchanges heat with every envelope
//! surface through sol-air conduction, receives transmitted solar through
//! windows, internal gains and wind-driven ventilation. Integration uses
//! implicit Euler steps, so any step length is stable.

mod airflow;
mod loads;
mod scenario;
mod shading;
mod simulate;
mod solar;
mod zone;

pub use airflow::{ventilation_ach, VentilationApertures};
pub use loads::{plane_irradiance, sol_air_temperature, PlaneIrradiance};
pub use scenario::Scenario;
pub use shading::{overhang_shading_fraction, OverhangGeometry};
pub use simulate::{
    gain_breakdown, simulate, simulate_with, GainBreakdown, SimulationOptions, SimulationResult, SurfaceGains,
    RESULT_COLUMNS,
};
pub use solar::{solar_position, solar_position_local, SolarPosition};
pub use zone::{
    OpeningState, RoofExposure, SurfaceKind, SurfaceModel, SurfaceShading, ZoneModel, ZoneOptions, AIR_HEAT_CAPACITY,
};
