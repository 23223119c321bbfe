//! Prescriptive rule catalogue and compliance evaluation.

mod catalogue;
mod envelope;
mod finding;
mod hot_water;
mod report;
mod ventilation;

use serde::{Deserialize, Serialize};

pub use catalogue::{
    Bounds, ByColor, ByOrientation, CollectorRow, NotTabulated, ReferenceConductivity, ReferenceMaterial, RoofCell,
    RoofTable, RuleCatalogue, WallRow, BUNDLED_CATALOGUE, BUNDLED_CATALOGUE_SHA256,
};
pub use envelope::{check_insulation_material, check_roof, check_wall, check_window};
pub use finding::{rule_ids, Finding, Quantity, Remediation, RemediationItem, Requirement, Verdict};
pub use hot_water::{check_water_heater, water_heater_notes};
pub use report::{compliance_report, ComplianceReport, ReportOptions, VerdictCounts};
pub use ventilation::check_ventilation;

/// How "Si >= So1 or So2" is read: against the smaller or the larger external area.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum SiRule {
    #[default]
    Min,
    Max,
}

impl SiRule {
    pub fn as_str(self) -> &'static str {
        match self {
            SiRule::Min => "min",
            SiRule::Max => "max",
        }
    }
}
