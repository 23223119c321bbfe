use serde::{Deserialize, Serialize};

/// Tolerance for `>=` comparisons against tabulated thresholds.
pub(crate) const EPS: f64 = 1e-9;

pub(crate) fn at_least(measured: f64, required: f64) -> bool {
    measured >= required - EPS
}

/// Round to six decimals for reporting.
pub(crate) fn round6(v: f64) -> f64 {
    (v * 1e6).round() / 1e6
}

/// Round a missing quantity up to six decimals so that adding it always satisfies the rule.
pub(crate) fn ceil6(v: f64) -> f64 {
    ((v - EPS) * 1e6).ceil().max(0.0) / 1e6
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Informational,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
            Verdict::Informational => "INFO",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Quantity {
    pub value: f64,
    pub unit: String,
}

impl Quantity {
    pub fn new(value: f64, unit: &str) -> Self {
        Quantity {
            value: round6(value),
            unit: unit.to_string(),
        }
    }
}

/// Acceptable range for a measured quantity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Requirement {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    pub unit: String,
}

impl Requirement {
    pub fn at_least(v: f64, unit: &str) -> Self {
        Requirement {
            min: Some(round6(v)),
            max: None,
            unit: unit.into(),
        }
    }

    pub fn at_most(v: f64, unit: &str) -> Self {
        Requirement {
            min: None,
            max: Some(round6(v)),
            unit: unit.into(),
        }
    }

    pub fn between(lo: f64, hi: f64, unit: &str) -> Self {
        Requirement {
            min: Some(round6(lo)),
            max: Some(round6(hi)),
            unit: unit.into(),
        }
    }
}

/// A per-subject breakdown line of a remediation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RemediationItem {
    pub subject: String,
    pub quantity: String,
    pub measured: f64,
    pub required: f64,
    pub unit: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Remediation {
    pub action: String,
    /// The main derivable quantity (e.g. missing area, minimal depth).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quantity: Option<Quantity>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<RemediationItem>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub rule_id: String,
    pub subject: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measured: Option<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub required: Option<Requirement>,
    pub message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub remediation: Option<Remediation>,
}

impl Finding {
    pub(crate) fn new(rule_id: &str, subject: impl Into<String>, verdict: Verdict, message: impl Into<String>) -> Self {
        Finding {
            rule_id: rule_id.into(),
            subject: subject.into(),
            verdict,
            measured: None,
            required: None,
            message: message.into(),
            remediation: None,
        }
    }

    pub(crate) fn with_values(mut self, measured: Quantity, required: Requirement) -> Self {
        self.measured = Some(measured);
        self.required = Some(required);
        self
    }

    pub(crate) fn with_remediation(mut self, r: Remediation) -> Self {
        self.remediation = Some(r);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }
}

pub mod rule_ids {
    pub const ROOF_INSULATION: &str = "ROOF-INSULATION";
    pub const ROOF_MATERIAL: &str = "ROOF-MATERIAL";
    pub const WALL_SOLAR: &str = "WALL-SOLAR";
    pub const WALL_MATERIAL: &str = "WALL-MATERIAL";
    pub const WINDOW_SHADING: &str = "WINDOW-SHADING";
    pub const VENT_PAIRS: &str = "VENT-PAIRS";
    pub const VENT_POROSITY: &str = "VENT-POROSITY";
    pub const VENT_INTERNAL: &str = "VENT-INTERNAL";
    pub const VENT_LAYOUT: &str = "VENT-LAYOUT";
    pub const DHW: &str = "DHW";
    pub const DHW_NOTES: &str = "DHW-NOTES";
    pub const SITE_VEGETATION: &str = "SITE-VEGETATION";
}
