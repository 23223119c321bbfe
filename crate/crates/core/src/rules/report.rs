use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::envelope::{check_insulation_material, check_roof, check_wall, check_window};
use super::finding::{rule_ids, Finding, Verdict};
use super::hot_water::{check_water_heater, water_heater_notes};
use super::ventilation::check_ventilation;
use super::{RuleCatalogue, SiRule};
use crate::building::{validate, BuildingDescription};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReportOptions {
    pub si_rule: SiRule,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub informational: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplianceReport {
    pub building: String,
    pub catalogue_version: String,
    pub catalogue_sha256: String,
    pub si_rule: SiRule,
    pub overall: Verdict,
    pub counts: VerdictCounts,
    pub findings: Vec<Finding>,
}

impl ComplianceReport {
    pub fn passed(&self) -> bool {
        self.overall == Verdict::Pass
    }

    pub fn failures(&self) -> impl Iterator<Item = &Finding> {
        self.findings.iter().filter(|f| f.is_fail())
    }

    pub fn find(&self, rule_id: &str, subject: &str) -> Option<&Finding> {
        self.findings
            .iter()
            .find(|f| f.rule_id == rule_id && f.subject == subject)
    }

    /// Pretty JSON with stable field order and a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "Compliance report: {}", self.building);
        let _ = writeln!(
            out,
            "Catalogue {} (sha256 {}), Si rule: {}",
            self.catalogue_version,
            &self.catalogue_sha256[..self.catalogue_sha256.len().min(12)],
            self.si_rule.as_str()
        );
        let _ = writeln!(out);
        for f in &self.findings {
            let _ = writeln!(
                out,
                "[{:<4}] {:<16} {:<24} {}",
                f.verdict.as_str(),
                f.rule_id,
                f.subject,
                f.message
            );
            if let (Some(m), Some(r)) = (&f.measured, &f.required) {
                let req = match (r.min, r.max) {
                    (Some(lo), Some(hi)) => format!("{lo} to {hi}"),
                    (Some(lo), None) => format!(">= {lo}"),
                    (None, Some(hi)) => format!("<= {hi}"),
                    (None, None) => "-".into(),
                };
                if f.verdict == Verdict::Fail {
                    let _ = writeln!(
                        out,
                        "       measured {} {}, required {} {}",
                        m.value, m.unit, req, r.unit
                    );
                }
            }
            if let Some(rem) = &f.remediation {
                let _ = writeln!(out, "       fix: {}", rem.action);
            }
        }
        let _ = writeln!(out);
        let c = &self.counts;
        let _ = writeln!(
            out,
            "Overall: {}  ({} pass, {} fail, {} n/a, {} info)",
            self.overall.as_str(),
            c.pass,
            c.fail,
            c.not_applicable,
            c.informational
        );
        out
    }
}

/// Validate the building, run every check and aggregate the findings.
///
/// Findings are ordered by rule id, then subject.
pub fn compliance_report(
    building: &BuildingDescription,
    catalogue: &RuleCatalogue,
    options: ReportOptions,
) -> Result<ComplianceReport> {
    let errors = validate(building);
    if !errors.is_empty() {
        return Err(Error::Validation(errors));
    }

    let mut findings = Vec::new();
    if let Some(roof) = &building.roof {
        findings.push(check_roof(roof, catalogue));
        findings.extend(check_insulation_material(
            rule_ids::ROOF_MATERIAL,
            "roof",
            &roof.insulation,
        ));
    }
    for wall in &building.walls {
        findings.push(check_wall(wall, catalogue));
        findings.extend(check_insulation_material(
            rule_ids::WALL_MATERIAL,
            &wall.id,
            &wall.insulation,
        ));
    }
    for window in &building.windows {
        findings.push(check_window(window, catalogue));
    }
    findings.extend(check_ventilation(building, catalogue, options.si_rule));
    findings.push(check_water_heater(
        building.water_heater.as_ref(),
        building.dwelling_type,
        catalogue,
    ));
    findings.extend(water_heater_notes(building.water_heater.as_ref()));

    let note = building.vegetation_note.trim();
    findings.push(Finding::new(
        rule_ids::SITE_VEGETATION,
        "site",
        Verdict::Informational,
        if note.is_empty() {
            "no vegetation note given; plant vegetation around the building to limit reflected radiation and heated ground surfaces".to_string()
        } else {
            format!("site vegetation: {note}")
        },
    ));

    findings.sort_by(|a, b| (&a.rule_id, &a.subject).cmp(&(&b.rule_id, &b.subject)));

    let mut counts = VerdictCounts::default();
    for f in &findings {
        match f.verdict {
            Verdict::Pass => counts.pass += 1,
            Verdict::Fail => counts.fail += 1,
            Verdict::NotApplicable => counts.not_applicable += 1,
            Verdict::Informational => counts.informational += 1,
        }
    }
    let overall = if counts.fail == 0 { Verdict::Pass } else { Verdict::Fail };
    Ok(ComplianceReport {
        building: building.name.clone(),
        catalogue_version: catalogue.version.clone(),
        catalogue_sha256: catalogue.sha256.clone(),
        si_rule: options.si_rule,
        overall,
        counts,
        findings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::building::porosity::tests::two_room_building;

    #[test]
    fn overall_matches_findings() {
        let b = two_room_building(2.0, 1.0, 8.0, 8.0);
        let r = compliance_report(&b, &RuleCatalogue::bundled(), ReportOptions::default()).unwrap();
        assert_eq!(r.overall, Verdict::Fail);
        assert_eq!(r.counts.fail, r.failures().count());
        assert!(r
            .findings
            .windows(2)
            .all(|w| (&w[0].rule_id, &w[0].subject) <= (&w[1].rule_id, &w[1].subject)));
    }

    #[test]
    fn empty_building_is_rejected() {
        let mut b = two_room_building(2.0, 2.0, 8.0, 8.0);
        b.rooms.clear();
        b.facade_pairs.clear();
        assert!(matches!(
            compliance_report(&b, &RuleCatalogue::bundled(), ReportOptions::default()),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn json_is_deterministic() {
        let b = two_room_building(2.0, 1.0, 8.0, 8.0);
        let cat = RuleCatalogue::bundled();
        let a = compliance_report(&b, &cat, ReportOptions::default()).unwrap().to_json();
        let c = compliance_report(&b, &cat, ReportOptions::default()).unwrap().to_json();
        assert_eq!(a, c);
        let back: ComplianceReport = serde_json::from_str(&a).unwrap();
        assert_eq!(
            back.findings.len(),
            serde_json::from_str::<ComplianceReport>(&c).unwrap().findings.len()
        );
    }
}
