use super::catalogue::RuleCatalogue;
use super::finding::{
    at_least, ceil6, rule_ids, Finding, Quantity, Remediation, RemediationItem, Requirement, Verdict,
};
use crate::building::{WaterHeaterKind, WaterHeaterSpec};

/// Domestic hot water. Solar systems are sized against the collector table,
/// storage ratio and productivity floor; electric and gas systems only need
/// certification.
pub fn check_water_heater(spec: Option<&WaterHeaterSpec>, dwelling_type: u32, catalogue: &RuleCatalogue) -> Finding {
    let rid = rule_ids::DHW;
    let Some(spec) = spec else {
        return Finding::new(
            rid,
            "water_heater",
            Verdict::Fail,
            "no domestic hot water system described",
        )
        .with_values(Quantity::new(0.0, "systems"), Requirement::at_least(1.0, "systems"))
        .with_remediation(Remediation {
            action: "install a certified solar, gas or electric storage water heater".into(),
            quantity: None,
            items: vec![],
        });
    };
    match spec.kind {
        WaterHeaterKind::Solar => check_solar(spec, dwelling_type, catalogue),
        WaterHeaterKind::Electric | WaterHeaterKind::Gas => {
            let kind = if spec.kind == WaterHeaterKind::Electric {
                "electric"
            } else {
                "gas"
            };
            let f = Finding::new(
                rid,
                "water_heater",
                if spec.certified { Verdict::Pass } else { Verdict::Fail },
                format!("{kind} water heater, certified: {}", spec.certified),
            )
            .with_values(
                Quantity::new(if spec.certified { 1.0 } else { 0.0 }, "certified"),
                Requirement::at_least(1.0, "certified"),
            );
            if spec.certified {
                f
            } else {
                f.with_remediation(Remediation {
                    action: format!("use a {kind} water heater carrying the approved manufacturing standard seal"),
                    quantity: None,
                    items: vec![],
                })
            }
        }
    }
}

fn check_solar(spec: &WaterHeaterSpec, dwelling_type: u32, cat: &RuleCatalogue) -> Finding {
    let rid = rule_ids::DHW;
    let required_area = cat.required_collector_area(dwelling_type).unwrap_or(f64::INFINITY);
    let bounds = cat.storage_l_per_m2;
    let storage_ratio = if spec.collector_area > 0.0 {
        spec.tank_volume / spec.collector_area
    } else {
        f64::INFINITY
    };

    // (measured, requirement, remediation item) for each failed criterion, in check order
    let mut failures: Vec<(Quantity, Requirement, RemediationItem, String)> = Vec::new();
    if !at_least(spec.collector_area, required_area) {
        failures.push((
            Quantity::new(spec.collector_area, "m2"),
            Requirement::at_least(required_area, "m2"),
            RemediationItem {
                subject: "collector".into(),
                quantity: "net collector area".into(),
                measured: spec.collector_area,
                required: required_area,
                unit: "m2".into(),
            },
            format!(
                "collector area {:.2} m2 below {:.2} m2 for F{dwelling_type}",
                spec.collector_area, required_area
            ),
        ));
    }
    if !(at_least(storage_ratio, bounds.min) && at_least(bounds.max, storage_ratio)) {
        let area = if spec.collector_area > 0.0 {
            spec.collector_area
        } else {
            required_area
        };
        let target = if storage_ratio < bounds.min {
            bounds.min
        } else {
            bounds.max
        } * area;
        failures.push((
            Quantity::new(if storage_ratio.is_finite() { storage_ratio } else { 0.0 }, "L/m2"),
            Requirement::between(bounds.min, bounds.max, "L/m2"),
            RemediationItem {
                subject: "tank".into(),
                quantity: "storage volume".into(),
                measured: spec.tank_volume,
                required: target,
                unit: "L".into(),
            },
            format!(
                "storage {:.0} L per m2 of collector outside [{}, {}]",
                storage_ratio, bounds.min, bounds.max
            ),
        ));
    }
    if !at_least(spec.annual_productivity, cat.min_annual_productivity_kwh_m2) {
        failures.push((
            Quantity::new(spec.annual_productivity, "kWh/m2.yr"),
            Requirement::at_least(cat.min_annual_productivity_kwh_m2, "kWh/m2.yr"),
            RemediationItem {
                subject: "collector".into(),
                quantity: "annual productivity".into(),
                measured: spec.annual_productivity,
                required: cat.min_annual_productivity_kwh_m2,
                unit: "kWh/m2.yr".into(),
            },
            format!(
                "conventional productivity {:.0} kWh/m2.yr below {:.0}",
                spec.annual_productivity, cat.min_annual_productivity_kwh_m2
            ),
        ));
    }
    if !spec.certified {
        failures.push((
            Quantity::new(0.0, "certified"),
            Requirement::at_least(1.0, "certified"),
            RemediationItem {
                subject: "system".into(),
                quantity: "technical certification".into(),
                measured: 0.0,
                required: 1.0,
                unit: "flag".into(),
            },
            "system lacks technical certification".into(),
        ));
    }

    let summary = format!(
        "solar water heater: {:.2} m2 collector (F{dwelling_type} requires {:.2}), {:.0} L tank ({:.0} L/m2), {:.0} kWh/m2.yr, certified: {}",
        spec.collector_area,
        required_area,
        spec.tank_volume,
        storage_ratio,
        spec.annual_productivity,
        spec.certified
    );
    if failures.is_empty() {
        return Finding::new(rid, "water_heater", Verdict::Pass, summary).with_values(
            Quantity::new(spec.collector_area, "m2"),
            Requirement::at_least(required_area, "m2"),
        );
    }
    let reasons: Vec<String> = failures.iter().map(|f| f.3.clone()).collect();
    let quantity = if spec.collector_area < required_area {
        Some(Quantity::new(ceil6(required_area - spec.collector_area), "m2"))
    } else {
        None
    };
    let (measured, required) = (failures[0].0.clone(), failures[0].1.clone());
    Finding::new(
        rid,
        "water_heater",
        Verdict::Fail,
        format!("{summary}; {}", reasons.join("; ")),
    )
    .with_values(measured, required)
    .with_remediation(Remediation {
        action: reasons.join("; "),
        quantity,
        items: failures.into_iter().map(|f| f.2).collect(),
    })
}

/// Qualitative requirements with no tabulated values.
pub fn water_heater_notes(spec: Option<&WaterHeaterSpec>) -> Option<Finding> {
    let kind = spec?.kind;
    let text = match kind {
        WaterHeaterKind::Electric => "electric storage heaters must meet a minimal capacity and a maximum cooling constant depending on the number of main rooms, and be servo-controlled for off-peak hours",
        WaterHeaterKind::Gas => "gas water heaters must be of a high-efficiency type",
        WaterHeaterKind::Solar => return None,
    };
    Some(Finding::new(
        rule_ids::DHW_NOTES,
        "water_heater",
        Verdict::Informational,
        text,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solar(area: f64, tank: f64, prod: f64) -> WaterHeaterSpec {
        WaterHeaterSpec {
            kind: WaterHeaterKind::Solar,
            collector_area: area,
            tank_volume: tank,
            annual_productivity: prod,
            certified: true,
        }
    }

    #[test]
    fn f4_sized_system_passes() {
        let f = check_water_heater(Some(&solar(2.5, 250.0, 750.0)), 4, &RuleCatalogue::bundled());
        assert_eq!(f.verdict, Verdict::Pass, "{}", f.message);
    }

    #[test]
    fn f3_small_collector_fails() {
        let f = check_water_heater(Some(&solar(1.5, 150.0, 750.0)), 3, &RuleCatalogue::bundled());
        assert_eq!(f.verdict, Verdict::Fail);
        assert_eq!(f.required.unwrap().min, Some(2.0));
        assert_eq!(f.remediation.unwrap().quantity.unwrap().value, 0.5);
    }

    #[test]
    fn oversized_tank_fails() {
        let f = check_water_heater(Some(&solar(2.5, 400.0, 750.0)), 4, &RuleCatalogue::bundled());
        assert_eq!(f.verdict, Verdict::Fail);
        assert_eq!(f.measured.unwrap().value, 160.0);
        assert_eq!(f.required.unwrap().max, Some(120.0));
    }

    #[test]
    fn low_productivity_and_uncertified_fail() {
        let f = check_water_heater(Some(&solar(2.5, 250.0, 650.0)), 4, &RuleCatalogue::bundled());
        assert_eq!(f.verdict, Verdict::Fail);
        let mut s = solar(2.5, 250.0, 750.0);
        s.certified = false;
        assert_eq!(
            check_water_heater(Some(&s), 4, &RuleCatalogue::bundled()).verdict,
            Verdict::Fail
        );
    }

    #[test]
    fn electric_needs_certification_only() {
        let mut s = WaterHeaterSpec {
            kind: WaterHeaterKind::Electric,
            collector_area: 0.0,
            tank_volume: 150.0,
            annual_productivity: 0.0,
            certified: true,
        };
        let cat = RuleCatalogue::bundled();
        assert_eq!(check_water_heater(Some(&s), 3, &cat).verdict, Verdict::Pass);
        s.certified = false;
        assert_eq!(check_water_heater(Some(&s), 3, &cat).verdict, Verdict::Fail);
        assert_eq!(water_heater_notes(Some(&s)).unwrap().verdict, Verdict::Informational);
    }

    #[test]
    fn missing_system_fails() {
        assert_eq!(
            check_water_heater(None, 3, &RuleCatalogue::bundled()).verdict,
            Verdict::Fail
        );
    }
}
