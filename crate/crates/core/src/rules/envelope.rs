//! Solar protection of the roof, walls and windows.

use super::catalogue::{NotTabulated, RuleCatalogue};
use super::finding::{
    at_least, ceil6, rule_ids, Finding, Quantity, Remediation, RemediationItem, Requirement, Verdict,
};
use crate::building::{ColorClass, InsulationLayer, RoofSpec, WallSpec, WindowSpec};

/// Roof insulation: installed resistance against the tabulated requirement.
pub fn check_roof(roof: &RoofSpec, catalogue: &RuleCatalogue) -> Finding {
    let ins = &roof.insulation;
    let r_req = catalogue.required_roof_resistance(roof.color, ins, roof.attic);
    let r_inst = ins.resistance();
    // required thickness expressed at the installed material's conductivity
    let required_cm = r_req * ins.conductivity * 100.0;
    let subject = "roof";
    let context = format!(
        "{} roof, {} attic regime, {} {:.1} cm (lambda {} W/m.K, R {:.2} m2.K/W); required R {:.2}",
        roof.color.as_str(),
        attic_label(roof),
        ins.material_name,
        ins.thickness,
        ins.conductivity,
        r_inst,
        r_req
    );
    let measured = Quantity::new(ins.thickness, "cm");
    let required = Requirement::at_least(required_cm, "cm");
    if at_least(r_inst, r_req) {
        Finding::new(rule_ids::ROOF_INSULATION, subject, Verdict::Pass, context).with_values(measured, required)
    } else {
        let missing = ceil6(required_cm - ins.thickness);
        Finding::new(rule_ids::ROOF_INSULATION, subject, Verdict::Fail, context)
            .with_values(measured, required)
            .with_remediation(Remediation {
                action: format!(
                    "increase roof insulation to {:.2} cm of {} (add {:.2} cm), or an equivalent resistance of {:.2} m2.K/W",
                    required_cm, ins.material_name, missing, r_req
                ),
                quantity: Some(Quantity::new(missing, "cm")),
                items: vec![],
            })
    }
}

fn attic_label(roof: &RoofSpec) -> &'static str {
    use crate::building::AtticRegime::*;
    match roof.attic {
        None => "no",
        ClosedOrBarelyVentilated => "closed",
        WellVentilated => "well-ventilated",
    }
}

/// Warning for moisture-sensitive insulation without a humidity-protection attestation.
pub fn check_insulation_material(rule_id: &str, subject: &str, layer: &InsulationLayer) -> Option<Finding> {
    if layer.thickness > 0.0 && layer.is_mineral_wool() && !layer.humidity_protected {
        Some(
            Finding::new(
                rule_id,
                subject,
                Verdict::Informational,
                format!(
                    "{} loses its thermal properties when it absorbs ambient humidity; no humidity-protection attestation given",
                    layer.material_name
                ),
            )
            .with_remediation(Remediation {
                action: "use polystyrene or polyurethane, or attest humidity protection".into(),
                quantity: None,
                items: vec![],
            }),
        )
    } else {
        None
    }
}

/// Wall solar protection: full shading, or overhang ratio, or insulation.
pub fn check_wall(wall: &WallSpec, catalogue: &RuleCatalogue) -> Finding {
    let rid = rule_ids::WALL_SOLAR;
    let subject = wall.id.as_str();
    if wall.full_shading {
        return Finding::new(
            rid,
            subject,
            Verdict::Pass,
            "shading system covers the entire wall; no sizing required for any orientation",
        );
    }
    let ratio_req = catalogue.required_overhang_ratio(wall.construction, wall.color, wall.orientation);
    let ins_req = catalogue.required_wall_insulation(wall.construction, wall.color, wall.orientation);
    let (ratio_req, ins_req_cm) = match (ratio_req, ins_req) {
        (Ok(r), Ok(i)) => (r, i),
        (Err(NotTabulated::DarkColor), _) | (_, Err(NotTabulated::DarkColor)) => {
            return Finding::new(
                rid,
                subject,
                Verdict::Fail,
                format!(
                    "dark {} wall facing {}: no prescription exists for dark walls",
                    wall.construction.as_str(),
                    wall.orientation
                ),
            )
            .with_values(
                Quantity::new(ColorClass::Dark.absorptivity(), "absorptivity"),
                Requirement::at_most(ColorClass::Medium.absorptivity(), "absorptivity"),
            )
            .with_remediation(Remediation {
                action:
                    "repaint light or medium, or use full shading (vertical shading system or ventilated double skin)"
                        .into(),
                quantity: None,
                items: vec![],
            });
        }
        (Err(e), _) | (_, Err(e)) => {
            return Finding::new(
                rid,
                subject,
                Verdict::NotApplicable,
                format!("no catalogue entry: {e:?}"),
            );
        }
    };

    let ratio = if wall.overhang_depth > 0.0 {
        wall.overhang_depth / wall.overhang_height
    } else {
        0.0
    };
    let lambda_ref = catalogue.reference_conductivity.polystyrene;
    let r_req = ins_req_cm / 100.0 / lambda_ref;
    let r_inst = wall.insulation.resistance();
    let context = format!(
        "{} {} wall facing {}: d/h {:.3} (required {}), insulation R {:.2} (required {:.2} = {} cm at lambda {})",
        wall.color.as_str(),
        wall.construction.as_str(),
        wall.orientation,
        ratio,
        ratio_req,
        r_inst,
        r_req,
        ins_req_cm,
        lambda_ref
    );
    let measured = Quantity::new(ratio, "d/h");
    let required = Requirement::at_least(ratio_req, "d/h");
    if at_least(ratio, ratio_req) || at_least(r_inst, r_req) {
        return Finding::new(rid, subject, Verdict::Pass, context).with_values(measured, required);
    }

    let lambda = wall.insulation.conductivity;
    let ins_cm_needed = r_req * lambda * 100.0;
    let missing_cm = ceil6(ins_cm_needed - wall.insulation.thickness);
    let mut items = vec![RemediationItem {
        subject: subject.into(),
        quantity: "insulation thickness".into(),
        measured: wall.insulation.thickness,
        required: ins_cm_needed,
        unit: "cm".into(),
    }];
    let (action, quantity) = if wall.overhang_height > 0.0 {
        let d_min = ceil6(ratio_req * wall.overhang_height);
        items.insert(
            0,
            RemediationItem {
                subject: subject.into(),
                quantity: "overhang depth".into(),
                measured: wall.overhang_depth,
                required: d_min,
                unit: "m".into(),
            },
        );
        (
            format!(
                "extend the overhang to d >= {:.2} m ({} x h = {:.2} m), or add {:.2} cm insulation (lambda {})",
                d_min, ratio_req, wall.overhang_height, missing_cm, lambda
            ),
            Quantity::new(d_min, "m"),
        )
    } else {
        (
            format!(
                "add {:.2} cm insulation (lambda {}), or fit an overhang with d >= {} x h",
                missing_cm, lambda, ratio_req
            ),
            Quantity::new(missing_cm, "cm"),
        )
    };
    Finding::new(rid, subject, Verdict::Fail, context)
        .with_values(measured, required)
        .with_remediation(Remediation {
            action,
            quantity: Some(quantity),
            items,
        })
}

/// Window shading: mobile opaque shading, or overhang ratio for the shading case.
pub fn check_window(window: &WindowSpec, catalogue: &RuleCatalogue) -> Finding {
    let rid = rule_ids::WINDOW_SHADING;
    let subject = window.id.as_str();
    if window.mobile_shading {
        return Finding::new(
            rid,
            subject,
            Verdict::Pass,
            "protected by mobile opaque louvers or blinds",
        );
    }
    let req = catalogue.required_window_ratio(window.orientation);
    let ratio = window.shading_ratio();
    let denom = window.ratio_denominator();
    let label = match window.shading_case {
        crate::building::ShadingCase::Case1 => "d/(2a+h)",
        crate::building::ShadingCase::Case2 => "d/h",
    };
    let context = format!(
        "window facing {}: {} = {:.3} (required {})",
        window.orientation, label, ratio, req
    );
    let measured = Quantity::new(ratio, label);
    let required = Requirement::at_least(req, label);
    if at_least(ratio, req) {
        return Finding::new(rid, subject, Verdict::Pass, context).with_values(measured, required);
    }
    let d_min = ceil6(req * denom);
    Finding::new(rid, subject, Verdict::Fail, context)
        .with_values(measured, required)
        .with_remediation(Remediation {
            action: format!(
                "fit an overhang with d >= {:.2} m ({} x {:.2} m), or mobile opaque louvers",
                d_min, req, denom
            ),
            quantity: Some(Quantity::new(d_min, "m")),
            items: vec![RemediationItem {
                subject: subject.into(),
                quantity: "overhang depth".into(),
                measured: window.overhang_depth,
                required: d_min,
                unit: "m".into(),
            }],
        })
}
