//! Cross-ventilation porosity and layout rules.

use super::catalogue::RuleCatalogue;
use super::finding::{
    at_least, ceil6, rule_ids, Finding, Quantity, Remediation, RemediationItem, Requirement, Verdict,
};
use super::SiRule;
use crate::building::porosity::{pair_porosity, pair_rooms};
use crate::building::{BuildingDescription, FacadePair, PairPorosity};

pub fn check_ventilation(building: &BuildingDescription, catalogue: &RuleCatalogue, si_rule: SiRule) -> Vec<Finding> {
    let mut out = Vec::new();
    if building.facade_pairs.is_empty() {
        out.push(
            Finding::new(
                rule_ids::VENT_PAIRS,
                building.name.clone(),
                Verdict::Fail,
                "no pair of opposite facades declared; cross ventilation cannot be assessed",
            )
            .with_values(Quantity::new(0.0, "pairs"), Requirement::at_least(1.0, "pairs"))
            .with_remediation(Remediation {
                action: "declare at least one facade pair (two opposite facades of the main rooms) per level".into(),
                quantity: None,
                items: vec![],
            }),
        );
    }
    for pair in &building.facade_pairs {
        match pair_porosity(building, pair) {
            Ok(p) => {
                out.extend(porosity_findings(building, pair, &p, catalogue.porosity_threshold));
                out.extend(internal_findings(pair, &p, si_rule));
            }
            Err(e) => out.push(
                Finding::new(rule_ids::VENT_POROSITY, pair.id.clone(), Verdict::Fail, e.to_string())
                    .with_values(Quantity::new(0.0, "m2"), Requirement::at_least(0.0, "m2")),
            ),
        }
    }
    out.extend(layout_findings(building));
    out
}

fn porosity_findings(
    building: &BuildingDescription,
    pair: &FacadePair,
    p: &PairPorosity,
    threshold: f64,
) -> Vec<Finding> {
    let sides = [
        (&pair.facade_1, p.so1, p.sp1, p.p1),
        (&pair.facade_2, p.so2, p.sp2, p.p2),
    ];
    sides
        .into_iter()
        .map(|(facade, so, sp_side, porosity)| {
            let subject = format!("{}/{}", pair.id, facade);
            let context = format!(
                "facade {facade}: So = {so:.2} m2, Sp = (Sp1 + Sp2)/2 = {:.2} m2, P = {porosity:.3} (required {threshold})",
                p.sp
            );
            let f = Finding::new(rule_ids::VENT_POROSITY, subject, Verdict::Pass, context)
                .with_values(Quantity::new(porosity, "ratio"), Requirement::at_least(threshold, "ratio"));
            if at_least(porosity, threshold) {
                return f;
            }
            let required_area = threshold * p.sp;
            let missing = ceil6(required_area - so);
            // share the facade requirement among main rooms in proportion to their facade area
            let items = pair_rooms(building, pair)
                .filter_map(|room| {
                    let g = room.gross_area_on(facade);
                    if g <= 0.0 || sp_side <= 0.0 {
                        return None;
                    }
                    let room_required = required_area * g / sp_side;
                    let room_so = room.opening_area_on(facade);
                    (room_so < room_required).then(|| RemediationItem {
                        subject: room.id.clone(),
                        quantity: "net external opening".into(),
                        measured: room_so,
                        required: room_required,
                        unit: "m2".into(),
                    })
                })
                .collect::<Vec<_>>();
            let per_room = items
                .iter()
                .map(|i| format!("{} {:.2} -> {:.2} m2 (+{:.2})", i.subject, i.measured, i.required, i.required - i.measured))
                .collect::<Vec<_>>()
                .join("; ");
            let mut action = format!("add {missing:.2} m2 net opening on facade {facade}");
            if !per_room.is_empty() {
                action.push_str(&format!(" ({per_room})"));
            }
            Finding {
                verdict: Verdict::Fail,
                ..f
            }
            .with_remediation(Remediation {
                action,
                quantity: Some(Quantity::new(missing, "m2")),
                items,
            })
        })
        .collect()
}

fn internal_findings(pair: &FacadePair, p: &PairPorosity, si_rule: SiRule) -> Vec<Finding> {
    let target = match si_rule {
        SiRule::Min => p.so1.min(p.so2),
        SiRule::Max => p.so1.max(p.so2),
    };
    [(&pair.facade_1, p.si1), (&pair.facade_2, p.si2)]
        .into_iter()
        .map(|(facade, si)| {
            let subject = format!("{}/{}", pair.id, facade);
            let context = format!(
                "internal openings on the {facade} side: Si = {si:.2} m2, required >= {}(So1, So2) = {target:.2} m2",
                si_rule.as_str()
            );
            let f = Finding::new(rule_ids::VENT_INTERNAL, subject, Verdict::Pass, context)
                .with_values(Quantity::new(si, "m2"), Requirement::at_least(target, "m2"));
            if at_least(si, target) {
                f
            } else {
                let missing = ceil6(target - si);
                Finding {
                    verdict: Verdict::Fail,
                    ..f
                }
                .with_remediation(Remediation {
                    action: format!(
                        "add {missing:.2} m2 of internal openings (doors, fanlights, partitions) on the {facade} side"
                    ),
                    quantity: Some(Quantity::new(missing, "m2")),
                    items: vec![],
                })
            }
        })
        .collect()
}

/// Each main room needs openings on two opposite facades, or an external opening
/// plus an internal path to the rest of the dwelling.
fn layout_findings(building: &BuildingDescription) -> Vec<Finding> {
    building
        .rooms
        .iter()
        .filter(|r| r.is_main())
        .map(|room| {
            let opened: Vec<_> = building
                .facades
                .iter()
                .filter(|f| room.opening_area_on(&f.id) > 0.0)
                .collect();
            let cross = opened
                .iter()
                .any(|a| opened.iter().any(|b| a.orientation.opposite() == b.orientation));
            let internal = room.internal_opening_area() > 0.0;
            let ok = cross || (!opened.is_empty() && internal);
            let msg = format!(
                "external openings on {} facade(s){}; internal path: {}",
                opened.len(),
                if cross { " including two opposite ones" } else { "" },
                if internal { "yes" } else { "no" }
            );
            let f = Finding::new(
                rule_ids::VENT_LAYOUT,
                room.id.clone(),
                if ok { Verdict::Pass } else { Verdict::Fail },
                msg,
            )
            .with_values(
                Quantity::new(opened.len() as f64, "facades"),
                Requirement::at_least(if internal { 1.0 } else { 2.0 }, "facades"),
            );
            if ok {
                f
            } else {
                f.with_remediation(Remediation {
                    action: "open the room on two opposite facades, or add an external opening and an internal opening towards the opposite facade".into(),
                    quantity: None,
                    items: vec![],
                })
            }
        })
        .collect()
}
