use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::Serialize;

use super::{BuildingDescription, InsulationLayer, OpeningLocation, Room};

/// One violated invariant, naming the offending entity and field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationError {
    pub entity: String,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}: {}", self.entity, self.field, self.message)
    }
}

#[derive(Default)]
struct Collector(Vec<ValidationError>);

impl Collector {
    fn push(&mut self, entity: impl Into<String>, field: &str, message: impl Into<String>) {
        self.0.push(ValidationError {
            entity: entity.into(),
            field: field.to_string(),
            message: message.into(),
        });
    }

    fn non_negative(&mut self, entity: &str, field: &str, v: f64) {
        if !(v.is_finite() && v >= 0.0) {
            self.push(entity, field, format!("must be a finite value >= 0, got {v}"));
        }
    }

    fn positive(&mut self, entity: &str, field: &str, v: f64) {
        if !(v.is_finite() && v > 0.0) {
            self.push(entity, field, format!("must be a finite value > 0, got {v}"));
        }
    }

    fn insulation(&mut self, entity: &str, layer: &InsulationLayer) {
        self.positive(entity, "insulation.conductivity", layer.conductivity);
        self.non_negative(entity, "insulation.thickness", layer.thickness);
    }
}

/// Check type invariants and referential integrity. Empty iff the description is valid.
pub fn validate(b: &BuildingDescription) -> Vec<ValidationError> {
    let mut c = Collector::default();
    let bname = format!("building {:?}", b.name);

    if !(-90.0..=90.0).contains(&b.latitude) {
        c.push(&bname, "latitude", format!("{} is outside [-90, 90]", b.latitude));
    }
    if !(-180.0..=180.0).contains(&b.longitude) {
        c.push(&bname, "longitude", format!("{} is outside [-180, 180]", b.longitude));
    }
    if b.dwelling_type < 1 {
        c.push(&bname, "dwelling_type", "must be at least 1 main room");
    }
    c.positive(&bname, "floor_area", b.floor_area);
    c.positive(&bname, "ceiling_height", b.ceiling_height);
    if b.rooms.is_empty() {
        c.push(&bname, "rooms", "building has no rooms");
    }

    let mut facades = HashMap::new();
    for f in &b.facades {
        if facades.insert(f.id.as_str(), f.orientation).is_some() {
            c.push(format!("facade {}", f.id), "id", "duplicated facade id");
        }
    }

    let mut room_ids = HashSet::new();
    let mut opening_ids = HashSet::new();
    for room in &b.rooms {
        let ent = format!("room {}", room.id);
        if !room_ids.insert(room.id.as_str()) {
            c.push(&ent, "id", "duplicated room id");
        }
        validate_room(&mut c, room, &facades);
        for o in room.external_openings.iter().chain(&room.internal_openings) {
            if !opening_ids.insert(o.id.as_str()) {
                c.push(format!("opening {}", o.id), "id", "duplicated opening id");
            }
        }
    }

    let mut wall_ids = HashSet::new();
    for w in &b.walls {
        let ent = format!("wall {}", w.id);
        if !wall_ids.insert(w.id.as_str()) {
            c.push(&ent, "id", "duplicated wall id");
        }
        c.positive(&ent, "area", w.area);
        c.non_negative(&ent, "overhang_depth", w.overhang_depth);
        c.non_negative(&ent, "overhang_height", w.overhang_height);
        if w.overhang_depth > 0.0 && !(w.overhang_height > 0.0) {
            c.push(&ent, "overhang_height", "must be > 0 when an overhang depth is given");
        }
        c.insulation(&ent, &w.insulation);
    }

    if let Some(roof) = &b.roof {
        c.positive("roof", "area", roof.area);
        c.insulation("roof", &roof.insulation);
    }

    let mut window_ids = HashSet::new();
    for w in &b.windows {
        let ent = format!("window {}", w.id);
        if !window_ids.insert(w.id.as_str()) {
            c.push(&ent, "id", "duplicated window id");
        }
        c.positive(&ent, "glazed_area", w.glazed_area);
        c.positive(&ent, "height", w.height);
        c.non_negative(&ent, "overhang_depth", w.overhang_depth);
        c.non_negative(&ent, "offset", w.offset);
    }

    let mut pair_ids = HashSet::new();
    for p in &b.facade_pairs {
        let ent = format!("facade pair {}", p.id);
        if !pair_ids.insert(p.id.as_str()) {
            c.push(&ent, "id", "duplicated facade pair id");
        }
        let o1 = facades.get(p.facade_1.as_str());
        let o2 = facades.get(p.facade_2.as_str());
        if o1.is_none() {
            c.push(&ent, "facade_1", format!("unknown facade {:?}", p.facade_1));
        }
        if o2.is_none() {
            c.push(&ent, "facade_2", format!("unknown facade {:?}", p.facade_2));
        }
        if let (Some(o1), Some(o2)) = (o1, o2) {
            if o1.opposite() != *o2 {
                c.push(
                    &ent,
                    "facade_2",
                    format!(
                        "facades {} ({o1}) and {} ({o2}) are not opposite",
                        p.facade_1, p.facade_2
                    ),
                );
            } else {
                let rooms: Vec<&Room> = super::porosity::pair_rooms(b, p).collect();
                let sp1: f64 = rooms.iter().map(|r| r.gross_area_on(&p.facade_1)).sum();
                let sp2: f64 = rooms.iter().map(|r| r.gross_area_on(&p.facade_2)).sum();
                if !(sp1 > 0.0) {
                    c.push(&ent, "facade_1", "no main-room facade area (Sp1 = 0)");
                }
                if !(sp2 > 0.0) {
                    c.push(&ent, "facade_2", "no main-room facade area (Sp2 = 0)");
                }
            }
        }
    }

    if let Some(wh) = &b.water_heater {
        c.non_negative("water_heater", "collector_area", wh.collector_area);
        c.non_negative("water_heater", "tank_volume", wh.tank_volume);
        c.non_negative("water_heater", "annual_productivity", wh.annual_productivity);
    }

    c.0
}

fn validate_room(c: &mut Collector, room: &Room, facades: &HashMap<&str, super::Orientation>) {
    let ent = format!("room {}", room.id);
    for m in &room.facade_memberships {
        if !facades.contains_key(m.facade.as_str()) {
            c.push(&ent, "facade_memberships", format!("unknown facade {:?}", m.facade));
        }
        c.non_negative(&ent, "facade_memberships.gross_area", m.gross_area);
    }
    if room.is_main() && !room.facade_memberships.iter().any(|m| m.gross_area > 0.0) {
        c.push(&ent, "facade_memberships", "main room has no facade area");
    }
    for o in &room.external_openings {
        let oent = format!("opening {}", o.id);
        c.non_negative(&oent, "net_area", o.net_area);
        match &o.location {
            OpeningLocation::External(f) if !facades.contains_key(f.as_str()) => {
                c.push(&oent, "location", format!("unknown facade {f:?}"));
            }
            OpeningLocation::External(_) => {}
            OpeningLocation::Internal => {
                c.push(&oent, "location", "internal opening listed as external");
            }
        }
    }
    for o in &room.internal_openings {
        let oent = format!("opening {}", o.id);
        c.non_negative(&oent, "net_area", o.net_area);
        if o.location != OpeningLocation::Internal {
            c.push(&oent, "location", "external opening listed as internal");
        }
    }
}
