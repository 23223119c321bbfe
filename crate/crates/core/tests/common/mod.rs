#![allow(dead_code)]

use ecodom::building::*;
use ecodom::io::load_building;
use ecodom::thermal::{OverhangGeometry, SolarPosition};
use proptest::prelude::*;
use rand::Rng;

pub fn fixture(name: &str) -> BuildingDescription {
    load_building(format!("{}/{name}.json", ecodom::FIXTURE_DIR)).unwrap()
}

/// Facade membership of a generated room: facade 1, facade 2 or both.
#[derive(Debug, Clone, Copy)]
pub enum Side {
    One,
    Two,
    Both,
}

#[derive(Debug, Clone)]
pub struct RoomSpec {
    pub main: bool,
    pub side: Side,
    pub gross: [f64; 2],
    /// Opening areas as fractions of the gross area on each facade.
    pub open_frac: [f64; 2],
    pub internal: f64,
}

fn room_spec() -> impl Strategy<Value = RoomSpec> {
    (
        prop::bool::weighted(0.75),
        prop_oneof![Just(Side::One), Just(Side::Two), Just(Side::Both)],
        [2.0f64..30.0, 2.0f64..30.0],
        [0.0f64..0.8, 0.0f64..0.8],
        0.0f64..6.0,
    )
        .prop_map(|(main, side, gross, open_frac, internal)| RoomSpec {
            main,
            side,
            gross,
            open_frac,
            internal,
        })
}

/// Random dwellings with one N/S axis and at least one main room on it.
pub fn random_building() -> impl Strategy<Value = BuildingDescription> {
    (room_spec(), prop::collection::vec(room_spec(), 0..6)).prop_map(|(mut first, rest)| {
        first.main = true;
        let specs: Vec<RoomSpec> = std::iter::once(first).chain(rest).collect();
        build(&specs)
    })
}

pub fn build(specs: &[RoomSpec]) -> BuildingDescription {
    let facades = ["n", "s"];
    let rooms = specs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let on: Vec<usize> = match s.side {
                Side::One => vec![0],
                Side::Two => vec![1],
                Side::Both => vec![0, 1],
            };
            let id = format!("r{i}");
            Room {
                id: id.clone(),
                kind: if s.main { RoomKind::Main } else { RoomKind::Service },
                floor_level: 0,
                under_roof: false,
                facade_memberships: on
                    .iter()
                    .map(|&k| FacadeMembership {
                        facade: facades[k].into(),
                        gross_area: s.gross[k],
                    })
                    .collect(),
                external_openings: on
                    .iter()
                    .map(|&k| Opening {
                        id: format!("{id}-{}", facades[k]),
                        net_area: s.gross[k] * s.open_frac[k],
                        location: OpeningLocation::External(facades[k].into()),
                    })
                    .collect(),
                internal_openings: vec![Opening {
                    id: format!("{id}-door"),
                    net_area: s.internal,
                    location: OpeningLocation::Internal,
                }],
            }
        })
        .collect();
    BuildingDescription {
        schema_version: SCHEMA_VERSION.into(),
        name: "generated".into(),
        latitude: -20.9,
        longitude: 55.5,
        utc_offset_hours: Some(4.0),
        dwelling_type: 3,
        floor_area: 60.0,
        ceiling_height: 2.5,
        mass_class: MassClass::Heavy,
        facades: vec![
            Facade {
                id: "n".into(),
                orientation: Orientation::North,
            },
            Facade {
                id: "s".into(),
                orientation: Orientation::South,
            },
        ],
        rooms,
        walls: vec![],
        roof: None,
        windows: vec![],
        facade_pairs: vec![FacadePair {
            id: "ns".into(),
            facade_1: "n".into(),
            facade_2: "s".into(),
            floor_level: None,
        }],
        water_heater: None,
        vegetation_note: String::new(),
    }
}

/// Straightforward recount of So/Sp over main rooms, independent of the library.
pub fn naive_porosity(b: &BuildingDescription) -> (f64, f64) {
    let mut so = [0.0; 2];
    let mut sp = [0.0; 2];
    for r in b.rooms.iter().filter(|r| r.kind == RoomKind::Main) {
        for (k, f) in ["n", "s"].iter().enumerate() {
            for m in r.facade_memberships.iter().filter(|m| m.facade == *f) {
                sp[k] += m.gross_area;
            }
            for o in &r.external_openings {
                if o.location == OpeningLocation::External((*f).into()) {
                    so[k] += o.net_area;
                }
            }
        }
    }
    let mean = (sp[0] + sp[1]) / 2.0;
    (so[0] / mean, so[1] / mean)
}

/// Saturation pressure over liquid water, Pa, from the IAPWS Wagner–Pruß
/// vapour-pressure equation (reference accuracy, unrelated to Magnus).
pub fn wagner_pruss(t_c: f64) -> f64 {
    const TC: f64 = 647.096;
    const PC: f64 = 22.064e6;
    const A: [f64; 6] = [
        -7.85951783,
        1.84408259,
        -11.7866497,
        22.6807411,
        -15.9618719,
        1.80122502,
    ];
    let t = t_c + 273.15;
    let tau = 1.0 - t / TC;
    let s = A[0] * tau
        + A[1] * tau.powf(1.5)
        + A[2] * tau.powi(3)
        + A[3] * tau.powf(3.5)
        + A[4] * tau.powi(4)
        + A[5] * tau.powf(7.5);
    PC * (TC / t * s).exp()
}

/// Steam-table saturation pressures, (°C, Pa).
pub const STEAM_TABLE: [(f64, f64); 11] = [
    (0.01, 611.66),
    (5.0, 872.6),
    (10.0, 1228.1),
    (15.0, 1705.8),
    (20.0, 2339.3),
    (25.0, 3169.9),
    (30.0, 4246.9),
    (35.0, 5629.0),
    (40.0, 7384.9),
    (45.0, 9595.0),
    (50.0, 12352.0),
];

/// Humidity ratio in g/kg from a reference saturation pressure.
pub fn reference_humidity_ratio(t_c: f64, rh: f64, pressure: f64) -> f64 {
    let pv = rh / 100.0 * wagner_pruss(t_c);
    1000.0 * 0.621945 * pv / (pressure - pv)
}

pub fn unit_vector(altitude: f64, azimuth: f64) -> [f64; 3] {
    let (a, z) = (altitude.to_radians(), azimuth.to_radians());
    [a.cos() * z.sin(), a.cos() * z.cos(), a.sin()]
}

/// Fraction of a wall strip shaded by a horizontal plate, by casting rays from
/// jittered points on the strip toward the sun.
pub fn ray_cast_shading(g: &OverhangGeometry, sun: &SolarPosition, surface_azimuth: f64, rng: &mut impl Rng) -> f64 {
    // Facade frame: u along the outward normal, v along the facade, z up.
    let s = unit_vector(sun.altitude, sun.azimuth);
    let n = unit_vector(0.0, surface_azimuth);
    let su = s[0] * n[0] + s[1] * n[1];
    if s[2] <= 0.0 || su <= 0.0 {
        return 1.0;
    }
    let samples = 2000;
    let mut hit = 0;
    for i in 0..samples {
        let depth_below = g.offset + g.height * (i as f64 + rng.gen::<f64>()) / samples as f64;
        // Travel until the ray reaches the plate plane (z = 0).
        let t = depth_below / s[2];
        let u = t * su;
        if u <= g.depth {
            hit += 1;
        }
    }
    hit as f64 / samples as f64
}
