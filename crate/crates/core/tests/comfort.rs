mod common;

use chrono::{Duration, NaiveDate, NaiveDateTime};
use common::{reference_humidity_ratio, wagner_pruss, STEAM_TABLE};
use ecodom::comfort::*;
use proptest::prelude::*;

#[test]
fn saturation_pressure_matches_steam_table() {
    for (t, p) in STEAM_TABLE {
        let got = saturation_vapor_pressure(t).unwrap();
        assert!((got - p).abs() / p < 0.005, "{t} °C: {got} vs {p}");
        assert!((wagner_pruss(t) - p).abs() / p < 5e-4, "oracle drift at {t} °C");
    }
    assert!((saturation_vapor_pressure(0.0).unwrap() - 611.0).abs() < 2.0);
    assert!((saturation_vapor_pressure(30.0).unwrap() - 4246.0).abs() / 4246.0 < 0.005);
}

#[test]
fn psychro_grid_against_reference() {
    for i in 0..=100 {
        let t = 0.5 * i as f64;
        let ps = saturation_vapor_pressure(t).unwrap();
        assert!((ps - wagner_pruss(t)).abs() / wagner_pruss(t) < 0.005, "p_sat at {t}");
        for rh in [10.0, 40.0, 70.0, 100.0] {
            let w = humidity_ratio(t, rh, STANDARD_PRESSURE).unwrap();
            let want = reference_humidity_ratio(t, rh, STANDARD_PRESSURE);
            assert!((w - want).abs() / want < 0.005, "w at {t} °C {rh} %: {w} vs {want}");
        }
    }
    let w = humidity_ratio(30.0, 100.0, STANDARD_PRESSURE).unwrap();
    assert!((w - 27.2).abs() < 0.1, "{w}");
}

#[test]
fn relative_humidity_inverts_humidity_ratio() {
    for t in [5.0, 18.0, 27.0, 34.0, 49.0] {
        for rh in [5.0, 35.0, 80.0, 100.0] {
            let w = humidity_ratio(t, rh, STANDARD_PRESSURE).unwrap();
            assert!((relative_humidity(t, w, STANDARD_PRESSURE).unwrap() - rh).abs() < 1e-9);
        }
    }
}

#[test]
fn documented_example_is_inside() {
    let p = PsychroPoint::new(27.0, 60.0, 0.5).unwrap();
    assert_eq!(classify(&p, &ComfortZone::default()), Classification::Inside);
}

fn warm_series() -> impl Strategy<Value = Vec<(f64, f64, f64)>> {
    prop::collection::vec((22.0f64..38.0, 20.0f64..100.0, 0.0f64..2.0), 1..80)
}

fn points(raw: &[(f64, f64, f64)], dt: f64) -> Vec<PsychroPoint> {
    raw.iter()
        .map(|&(t, rh, v)| PsychroPoint::measured(t, t + dt, rh, v).unwrap())
        .collect()
}

fn timed(values: &[f64]) -> Vec<(NaiveDateTime, f64)> {
    let t0 = NaiveDate::from_ymd_opt(2024, 2, 1)
        .unwrap()
        .and_hms_opt(0, 0, 0)
        .unwrap();
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| (t0 + Duration::hours(i as i64), v))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    /// Points start at or above the cool edge (22 °C); below it, warming moves
    /// points into the zone and the property does not hold.
    #[test]
    fn warming_never_reduces_discomfort(raw in warm_series(), shift in 0.0f64..6.0) {
        let z = ComfortZone::default();
        let base = discomfort_fraction(&points(&raw, 0.0), &z).unwrap();
        let warm = discomfort_fraction(&points(&raw, shift), &z).unwrap();
        prop_assert!(warm.discomfort_fraction >= base.discomfort_fraction);
    }

    #[test]
    fn classification_ignores_vertex_start(t in 15.0f64..38.0, w in 0.0f64..25.0, v in 0.0f64..2.0, k in 0usize..4) {
        let z = ComfortZone::default();
        let mut rotated = z.clone();
        rotated.vertices.rotate_left(k);
        let mut reversed = z.clone();
        reversed.vertices.reverse();
        let p = PsychroPoint { temperature: t, relative_humidity: 50.0, humidity_ratio: w, air_speed: v };
        prop_assert_eq!(classify(&p, &z), classify(&p, &rotated));
        prop_assert_eq!(classify(&p, &z), classify(&p, &reversed));
    }

    #[test]
    fn paired_offset_is_antisymmetric(a in prop::collection::vec(18.0f64..36.0, 1..50), d in prop::collection::vec(-3.0f64..3.0, 50)) {
        let b: Vec<f64> = a.iter().zip(&d).map(|(x, y)| x + y).collect();
        let ab = paired_offset(&timed(&a), &timed(&b)).unwrap();
        let ba = paired_offset(&timed(&b), &timed(&a)).unwrap();
        prop_assert!((ab.mean + ba.mean).abs() < 1e-9);
        prop_assert!((ab.max + ba.min).abs() < 1e-9);
        prop_assert_eq!(ab.samples, a.len());
    }
}

/// Points above the cool edge only: warming can only push them out.
#[test]
fn warming_monotone_on_warm_side() {
    let z = ComfortZone::default();
    let raw: Vec<(f64, f64, f64)> = (0..200)
        .map(|i| (22.0 + 0.06 * i as f64, 40.0 + (i % 50) as f64, 0.1 * (i % 7) as f64))
        .collect();
    let mut last = 0.0;
    for s in 0..20 {
        let f = discomfort_fraction(&points(&raw, 0.5 * s as f64), &z)
            .unwrap()
            .discomfort_fraction;
        assert!(f >= last);
        last = f;
    }
    assert_eq!(last, 1.0);
}

#[test]
fn ninety_ten_split() {
    let z = ComfortZone::default();
    let mut pts: Vec<PsychroPoint> = (0..90).map(|_| PsychroPoint::new(26.0, 60.0, 0.0).unwrap()).collect();
    pts.extend((0..10).map(|_| PsychroPoint::new(34.0, 60.0, 0.0).unwrap()));
    let s = discomfort_stats(&pts, &z, 0.5).unwrap();
    assert_eq!(s.discomfort_fraction, 0.1);
    assert_eq!(s.total_hours, 50.0);
    assert!((s.max_exceedance_c - 5.0).abs() < 1e-9);
}

#[test]
fn air_speed_widens_only_to_the_cap() {
    let z = ComfortZone::default();
    assert_eq!(z.at_air_speed(0.0).max_temperature(), 29.0);
    assert_eq!(z.at_air_speed(1.0).max_temperature(), 31.0);
    assert_eq!(z.at_air_speed(5.0).max_temperature(), 32.0);
    let p = PsychroPoint::new(31.5, 50.0, 0.0).unwrap();
    assert_eq!(classify(&p, &z), Classification::Outside);
    let p = PsychroPoint { air_speed: 1.0, ..p };
    assert_eq!(classify(&p, &z), Classification::Outside);
    let p = PsychroPoint { air_speed: 2.0, ..p };
    assert_eq!(classify(&p, &z), Classification::Inside);
}

#[test]
fn scatter_export_rows_follow_classify() {
    let z = ComfortZone::default();
    let pts: Vec<PsychroPoint> = (0..40)
        .map(|i| PsychroPoint::new(20.0 + 0.4 * i as f64, 30.0 + i as f64, 0.0).unwrap())
        .collect();
    let csv = psychro_scatter_export(&pts, &z);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], SCATTER_COLUMNS.join(","));
    assert_eq!(lines.len(), 1 + pts.len() + z.vertices.len());
    for (p, line) in pts.iter().zip(&lines[1..]) {
        let inside = classify(p, &z) == Classification::Inside;
        assert!(line.ends_with(if inside { ",1" } else { ",0" }));
    }
    assert_eq!(csv, psychro_scatter_export(&pts, &z));
}

#[test]
fn malformed_zone_override_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let bowtie = dir.path().join("bowtie.json");
    std::fs::write(&bowtie, r#"{"vertices": [[22, 4], [29, 17], [29, 4], [22, 17]]}"#).unwrap();
    assert!(ComfortZone::load(&bowtie).is_err());
    let tiny = dir.path().join("tiny.json");
    std::fs::write(&tiny, r#"{"vertices": [[22, 4], [29, 4]]}"#).unwrap();
    assert!(ComfortZone::load(&tiny).is_err());
    let ok = dir.path().join("ok.json");
    std::fs::write(&ok, r#"{"vertices": [[20, 5], [27, 5], [25, 15], [20, 15]]}"#).unwrap();
    let z = ComfortZone::load(&ok).unwrap();
    assert!(z.contains(21.0, 10.0));
}
