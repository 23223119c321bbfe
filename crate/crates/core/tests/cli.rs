use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(ecodom::FIXTURE_DIR).join(name)
}

fn ecodom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ecodom"))
        .args(args)
        .env_remove("ECODOM_CATALOGUE")
        .output()
        .unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// 90 comfortable half-hours and 10 hot ones in zone "a", a cooler copy in "b".
fn ninety_ten(dir: &Path) -> PathBuf {
    let mut text = String::from(
        "timestamp,zone_id,air_temperature_c,resultant_temperature_c,relative_humidity_pct,air_speed_m_s\n",
    );
    for i in 0..100 {
        let ts = format!("2024-02-{:02}T{:02}:{:02}:00", 1 + i / 48, (i % 48) / 2, 30 * (i % 2));
        let t = if i < 90 { 26.0 } else { 33.0 };
        text.push_str(&format!("{ts},a,{t},,60,0\n"));
        text.push_str(&format!("{ts},b,{},,60,0\n", t - 1.5));
    }
    let p = dir.join("indoor.csv");
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn check_exit_codes() {
    let final_ = fixture("la_decouverte_final.json");
    let initial = fixture("la_decouverte_initial.json");
    assert_eq!(code(&ecodom(&["check", path(&final_)])), 0);
    let o = ecodom(&["check", path(&initial)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("Overall: FAIL"));
    let o = ecodom(&["check", "/nonexistent/building.json"]);
    assert_eq!(code(&o), 2);
    assert!(!o.stderr.is_empty());
    assert_eq!(code(&ecodom(&["frobnicate"])), 2);
    assert_eq!(code(&ecodom(&["--help"])), 0);
}

#[test]
fn check_json_is_deterministic() {
    let initial = fixture("la_decouverte_initial.json");
    let a = ecodom(&["--format", "json", "check", path(&initial)]);
    let b = ecodom(&["--format", "json", "check", path(&initial)]);
    assert_eq!(code(&a), 1);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["overall"], "fail");
}

#[test]
fn check_report_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = ecodom(&[
        "--format",
        "json",
        "check",
        path(&fixture("la_decouverte_final.json")),
        "--out",
        path(&out),
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with(": PASS\n"), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["overall"], "pass");
}

#[test]
fn bad_catalogue_checksum_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().join("catalogue.json");
    std::fs::write(
        &cat,
        ecodom::rules::BUNDLED_CATALOGUE.replace("\"west\": 1.0", "\"west\": 0.9"),
    )
    .unwrap();
    std::fs::write(
        dir.path().join("catalogue.json.sha256"),
        ecodom::rules::BUNDLED_CATALOGUE_SHA256,
    )
    .unwrap();
    let o = ecodom(&[
        "--catalogue",
        path(&cat),
        "check",
        path(&fixture("la_decouverte_final.json")),
    ]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn comfort_reports_discomfort_fraction() {
    let dir = tempfile::tempdir().unwrap();
    let indoor = ninety_ten(dir.path());
    let o = ecodom(&["comfort", path(&indoor)]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("zone a: discomfort 10.0%"), "{text}");
    assert!(text.contains("(10 of 100 samples, 50.0 h)"), "{text}");
}

#[test]
fn comfort_paired_offset() {
    let dir = tempfile::tempdir().unwrap();
    let indoor = ninety_ten(dir.path());
    let o = ecodom(&["comfort", path(&indoor), "--paired", "a", "b"]);
    assert_eq!(code(&o), 0);
    assert!(
        stdout(&o).contains("vs b: resultant offset (first - second): mean 1.50 °C"),
        "{}",
        stdout(&o)
    );
    assert_eq!(code(&ecodom(&["comfort", path(&indoor), "--paired", "a", "zz"])), 2);
}

#[test]
fn comfort_zone_override_errors() {
    let dir = tempfile::tempdir().unwrap();
    let indoor = ninety_ten(dir.path());
    assert_eq!(
        code(&ecodom(&["comfort", path(&indoor), "--zone", "/nonexistent/zone.json"])),
        2
    );
    let bad = dir.path().join("zone.json");
    std::fs::write(&bad, r#"{"vertices": [[22, 4]], "extra": true}"#).unwrap();
    assert_eq!(code(&ecodom(&["comfort", path(&indoor), "--zone", path(&bad)])), 2);
}

#[test]
fn comfort_scatter_export_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let indoor = ninety_ten(dir.path());
    let (x, y) = (dir.path().join("x.csv"), dir.path().join("y.csv"));
    assert_eq!(code(&ecodom(&["comfort", path(&indoor), "--out", path(&x)])), 0);
    assert_eq!(code(&ecodom(&["comfort", path(&indoor), "--out", path(&y)])), 0);
    let a = std::fs::read(&x).unwrap();
    assert_eq!(a, std::fs::read(&y).unwrap());
    assert_eq!(String::from_utf8(a).unwrap().lines().count(), 1 + 200 + 4);
}

#[test]
fn simulate_writes_csv_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("run.csv");
    let weather = fixture("synthetic_week.csv");
    let o = ecodom(&[
        "simulate",
        path(&fixture("la_decouverte_final.json")),
        "--weather",
        path(&weather),
        "--paired",
        path(&fixture("typical_uninsulated.json")),
        "--out",
        path(&out),
    ]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.contains("envelope gains: roof"), "{text}");
    assert!(text.contains("resultant offset (first - second)"), "{text}");
    let csv = std::fs::read_to_string(&out).unwrap();
    assert_eq!(csv.lines().count(), 169);

    // Without --out the CSV goes to stdout, identical to the file.
    let o = ecodom(&[
        "simulate",
        path(&fixture("la_decouverte_final.json")),
        "--weather",
        path(&weather),
    ]);
    assert_eq!(stdout(&o), csv);
}

#[test]
fn simulate_scenario_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let scenario = dir.path().join("s.toml");
    std::fs::write(
        &scenario,
        format!(
            "building = {:?}\n[synthetic]\ndays = 2\n[zone]\nopenings = \"closed\"\n",
            path(&fixture("la_decouverte_final.json"))
        ),
    )
    .unwrap();
    let o = ecodom(&["simulate", "--scenario", path(&scenario)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 49);

    std::fs::write(&scenario, "[zone]\nroof_colour = \"dark\"\n").unwrap();
    let o = ecodom(&[
        "simulate",
        path(&fixture("la_decouverte_final.json")),
        "--scenario",
        path(&scenario),
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("roof_colour"));

    assert_eq!(code(&ecodom(&["simulate"])), 2);
}

#[test]
fn synth_weather_is_deterministic() {
    let a = ecodom(&["synth-weather", "--days", "2"]);
    let b = ecodom(&["synth-weather", "--days", "2"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), 49);
    assert_eq!(code(&ecodom(&["synth-weather", "--days", "0"])), 2);
}
