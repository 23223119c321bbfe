use std::ffi::{CStr, CString};
use std::ptr;

use ecodom_ffi::*;

fn fixture(name: &str) -> CString {
    CString::new(format!("{}/{name}", ecodom::FIXTURE_DIR)).unwrap()
}

fn last_error() -> String {
    let p = ecodom_last_error_message();
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_owned();
    unsafe { ecodom_string_free(p) };
    s
}

#[test]
fn check_round_trip() {
    unsafe {
        let mut cat = ptr::null_mut();
        assert_eq!(ecodom_catalogue_bundled(&mut cat), EcodomStatus::Ok);
        for (name, passed) in [("la_decouverte_final.json", 1), ("la_decouverte_initial.json", 0)] {
            let mut b = ptr::null_mut();
            assert_eq!(ecodom_building_load(fixture(name).as_ptr(), &mut b), EcodomStatus::Ok);
            let mut r = ptr::null_mut();
            assert_eq!(ecodom_check(b, cat, EcodomSiRule::Min, &mut r), EcodomStatus::Ok);
            assert_eq!(ecodom_report_passed(r), passed);
            assert_eq!(ecodom_report_fail_count(r) == 0, passed == 1);
            let mut json = ptr::null_mut();
            assert_eq!(ecodom_report_to_json(r, &mut json), EcodomStatus::Ok);
            let text = CStr::from_ptr(json).to_str().unwrap();
            assert!(text.contains("\"overall\""));
            ecodom_string_free(json);
            ecodom_report_free(r);
            ecodom_building_free(b);
        }
        ecodom_catalogue_free(cat);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut b = ptr::null_mut();
        let missing = CString::new("/nonexistent/building.json").unwrap();
        assert_eq!(ecodom_building_load(missing.as_ptr(), &mut b), EcodomStatus::Io);
        assert!(b.is_null());
        assert!(last_error().contains("nonexistent"));

        let bad_version = CString::new(r#"{"schema_version": "0"}"#).unwrap();
        assert_eq!(
            ecodom_building_from_json(bad_version.as_ptr(), &mut b),
            EcodomStatus::SchemaVersion
        );
        let garbage = CString::new("{").unwrap();
        assert_eq!(ecodom_building_from_json(garbage.as_ptr(), &mut b), EcodomStatus::Parse);
        assert_eq!(
            ecodom_building_from_json(ptr::null(), &mut b),
            EcodomStatus::NullPointer
        );
        assert_eq!(ecodom_report_passed(ptr::null()), -1);

        let mut r = ptr::null_mut();
        assert_eq!(
            ecodom_check(ptr::null(), ptr::null(), EcodomSiRule::Max, &mut r),
            EcodomStatus::NullPointer
        );

        let mut v = 0.0;
        assert_eq!(
            ecodom_saturation_vapor_pressure(80.0, &mut v),
            EcodomStatus::InvalidInput
        );
        assert!(last_error().contains("80"));
    }
}

#[test]
fn validation_errors_are_listed() {
    let text = std::fs::read_to_string(format!("{}/porosity_25.json", ecodom::FIXTURE_DIR))
        .unwrap()
        .replace("\"living-door\"", "\"bedroom-door\"");
    let json = CString::new(text).unwrap();
    let mut b = ptr::null_mut();
    unsafe {
        assert_eq!(
            ecodom_building_from_json(json.as_ptr(), &mut b),
            EcodomStatus::Validation
        );
    }
    assert!(last_error().contains("bedroom-door"));
}

#[test]
fn scalars() {
    assert_eq!(ecodom_sol_air_temperature(30.0, 1000.0, 0.8, 25.0), 62.0);
    assert_eq!(ecodom_ventilation_ach(0.0, 2.0, 0.6, 0.5, 100.0, 4.0, 1.0), 0.0);
    let one = ecodom_ventilation_ach(2.0, 2.0, 0.6, 0.5, 100.0, 2.0, 1.0);
    let two = ecodom_ventilation_ach(2.0, 2.0, 0.6, 0.5, 100.0, 4.0, 1.0);
    assert!((two - 2.0 * one).abs() < 1e-9);
    let mut w = 0.0;
    unsafe {
        assert_eq!(ecodom_humidity_ratio(30.0, 100.0, 101_325.0, &mut w), EcodomStatus::Ok);
    }
    assert!((w - 27.2).abs() < 0.15);
    let v = unsafe { CStr::from_ptr(ecodom_version()) };
    assert_eq!(v.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn header_is_current_and_compiles() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = std::fs::read_to_string(format!("{dir}/include/ecodom.h")).unwrap();
    for f in [
        "ecodom_check",
        "ecodom_report_to_json",
        "ecodom_last_error_message",
        "ECODOM_STATUS_OK",
    ] {
        assert!(header.contains(f), "{f} missing from header");
    }
    let Ok(cc) = which_cc() else { return };
    let tmp = std::env::temp_dir().join(format!("ecodom_header_{}.c", std::process::id()));
    std::fs::write(
        &tmp,
        "#include \"ecodom.h\"\nint main(void){ return ecodom_version() == 0; }\n",
    )
    .unwrap();
    let status = std::process::Command::new(cc)
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(format!("{dir}/include"))
        .arg(&tmp)
        .status()
        .unwrap();
    let _ = std::fs::remove_file(&tmp);
    assert!(status.success());
}

fn which_cc() -> Result<&'static str, ()> {
    ["cc", "gcc", "clang"]
        .into_iter()
        .find(|c| std::process::Command::new(c).arg("--version").output().is_ok())
        .ok_or(())
}
