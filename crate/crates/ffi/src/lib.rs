//! C ABI over the `ecodom` library.
//!
//! Conventions:
//! - Functions return an [`EcodomStatus`]; results go through out-pointers.
//! - Objects are opaque handles released with their `_free` function.
//! - Strings returned to the caller are NUL-terminated UTF-8 and must be released
//!   with [`ecodom_string_free`].
//! - After a non-`OK` status, [`ecodom_last_error_message`] describes the failure
//!   (per thread).

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ecodom::building::BuildingDescription;
use ecodom::rules::{compliance_report, ComplianceReport, ReportOptions, RuleCatalogue, SiRule};
use ecodom::thermal::VentilationApertures;
use ecodom::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcodomStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Io = 3,
    Parse = 4,
    SchemaVersion = 5,
    Validation = 6,
    InvalidInput = 7,
    Checksum = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EcodomSiRule {
    Min = 0,
    Max = 1,
}

/// Rule catalogue handle.
pub struct EcodomCatalogue {
    inner: RuleCatalogue,
}

/// Validated building description handle.
pub struct EcodomBuilding {
    inner: BuildingDescription,
}

/// Compliance report handle.
pub struct EcodomReport {
    inner: ComplianceReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> EcodomStatus {
    match e {
        Error::Io { .. } => EcodomStatus::Io,
        Error::Json { .. } | Error::Toml { .. } | Error::Malformed { .. } | Error::NonMonotonic { .. } => {
            EcodomStatus::Parse
        }
        Error::SchemaVersion { .. } => EcodomStatus::SchemaVersion,
        Error::Validation(_) => EcodomStatus::Validation,
        Error::Checksum { .. } => EcodomStatus::Checksum,
        _ => EcodomStatus::InvalidInput,
    }
}

fn fail(e: Error) -> EcodomStatus {
    let mut msg = e.to_string();
    if let Error::Validation(list) = &e {
        for v in list {
            msg.push_str(&format!("\n  {v}"));
        }
    }
    set_error(msg);
    status_of(&e)
}

/// Run `f`, converting panics into `Panic`.
fn guard(f: impl FnOnce() -> EcodomStatus) -> EcodomStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => {
            set_error("internal panic");
            EcodomStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, EcodomStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(EcodomStatus::NullPointer);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        EcodomStatus::InvalidUtf8
    })
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> EcodomStatus {
    *out = Box::into_raw(Box::new(value));
    EcodomStatus::Ok
}

macro_rules! nonnull {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            set_error(concat!("null pointer: ", stringify!($p)));
            return EcodomStatus::NullPointer;
        })+
    };
}

/// Library version, static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ecodom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failure on this thread, or NULL. Release with `ecodom_string_free`.
#[no_mangle]
pub extern "C" fn ecodom_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null_mut(), |s| s.clone().into_raw()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, released once.
#[no_mangle]
pub unsafe extern "C" fn ecodom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_catalogue_bundled(out: *mut *mut EcodomCatalogue) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        put(
            out,
            EcodomCatalogue {
                inner: RuleCatalogue::bundled(),
            },
        )
    })
}

/// Load a catalogue JSON file (checksum sidecar verified when present).
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_catalogue_load(path: *const c_char, out: *mut *mut EcodomCatalogue) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        let path = match str_arg(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match RuleCatalogue::load(path) {
            Ok(c) => put(out, EcodomCatalogue { inner: c }),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `c` must be NULL or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn ecodom_catalogue_free(c: *mut EcodomCatalogue) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// Load and validate a building description file.
///
/// # Safety
/// `path` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_building_load(path: *const c_char, out: *mut *mut EcodomBuilding) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        let path = match str_arg(path) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match ecodom::io::load_building(path) {
            Ok(b) => put(out, EcodomBuilding { inner: b }),
            Err(e) => fail(e),
        }
    })
}

/// Parse and validate a building description from JSON text.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_building_from_json(json: *const c_char, out: *mut *mut EcodomBuilding) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        let text = match str_arg(json) {
            Ok(p) => p,
            Err(s) => return s,
        };
        match ecodom::io::parse_building(text) {
            Ok(b) => put(out, EcodomBuilding { inner: b }),
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `b` must be NULL or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn ecodom_building_free(b: *mut EcodomBuilding) {
    if !b.is_null() {
        drop(Box::from_raw(b));
    }
}

/// Run the compliance check. A failing building is still `OK`; query the report.
///
/// # Safety
/// Handles must be valid; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_check(
    building: *const EcodomBuilding,
    catalogue: *const EcodomCatalogue,
    si_rule: EcodomSiRule,
    out: *mut *mut EcodomReport,
) -> EcodomStatus {
    guard(|| {
        nonnull!(building, catalogue, out);
        let si_rule = match si_rule {
            EcodomSiRule::Min => SiRule::Min,
            EcodomSiRule::Max => SiRule::Max,
        };
        match compliance_report(&(*building).inner, &(*catalogue).inner, ReportOptions { si_rule }) {
            Ok(r) => put(out, EcodomReport { inner: r }),
            Err(e) => fail(e),
        }
    })
}

/// 1 when the report passes, 0 when it fails, -1 for a NULL handle.
///
/// # Safety
/// `r` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ecodom_report_passed(r: *const EcodomReport) -> c_int {
    match r.as_ref() {
        Some(r) => c_int::from(r.inner.passed()),
        None => -1,
    }
}

/// Number of failing findings (0 for NULL).
///
/// # Safety
/// `r` must be NULL or a valid handle.
#[no_mangle]
pub unsafe extern "C" fn ecodom_report_fail_count(r: *const EcodomReport) -> usize {
    r.as_ref().map_or(0, |r| r.inner.counts.fail)
}

/// Report as pretty JSON. Release the string with `ecodom_string_free`.
///
/// # Safety
/// `r` must be a valid handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_report_to_json(r: *const EcodomReport, out: *mut *mut c_char) -> EcodomStatus {
    guard(|| {
        nonnull!(r, out);
        match CString::new((*r).inner.to_json()) {
            Ok(s) => {
                *out = s.into_raw();
                EcodomStatus::Ok
            }
            Err(_) => {
                set_error("report contains a NUL byte");
                EcodomStatus::InvalidInput
            }
        }
    })
}

/// # Safety
/// `r` must be NULL or a handle from this library, released once.
#[no_mangle]
pub unsafe extern "C" fn ecodom_report_free(r: *mut EcodomReport) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// Saturation vapour pressure, Pa, for -20..60 °C.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_saturation_vapor_pressure(t_c: f64, out: *mut f64) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        match ecodom::comfort::saturation_vapor_pressure(t_c) {
            Ok(v) => {
                *out = v;
                EcodomStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Humidity ratio, g/kg.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ecodom_humidity_ratio(t_c: f64, rh_pct: f64, pressure_pa: f64, out: *mut f64) -> EcodomStatus {
    guard(|| {
        nonnull!(out);
        match ecodom::comfort::humidity_ratio(t_c, rh_pct, pressure_pa) {
            Ok(v) => {
                *out = v;
                EcodomStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `t_out + α·I/h_e`, °C.
#[no_mangle]
pub extern "C" fn ecodom_sol_air_temperature(
    t_out: f64,
    irradiance: f64,
    absorptivity: f64,
    exterior_film: f64,
) -> f64 {
    ecodom::thermal::sol_air_temperature(t_out, irradiance, absorptivity, exterior_film)
}

/// Cross-ventilation air changes per hour through two openings in series.
///
/// `incidence_factor` is 1 for wind normal to the facades.
#[no_mangle]
pub extern "C" fn ecodom_ventilation_ach(
    inlet_area: f64,
    outlet_area: f64,
    discharge_coefficient: f64,
    delta_cp: f64,
    volume: f64,
    wind_speed: f64,
    incidence_factor: f64,
) -> f64 {
    let a = VentilationApertures {
        inlet_area,
        outlet_area,
        discharge_coefficient,
        delta_cp,
        axis_azimuth: 0.0,
    };
    ecodom::thermal::ventilation_ach(&a, volume, wind_speed, incidence_factor)
}
