#ifndef ECODOM_H
#define ECODOM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EcodomSiRule {
  ECODOM_SI_RULE_MIN = 0,
  ECODOM_SI_RULE_MAX = 1,
} EcodomSiRule;

/**
 * Status codes returned by every fallible function.
 */
typedef enum EcodomStatus {
  ECODOM_STATUS_OK = 0,
  ECODOM_STATUS_NULL_POINTER = 1,
  ECODOM_STATUS_INVALID_UTF8 = 2,
  ECODOM_STATUS_IO = 3,
  ECODOM_STATUS_PARSE = 4,
  ECODOM_STATUS_SCHEMA_VERSION = 5,
  ECODOM_STATUS_VALIDATION = 6,
  ECODOM_STATUS_INVALID_INPUT = 7,
  ECODOM_STATUS_CHECKSUM = 8,
  ECODOM_STATUS_PANIC = 99,
} EcodomStatus;

/**
 * Validated building description handle.
 */
typedef struct EcodomBuilding EcodomBuilding;

/**
 * Rule catalogue handle.
 */
typedef struct EcodomCatalogue EcodomCatalogue;

/**
 * Compliance report handle.
 */
typedef struct EcodomReport EcodomReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version, static NUL-terminated string.
 */
const char *ecodom_version(void);

/**
 * Message of the last failure on this thread, or NULL. Release with `ecodom_string_free`.
 */
char *ecodom_last_error_message(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, released once.
 */
void ecodom_string_free(char *s);

/**
 * # Safety
 * `out` must be a valid pointer.
 */
enum EcodomStatus ecodom_catalogue_bundled(struct EcodomCatalogue **out);

/**
 * Load a catalogue JSON file (checksum sidecar verified when present).
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum EcodomStatus ecodom_catalogue_load(const char *path, struct EcodomCatalogue **out);

/**
 * # Safety
 * `c` must be NULL or a handle from this library, released once.
 */
void ecodom_catalogue_free(struct EcodomCatalogue *c);

/**
 * Load and validate a building description file.
 *
 * # Safety
 * `path` must be a NUL-terminated string and `out` a valid pointer.
 */
enum EcodomStatus ecodom_building_load(const char *path, struct EcodomBuilding **out);

/**
 * Parse and validate a building description from JSON text.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum EcodomStatus ecodom_building_from_json(const char *json, struct EcodomBuilding **out);

/**
 * # Safety
 * `b` must be NULL or a handle from this library, released once.
 */
void ecodom_building_free(struct EcodomBuilding *b);

/**
 * Run the compliance check. A failing building is still `OK`; query the report.
 *
 * # Safety
 * Handles must be valid; `out` must be a valid pointer.
 */
enum EcodomStatus ecodom_check(const struct EcodomBuilding *building,
                               const struct EcodomCatalogue *catalogue,
                               enum EcodomSiRule si_rule,
                               struct EcodomReport **out);

/**
 * 1 when the report passes, 0 when it fails, -1 for a NULL handle.
 *
 * # Safety
 * `r` must be NULL or a valid handle.
 */
int ecodom_report_passed(const struct EcodomReport *r);

/**
 * Number of failing findings (0 for NULL).
 *
 * # Safety
 * `r` must be NULL or a valid handle.
 */
size_t ecodom_report_fail_count(const struct EcodomReport *r);

/**
 * Report as pretty JSON. Release the string with `ecodom_string_free`.
 *
 * # Safety
 * `r` must be a valid handle and `out` a valid pointer.
 */
enum EcodomStatus ecodom_report_to_json(const struct EcodomReport *r, char **out);

/**
 * # Safety
 * `r` must be NULL or a handle from this library, released once.
 */
void ecodom_report_free(struct EcodomReport *r);

/**
 * Saturation vapour pressure, Pa, for -20..60 °C.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EcodomStatus ecodom_saturation_vapor_pressure(double t_c, double *out);

/**
 * Humidity ratio, g/kg.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum EcodomStatus ecodom_humidity_ratio(double t_c, double rh_pct, double pressure_pa, double *out);

/**
 * `t_out + α·I/h_e`, °C.
 */
double ecodom_sol_air_temperature(double t_out,
                                  double irradiance,
                                  double absorptivity,
                                  double exterior_film);

/**
 * Cross-ventilation air changes per hour through two openings in series.
 *
 * `incidence_factor` is 1 for wind normal to the facades.
 */
double ecodom_ventilation_ach(double inlet_area,
                              double outlet_area,
                              double discharge_coefficient,
                              double delta_cp,
                              double volume,
                              double wind_speed,
                              double incidence_factor);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* ECODOM_H */
