use std::io::Write;

use chrono::{Duration, NaiveDateTime, Timelike};
use serde::{Deserialize, Serialize};

use super::airflow::ventilation_ach;
use super::loads::{plane_irradiance, sol_air_temperature};
use super::shading::overhang_shading_fraction;
use super::solar::solar_position_local;
use super::zone::{SurfaceKind, SurfaceShading, ZoneModel, AIR_HEAT_CAPACITY};
use crate::error::{Error, Result};
use crate::io::{WeatherRecord, WeatherSeries, TIMESTAMP_FORMAT};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimulationOptions {
    /// Implicit steps per weather hour.
    pub substeps_per_hour: u32,
    /// Days spent cycling the first weather day before recording.
    pub warmup_days: u32,
}

impl Default for SimulationOptions {
    fn default() -> Self {
        SimulationOptions {
            substeps_per_hour: 4,
            warmup_days: 3,
        }
    }
}

/// Hourly gains through one surface, W (positive into the zone).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurfaceGains {
    pub id: String,
    pub kind: SurfaceKind,
    pub watts: Vec<f64>,
}

/// Hourly outputs. Index `i` is the state at the i-th weather timestamp; flows
/// are averages over the hour ending there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SimulationResult {
    pub zone: String,
    pub timestamps: Vec<NaiveDateTime>,
    pub outdoor_temperature: Vec<f64>,
    pub air_temperature: Vec<f64>,
    pub mean_radiant_temperature: Vec<f64>,
    pub resultant_temperature: Vec<f64>,
    pub ach: Vec<f64>,
    pub ventilation_w: Vec<f64>,
    pub internal_w: Vec<f64>,
    pub surfaces: Vec<SurfaceGains>,
    /// J/K, to relate temperature changes to stored energy.
    pub capacitance: f64,
    /// Largest per-step |energy residual| / gross gains.
    pub max_residual_ratio: f64,
}

pub const RESULT_COLUMNS: [&str; 8] = [
    "timestamp",
    "outdoor_temperature_c",
    "air_temperature_c",
    "mean_radiant_temperature_c",
    "resultant_temperature_c",
    "ach",
    "ventilation_w",
    "internal_w",
];

impl SimulationResult {
    pub fn len(&self) -> usize {
        self.timestamps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.timestamps.is_empty()
    }

    /// Mean of a series over consecutive 24-sample days (partial last day dropped).
    pub fn daily_means(series: &[f64]) -> Vec<f64> {
        series.chunks_exact(24).map(|d| d.iter().sum::<f64>() / 24.0).collect()
    }

    /// CSV with [`RESULT_COLUMNS`] followed by one `gain_<surface id>_w` column per
    /// surface in zone order. Temperatures and ACH carry 4 decimals, watts 2.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(w);
        let err = |e: csv::Error| Error::invalid(format!("writing result CSV: {e}"));
        let mut header: Vec<String> = RESULT_COLUMNS.iter().map(|s| s.to_string()).collect();
        header.extend(self.surfaces.iter().map(|s| format!("gain_{}_w", s.id)));
        wtr.write_record(&header).map_err(err)?;
        for i in 0..self.len() {
            let mut row = vec![
                self.timestamps[i].format(TIMESTAMP_FORMAT).to_string(),
                format!("{:.4}", self.outdoor_temperature[i]),
                format!("{:.4}", self.air_temperature[i]),
                format!("{:.4}", self.mean_radiant_temperature[i]),
                format!("{:.4}", self.resultant_temperature[i]),
                format!("{:.4}", self.ach[i]),
                format!("{:.2}", self.ventilation_w[i]),
                format!("{:.2}", self.internal_w[i]),
            ];
            row.extend(self.surfaces.iter().map(|s| format!("{:.2}", s.watts[i])));
            wtr.write_record(&row).map_err(err)?;
        }
        wtr.flush()
            .map_err(|e| Error::invalid(format!("writing result CSV: {e}")))?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("in-memory write");
        String::from_utf8(buf).expect("utf8")
    }
}

/// Time-integrated positive envelope gains split by surface kind.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct GainBreakdown {
    pub roof: f64,
    pub walls: f64,
    pub windows: f64,
    /// Sum of positive hourly gains, Wh.
    pub total_wh: f64,
}

/// Shares of positive envelope gains. All shares are zero when nothing enters.
pub fn gain_breakdown(result: &SimulationResult) -> GainBreakdown {
    let (mut roof, mut walls, mut windows) = (0.0, 0.0, 0.0);
    for s in &result.surfaces {
        let wh: f64 = s.watts.iter().map(|w| w.max(0.0)).sum();
        match s.kind {
            SurfaceKind::Roof => roof += wh,
            SurfaceKind::Wall => walls += wh,
            SurfaceKind::Window => windows += wh,
        }
    }
    let total = roof + walls + windows;
    if total <= 0.0 {
        return GainBreakdown::default();
    }
    GainBreakdown {
        roof: roof / total,
        walls: walls / total,
        windows: windows / total,
        total_wh: total,
    }
}

pub fn simulate(zone: &ZoneModel, weather: &WeatherSeries) -> Result<SimulationResult> {
    simulate_with(zone, weather, &SimulationOptions::default())
}

/// Boundary conditions at one instant.
struct Forcing {
    time: NaiveDateTime,
    t_out: f64,
    direct: f64,
    diffuse: f64,
    wind_speed: f64,
    wind_direction: f64,
}

fn interpolate(a: &WeatherRecord, b: &WeatherRecord, frac: f64, time: NaiveDateTime) -> Forcing {
    let lerp = |x: f64, y: f64| x + (y - x) * frac;
    Forcing {
        time,
        t_out: lerp(a.temperature, b.temperature),
        direct: lerp(a.direct_horizontal, b.direct_horizontal),
        diffuse: lerp(a.diffuse_horizontal, b.diffuse_horizontal),
        wind_speed: lerp(a.wind_speed, b.wind_speed),
        wind_direction: b.wind_direction,
    }
}

/// Flows accumulated over the substeps of one hour.
#[derive(Default, Clone)]
struct HourAccumulator {
    surfaces: Vec<f64>,
    ventilation: f64,
    internal: f64,
    ach: f64,
    n: u32,
}

impl HourAccumulator {
    fn new(n_surfaces: usize) -> Self {
        HourAccumulator {
            surfaces: vec![0.0; n_surfaces],
            ..Default::default()
        }
    }
}

struct StepOutput {
    t_air: f64,
    mrt: f64,
}

struct Integrator<'a> {
    zone: &'a ZoneModel,
    dt: f64,
    max_residual_ratio: f64,
    gains: Vec<f64>,
}

impl<'a> Integrator<'a> {
    /// One implicit step ending at `f.time`.
    fn step(&mut self, t_old: f64, f: &Forcing, acc: &mut HourAccumulator) -> StepOutput {
        let zone = self.zone;
        let sun = solar_position_local(zone.latitude, zone.longitude, f.time, zone.utc_offset_hours);
        let ach_wind = ventilation_ach(
            &zone.ventilation,
            zone.volume,
            f.wind_speed,
            zone.ventilation.incidence_factor(f.wind_direction),
        );
        let ach = ach_wind + zone.infiltration_ach;
        let h_vent = AIR_HEAT_CAPACITY * ach * zone.volume / 3600.0;
        let hour = f.time.hour() as usize;
        let internal = zone.internal_gains[hour % 24];

        // Each surface contributes K·(T_drive − T_in) + S.
        let mut sum_k = 0.0;
        let mut sum_k_drive = 0.0;
        let mut sum_solar = 0.0;
        self.gains.clear();
        let mut drives = Vec::with_capacity(zone.surfaces.len());
        for s in &zone.surfaces {
            let irr = plane_irradiance(&sun, f.direct, f.diffuse, s.azimuth, s.tilt, zone.ground_reflectance);
            let received = match s.shading {
                SurfaceShading::None => irr.total(),
                SurfaceShading::Overhang(g) => {
                    irr.beam * (1.0 - overhang_shading_fraction(&g, &sun, s.azimuth)) + irr.diffuse
                }
                SurfaceShading::Fixed(frac) => irr.total() * (1.0 - frac.clamp(0.0, 1.0)),
            };
            let k = s.conductance();
            let (drive, solar) = match s.kind {
                SurfaceKind::Window => (f.t_out, s.transmittance * s.area * received),
                _ => (
                    sol_air_temperature(f.t_out, received, s.absorptivity, s.exterior_film),
                    0.0,
                ),
            };
            sum_k += k;
            sum_k_drive += k * drive;
            sum_solar += solar;
            drives.push((k, drive, solar));
        }

        let c_dt = zone.capacitance / self.dt;
        let t_new = (c_dt * t_old + sum_k_drive + sum_solar + internal + h_vent * f.t_out) / (c_dt + sum_k + h_vent);

        let mut gross = internal.max(0.0);
        let mut net = internal;
        let mut area_temp = zone.adiabatic_area * t_new;
        let mut area = zone.adiabatic_area;
        for (s, &(k, drive, solar)) in zone.surfaces.iter().zip(&drives) {
            let conduction = k * (drive - t_new);
            let q = conduction + solar;
            self.gains.push(q);
            gross += q.max(0.0);
            net += q;
            if s.area > 0.0 {
                area_temp += s.area * (t_new + conduction / (s.area * s.interior_film));
                area += s.area;
            }
        }
        let vent = h_vent * (f.t_out - t_new);
        gross += vent.max(0.0);
        net += vent;
        let residual = c_dt * (t_new - t_old) - net;
        if gross > 1e-6 {
            self.max_residual_ratio = self.max_residual_ratio.max(residual.abs() / gross);
        }

        for (a, q) in acc.surfaces.iter_mut().zip(&self.gains) {
            *a += q;
        }
        acc.ventilation += vent;
        acc.internal += internal;
        acc.ach += ach;
        acc.n += 1;

        StepOutput {
            t_air: t_new,
            mrt: if area > 0.0 { area_temp / area } else { t_new },
        }
    }
}

/// Integrate the zone balance over the weather series with implicit Euler steps.
///
/// Weather is interpolated linearly between hourly records. Before recording,
/// the first weather day is cycled `warmup_days` times so the output starts
/// near periodic steady state.
pub fn simulate_with(
    zone: &ZoneModel,
    weather: &WeatherSeries,
    options: &SimulationOptions,
) -> Result<SimulationResult> {
    zone.validate()?;
    if !weather.gaps.is_empty() {
        return Err(Error::WeatherGaps(weather.gaps.clone()));
    }
    let recs = &weather.records;
    if recs.len() < 24 {
        return Err(Error::invalid(format!(
            "simulation needs at least 24 hourly weather records, got {}",
            recs.len()
        )));
    }
    if !weather.is_hourly() {
        return Err(Error::invalid("weather must be hourly; resample sub-hourly data first"));
    }
    let substeps = options.substeps_per_hour.max(1);
    let mut integ = Integrator {
        zone,
        dt: 3600.0 / substeps as f64,
        max_residual_ratio: 0.0,
        gains: Vec::with_capacity(zone.surfaces.len()),
    };
    let n_surf = zone.surfaces.len();

    let run_hour = |integ: &mut Integrator, t: &mut f64, a: &WeatherRecord, b: &WeatherRecord, end: NaiveDateTime| {
        let mut acc = HourAccumulator::new(n_surf);
        let mut mrt = *t;
        for k in 1..=substeps {
            let frac = k as f64 / substeps as f64;
            let time = end - Duration::seconds(((1.0 - frac) * 3600.0).round() as i64);
            let out = integ.step(*t, &interpolate(a, b, frac, time), &mut acc);
            *t = out.t_air;
            mrt = out.mrt;
        }
        (acc, mrt)
    };

    // Warm-up over a periodic first day: hours 0→1, …, 22→23, 23→0.
    let mut t_air = recs[..24].iter().map(|r| r.temperature).sum::<f64>() / 24.0;
    let mut last = (HourAccumulator::new(n_surf), t_air);
    for _ in 0..options.warmup_days {
        for h in 0..24 {
            let (a, b) = (&recs[h], &recs[(h + 1) % 24]);
            let end = recs[h].timestamp + Duration::hours(1);
            last = run_hour(&mut integ, &mut t_air, a, b, end);
        }
    }
    if options.warmup_days == 0 {
        // No history: evaluate flows at the first record without advancing time.
        let mut acc = HourAccumulator::new(n_surf);
        let dt = integ.dt;
        integ.dt = f64::INFINITY;
        let out = integ.step(
            t_air,
            &interpolate(&recs[0], &recs[0], 1.0, recs[0].timestamp),
            &mut acc,
        );
        integ.dt = dt;
        integ.max_residual_ratio = 0.0;
        t_air = out.t_air;
        last = (acc, out.mrt);
    }

    let n = recs.len();
    let mut result = SimulationResult {
        zone: zone.name.clone(),
        timestamps: Vec::with_capacity(n),
        outdoor_temperature: Vec::with_capacity(n),
        air_temperature: Vec::with_capacity(n),
        mean_radiant_temperature: Vec::with_capacity(n),
        resultant_temperature: Vec::with_capacity(n),
        ach: Vec::with_capacity(n),
        ventilation_w: Vec::with_capacity(n),
        internal_w: Vec::with_capacity(n),
        surfaces: zone
            .surfaces
            .iter()
            .map(|s| SurfaceGains {
                id: s.id.clone(),
                kind: s.kind,
                watts: Vec::with_capacity(n),
            })
            .collect(),
        capacitance: zone.capacitance,
        max_residual_ratio: 0.0,
    };
    let push = |res: &mut SimulationResult, i: usize, t_air: f64, mrt: f64, acc: &HourAccumulator| {
        let m = acc.n.max(1) as f64;
        res.timestamps.push(recs[i].timestamp);
        res.outdoor_temperature.push(recs[i].temperature);
        res.air_temperature.push(t_air);
        res.mean_radiant_temperature.push(mrt);
        res.resultant_temperature.push((t_air + mrt) / 2.0);
        res.ach.push(acc.ach / m);
        res.ventilation_w.push(acc.ventilation / m);
        res.internal_w.push(acc.internal / m);
        for (s, q) in res.surfaces.iter_mut().zip(&acc.surfaces) {
            s.watts.push(q / m);
        }
    };
    push(&mut result, 0, t_air, last.1, &last.0);
    for i in 1..n {
        let (acc, mrt) = run_hour(&mut integ, &mut t_air, &recs[i - 1], &recs[i], recs[i].timestamp);
        push(&mut result, i, t_air, mrt, &acc);
    }
    result.max_residual_ratio = integ.max_residual_ratio;
    Ok(result)
}
