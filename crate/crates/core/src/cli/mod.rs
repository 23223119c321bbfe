//! Command-line front end. Exit codes: 0 pass / success, 1 compliance failure,
//! 2 usage or input error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::building::BuildingDescription;
use crate::comfort::{
    discomfort_stats, indoor_temperatures, paired_offset, points_from_indoor, points_from_simulation,
    psychro_scatter_export, resultant_series, ComfortStats, ComfortZone, OffsetStats,
};
use crate::error::{Error, Result};
use crate::io::{
    load_building, load_indoor, load_weather, synthetic_weather, IndoorSeries, SyntheticWeather, WeatherFormat,
    WeatherSeries,
};
use crate::rules::{compliance_report, ReportOptions, RuleCatalogue, SiRule};
use crate::thermal::{gain_breakdown, simulate_with, GainBreakdown, Scenario, SimulationResult, ZoneModel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "ecodom",
    version,
    about = "Check tropical dwelling designs against passive-cooling prescriptions and evaluate them thermally",
    after_help = "Exit codes: 0 pass/success, 1 compliance failure, 2 usage or input error."
)]
pub struct Cli {
    /// Rule catalogue JSON (a `<file>.sha256` sidecar is verified when present).
    #[arg(long, global = true, env = "ECODOM_CATALOGUE", value_name = "PATH")]
    pub catalogue: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the prescriptive compliance check on a building description.
    Check(CheckArgs),
    /// Simulate a building over a weather series and write hourly results as CSV.
    Simulate(SimulateArgs),
    /// Comfort-zone statistics and psychrometric plot data for an indoor series.
    Comfort(ComfortArgs),
    /// Write a synthetic hot-season weather CSV.
    SynthWeather(SynthArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Building description JSON.
    pub building: PathBuf,
    /// Internal-opening requirement: Si >= min(So1, So2) or Si >= max(So1, So2).
    #[arg(long, value_enum, default_value_t = SiRule::Min)]
    pub si_rule: SiRule,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Building description JSON (optional when the scenario names one).
    pub building: Option<PathBuf>,
    /// Weather CSV; synthetic weather from the scenario is used when absent.
    #[arg(long, value_name = "PATH")]
    pub weather: Option<PathBuf>,
    /// Scenario TOML with zone and simulation overrides.
    #[arg(long, value_name = "PATH")]
    pub scenario: Option<PathBuf>,
    /// Second building simulated with the same weather; prints the resultant offset (first − second).
    #[arg(long, value_name = "PATH")]
    pub paired: Option<PathBuf>,
    /// Average sub-hourly weather to hourly before simulating.
    #[arg(long)]
    pub resample: bool,
    /// Result CSV path; without it the CSV goes to stdout and no summary is printed.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComfortArgs {
    /// Indoor CSV.
    pub indoor: PathBuf,
    /// Comfort-zone override JSON.
    #[arg(long, value_name = "PATH")]
    pub zone: Option<PathBuf>,
    /// Two zone ids of the series; prints the offset of the first over the second.
    #[arg(long, num_args = 2, value_names = ["ZONE_A", "ZONE_B"])]
    pub paired: Option<Vec<String>>,
    /// Psychrometric scatter CSV path.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long, default_value_t = 7)]
    pub days: u32,
    #[arg(long, default_value_t = 31.0)]
    pub t_max: f64,
    #[arg(long, default_value_t = 24.0)]
    pub t_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub wind_speed: f64,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let Error::Validation(list) = &e {
                for v in list {
                    let _ = writeln!(err, "  {v}");
                }
            }
            EXIT_INPUT
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Check(a) => cmd_check(cli, a, out),
        Command::Simulate(a) => cmd_simulate(cli, a, out),
        Command::Comfort(a) => cmd_comfort(cli, a, out),
        Command::SynthWeather(a) => cmd_synth(a, out),
    }
}

fn catalogue(cli: &Cli) -> Result<RuleCatalogue> {
    match &cli.catalogue {
        Some(p) => RuleCatalogue::load(p),
        None => Ok(RuleCatalogue::bundled()),
    }
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::io(path, e))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn cmd_check(cli: &Cli, a: &CheckArgs, out: &mut dyn Write) -> Result<i32> {
    let cat = catalogue(cli)?;
    let building = load_building(&a.building)?;
    let report = compliance_report(&building, &cat, ReportOptions { si_rule: a.si_rule })?;
    let text = match cli.format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => report.to_json(),
    };
    match &a.out {
        Some(p) => {
            write_file(p, &text)?;
            emit(out, &format!("{}: {}\n", report.building, report.overall.as_str()))?;
        }
        None => emit(out, &text)?,
    }
    Ok(if report.passed() { EXIT_OK } else { EXIT_FAIL })
}

#[derive(Debug, Serialize)]
struct RunSummary {
    building: String,
    hours: usize,
    mean_resultant_c: f64,
    peak_resultant_c: f64,
    mean_air_c: f64,
    mean_ach: f64,
    min_ach: f64,
    max_ach: f64,
    gains: GainBreakdown,
    discomfort: ComfortStats,
}

#[derive(Debug, Serialize)]
struct SimulateSummary {
    runs: Vec<RunSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    resultant_offset: Option<OffsetStats>,
}

fn summarize(res: &SimulationResult, weather: &WeatherSeries) -> Result<RunSummary> {
    let n = res.len() as f64;
    let mean = |v: &[f64]| v.iter().sum::<f64>() / n;
    let points = points_from_simulation(res, weather)?;
    Ok(RunSummary {
        building: res.zone.clone(),
        hours: res.len(),
        mean_resultant_c: mean(&res.resultant_temperature),
        peak_resultant_c: res.resultant_temperature.iter().copied().fold(f64::MIN, f64::max),
        mean_air_c: mean(&res.air_temperature),
        mean_ach: mean(&res.ach),
        min_ach: res.ach.iter().copied().fold(f64::MAX, f64::min),
        max_ach: res.ach.iter().copied().fold(f64::MIN, f64::max),
        gains: gain_breakdown(res),
        discomfort: discomfort_stats(&points, &ComfortZone::default(), 1.0)?,
    })
}

fn run_text(r: &RunSummary) -> String {
    format!(
        "{}: {} h, resultant mean {:.2} °C peak {:.2} °C, air mean {:.2} °C, ACH mean {:.1} (min {:.1}, max {:.1})\n  envelope gains: roof {:.1}%, walls {:.1}%, windows {:.1}%; discomfort {:.1}%\n",
        r.building,
        r.hours,
        r.mean_resultant_c,
        r.peak_resultant_c,
        r.mean_air_c,
        r.mean_ach,
        r.min_ach,
        r.max_ach,
        100.0 * r.gains.roof,
        100.0 * r.gains.walls,
        100.0 * r.gains.windows,
        100.0 * r.discomfort.discomfort_fraction,
    )
}

fn offset_text(o: &OffsetStats) -> String {
    format!(
        "resultant offset (first - second): mean {:.2} °C, max {:.2} °C, min {:.2} °C, >= 1 °C for {:.1}% of hours\n",
        o.mean,
        o.max,
        o.min,
        100.0 * o.fraction_at_least_1c
    )
}

pub fn cmd_simulate(cli: &Cli, a: &SimulateArgs, out: &mut dyn Write) -> Result<i32> {
    let scenario = match &a.scenario {
        Some(p) => Scenario::load(p)?,
        None => Scenario::default(),
    };
    let building_path = a
        .building
        .clone()
        .or_else(|| scenario.building.clone())
        .ok_or_else(|| Error::invalid("no building given (argument or scenario `building`)"))?;
    let building = load_building(&building_path)?;
    let weather = match a.weather.clone().or_else(|| scenario.weather.clone()) {
        Some(p) => load_weather(
            &p,
            &WeatherFormat {
                resample_hourly: a.resample,
                ..WeatherFormat::default()
            },
        )?,
        None => synthetic_weather(&scenario.synthetic)?,
    };
    let run = |b: &BuildingDescription| -> Result<SimulationResult> {
        let zone = ZoneModel::from_building(b, &scenario.zone)?;
        simulate_with(&zone, &weather, &scenario.simulation)
    };
    let first = run(&building)?;
    let mut summary = SimulateSummary {
        runs: vec![summarize(&first, &weather)?],
        resultant_offset: None,
    };
    if let Some(p) = &a.paired {
        let second = run(&load_building(p)?)?;
        summary.resultant_offset = Some(paired_offset(&resultant_series(&first), &resultant_series(&second))?);
        summary.runs.push(summarize(&second, &weather)?);
    }

    let Some(path) = &a.out else {
        emit(out, &first.to_csv_string())?;
        return Ok(EXIT_OK);
    };
    write_file(path, &first.to_csv_string())?;
    let text = match cli.format {
        OutputFormat::Json => to_json(&summary),
        OutputFormat::Text => {
            let mut s: String = summary.runs.iter().map(run_text).collect();
            if let Some(o) = &summary.resultant_offset {
                s.push_str(&offset_text(o));
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct ZoneComfort {
    zone: String,
    stats: ComfortStats,
}

/// Median spacing of consecutive timestamps, hours (1 when undefined).
fn sample_hours(series: &IndoorSeries) -> f64 {
    let mut steps: Vec<f64> = series
        .records
        .windows(2)
        .map(|w| (w[1].timestamp - w[0].timestamp).num_seconds() as f64 / 3600.0)
        .collect();
    if steps.is_empty() {
        return 1.0;
    }
    steps.sort_by(f64::total_cmp);
    steps[steps.len() / 2]
}

pub fn cmd_comfort(cli: &Cli, a: &ComfortArgs, out: &mut dyn Write) -> Result<i32> {
    let zone = match &a.zone {
        Some(p) => ComfortZone::load(p)?,
        None => ComfortZone::default(),
    };
    let series = load_indoor(&a.indoor)?;
    if series.is_empty() {
        return Err(Error::invalid(format!("{}: no samples", a.indoor.display())));
    }
    let mut zones = Vec::new();
    for id in series.zones() {
        let part = series.zone(&id);
        let mut stats = discomfort_stats(&points_from_indoor(&part)?, &zone, sample_hours(&part))?;
        if let Some(pair) = &a.paired {
            if pair[0] == id {
                let other = series.zone(&pair[1]);
                if other.is_empty() {
                    return Err(Error::invalid(format!("zone {:?} not found in the series", pair[1])));
                }
                stats.paired_offset = Some(paired_offset(
                    &indoor_temperatures(&part),
                    &indoor_temperatures(&other),
                )?);
            }
        }
        zones.push(ZoneComfort { zone: id, stats });
    }
    if let Some(pair) = &a.paired {
        if !zones.iter().any(|z| z.zone == pair[0]) {
            return Err(Error::invalid(format!("zone {:?} not found in the series", pair[0])));
        }
    }
    if let Some(p) = &a.out {
        write_file(p, &psychro_scatter_export(&points_from_indoor(&series)?, &zone))?;
    }
    let text = match cli.format {
        OutputFormat::Json => to_json(&zones),
        OutputFormat::Text => {
            let mut s = String::new();
            for z in &zones {
                let st = &z.stats;
                s.push_str(&format!(
                    "zone {}: discomfort {:.1}% ({} of {} samples, {:.1} h), exceedance mean {:.2} °C max {:.2} °C\n",
                    z.zone,
                    100.0 * st.discomfort_fraction,
                    st.outside_samples,
                    st.samples,
                    st.total_hours,
                    st.mean_exceedance_c,
                    st.max_exceedance_c
                ));
                if let Some(o) = &st.paired_offset {
                    s.push_str(&format!(
                        "  vs {}: {}",
                        a.paired.as_ref().map_or("", |p| p[1].as_str()),
                        offset_text(o)
                    ));
                }
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(EXIT_OK)
}

pub fn cmd_synth(a: &SynthArgs, out: &mut dyn Write) -> Result<i32> {
    let series = synthetic_weather(&SyntheticWeather {
        days: a.days,
        t_max: a.t_max,
        t_min: a.t_min,
        wind_speed: a.wind_speed,
        ..SyntheticWeather::default()
    })?;
    let csv = series.to_csv_string();
    match &a.out {
        Some(p) => write_file(p, &csv)?,
        None => emit(out, &csv)?,
    }
    Ok(EXIT_OK)
}
