//! Command-line surface: argument grammar and dispatch to the core
//! operations.
//!
//! Exit codes follow the usual contract: 0 on success, 1 when the data
//! violates the model (superlinear speedup, insufficient observations),
//! 2 for usage and parse errors.

use std::collections::BTreeMap;
use std::fs::File;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use scalelaw_core::{
    amdahl_limit, amdahl_speedup, fit_two_part_model, generate_timings, gustafson_experiment,
    gustafson_speedup, speedup_curve, verify_equivalence, Error as CoreError, MisspecSpec,
    NoiseSpec, Overhead, ScalingScenario, SerialFraction, TimingRecord,
};

use crate::report::{
    emit, CurveReport, FitReport, FractionReport, LimitReport, ReportFormat, SpeedupReport,
    TimingsReport, VerifyReport,
};
use crate::timing_csv::{parse_timing_csv, CsvError};

/// Failures split by exit code: usage problems exit 2, data that breaks the
/// model exits 1.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::ModelViolation(_)
            | CoreError::InsufficientData(_)
            | CoreError::InternalInvariant(_) => CliError::Domain(err.to_string()),
            CoreError::InvalidArgument(_) | CoreError::FrameMismatch { .. } => {
                CliError::Usage(err.to_string())
            }
        }
    }
}

impl From<CsvError> for CliError {
    fn from(err: CsvError) -> Self {
        CliError::Usage(err.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "scalelaw",
    version,
    about = "Scalability analysis with the two-part (serial + parallel) execution-time model"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predict the speedup on p processors from a serial fraction
    Predict(PredictArgs),
    /// Upper bound on the speedup, over all processor counts
    Limit(LimitArgs),
    /// Convert a serial fraction between the base and on-p frames
    Convert(ConvertArgs),
    /// Fit the two-part model to measured timings from a CSV file
    Fit(FitArgs),
    /// Generate synthetic timing records from a scaling scenario
    Simulate(SimulateArgs),
    /// Check that the two speedup laws agree over a parameter grid
    Verify(VerifyArgs),
    /// Sample the speedup curve over processor counts
    Curve(CurveArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Law {
    Amdahl,
    Gustafson,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FrameArg {
    /// Measured on the single-processor machine
    Base,
    /// Measured on the p-processor machine itself
    OnP,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScenarioKind {
    /// Constant serial time, parallel work linear in n
    FixedSerial,
    /// Polynomial growth of both parts
    Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OverheadKind {
    None,
    /// Adds c seconds per processor
    Linear,
    /// Adds c·ln(p) seconds
    Log,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    /// Speedup law to apply
    #[arg(long, value_enum)]
    law: Law,
    /// Serial fraction, as a decimal (0.1) or a ratio (1/10)
    #[arg(long, value_parser = parse_fraction)]
    beta: f64,
    /// Processor count
    #[arg(long)]
    p: u32,
    /// Frame the fraction was measured in; defaults to the law's native
    /// frame (base for amdahl, on-p for gustafson), converting if needed
    #[arg(long, value_enum)]
    frame: Option<FrameArg>,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct LimitArgs {
    /// Serial fraction in the base frame, as a decimal or a ratio
    #[arg(long, value_parser = parse_fraction)]
    beta: f64,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Serial fraction to convert, as a decimal or a ratio
    #[arg(long, value_parser = parse_fraction)]
    beta: f64,
    /// Processor count of the on-p frame
    #[arg(long)]
    p: u32,
    /// Target frame; the fraction is read as being in the other frame
    #[arg(long, value_enum)]
    to: FrameArg,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    /// CSV file with columns n,p,time[,replicate]
    #[arg(long)]
    input: PathBuf,
    /// Fit only this problem size (default: fit each n in the file)
    #[arg(long)]
    n: Option<u64>,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long, value_enum)]
    scenario: ScenarioKind,
    /// Serial fraction of the baseline run, strictly between 0 and 1
    #[arg(long, value_parser = parse_fraction)]
    beta_s: f64,
    /// Baseline time T(1,1) in seconds
    #[arg(long)]
    baseline: f64,
    /// Growth exponent of the serial part (poly scenario only)
    #[arg(long)]
    serial_degree: Option<u32>,
    /// Growth exponent of the parallel part (poly scenario only)
    #[arg(long)]
    parallel_degree: Option<u32>,
    /// Problem sizes: comma list and inclusive ranges, e.g. 1,2,4 or 1..32
    #[arg(long)]
    n: Option<String>,
    /// Processor counts, same list/range syntax
    #[arg(long)]
    p: String,
    /// Relative std-dev of multiplicative Gaussian noise (default: none)
    #[arg(long)]
    sigma: Option<f64>,
    /// Seed of the noise stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "none")]
    overhead: OverheadKind,
    /// Overhead coefficient in seconds
    #[arg(long)]
    overhead_c: Option<f64>,
    /// Couple n = p and report the measured scaled speedup instead of records
    #[arg(long)]
    gustafson_coupling: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Number of evenly spaced fractions spanning [0, 1]
    #[arg(long)]
    beta_steps: u32,
    /// Check every processor count from 1 to this value
    #[arg(long)]
    p_max: u32,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    /// Serial fraction in the base frame
    #[arg(long, value_parser = parse_fraction)]
    beta: Option<f64>,
    /// Derive the fraction from a scaling scenario at problem size --n
    #[arg(long, value_enum)]
    scenario: Option<ScenarioKind>,
    #[arg(long, value_parser = parse_fraction)]
    beta_s: Option<f64>,
    #[arg(long)]
    baseline: Option<f64>,
    #[arg(long)]
    serial_degree: Option<u32>,
    #[arg(long)]
    parallel_degree: Option<u32>,
    /// Problem size at which the scenario's fraction is taken
    #[arg(long)]
    n: Option<u64>,
    /// Processor counts, strictly increasing; comma list and ranges
    #[arg(long)]
    p: String,
    /// Add the strong-scaling bound as a constant column
    #[arg(long)]
    with_limit: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
}

/// Parses a fraction given as a decimal (`0.1`) or a ratio (`1/10`).
pub fn parse_fraction(raw: &str) -> Result<f64, String> {
    let value = if let Some((numerator, denominator)) = raw.split_once('/') {
        let numerator: f64 = numerator
            .trim()
            .parse()
            .map_err(|_| format!("invalid ratio numerator '{numerator}'"))?;
        let denominator: f64 = denominator
            .trim()
            .parse()
            .map_err(|_| format!("invalid ratio denominator '{denominator}'"))?;
        if denominator == 0.0 {
            return Err(String::from("ratio denominator must be nonzero"));
        }
        numerator / denominator
    } else {
        raw.trim()
            .parse()
            .map_err(|_| format!("'{raw}' is neither a decimal nor a ratio fraction"))?
    };
    if !value.is_finite() || !(0.0..=1.0).contains(&value) {
        return Err(format!("fraction must lie in [0, 1], got {value}"));
    }
    Ok(value)
}

fn parse_list(raw: &str, what: &str) -> Result<Vec<u64>, CliError> {
    let mut values = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once("..") {
            let lo: u64 = lo.trim().parse().map_err(|_| {
                CliError::Usage(format!("invalid {what} range start '{lo}' in '{raw}'"))
            })?;
            let hi: u64 = hi.trim().parse().map_err(|_| {
                CliError::Usage(format!("invalid {what} range end '{hi}' in '{raw}'"))
            })?;
            if lo > hi {
                return Err(CliError::Usage(format!("{what} range {lo}..{hi} is empty")));
            }
            values.extend(lo..=hi);
        } else {
            values.push(part.parse().map_err(|_| {
                CliError::Usage(format!("invalid {what} value '{part}' in '{raw}'"))
            })?);
        }
    }
    if values.is_empty() {
        return Err(CliError::Usage(format!("{what} list is empty")));
    }
    Ok(values)
}

fn parse_p_list(raw: &str) -> Result<Vec<u32>, CliError> {
    parse_list(raw, "processor-count")?
        .into_iter()
        .map(|value| {
            u32::try_from(value)
                .map_err(|_| CliError::Usage(format!("processor count {value} is out of range")))
        })
        .collect()
}

fn build_scenario(
    kind: ScenarioKind,
    beta_s: f64,
    baseline: f64,
    serial_degree: Option<u32>,
    parallel_degree: Option<u32>,
) -> Result<ScalingScenario, CliError> {
    match kind {
        ScenarioKind::FixedSerial => {
            if serial_degree.is_some() || parallel_degree.is_some() {
                return Err(CliError::Usage(String::from(
                    "--serial-degree/--parallel-degree apply only to --scenario poly",
                )));
            }
            Ok(ScalingScenario::fixed_serial(beta_s, baseline)?)
        }
        ScenarioKind::Poly => {
            let (serial, parallel) = match (serial_degree, parallel_degree) {
                (Some(s), Some(p)) => (s, p),
                _ => {
                    return Err(CliError::Usage(String::from(
                        "--scenario poly requires --serial-degree and --parallel-degree",
                    )))
                }
            };
            Ok(ScalingScenario::polynomial_growth(
                serial, parallel, beta_s, baseline,
            )?)
        }
    }
}

/// Runs one parsed command and returns the rendered report.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Predict(args) => predict(args),
        Command::Limit(args) => limit(args),
        Command::Convert(args) => convert(args),
        Command::Fit(args) => fit(args),
        Command::Simulate(args) => simulate(args),
        Command::Verify(args) => verify(args),
        Command::Curve(args) => curve(args),
    }
}

fn predict(args: PredictArgs) -> Result<String, CliError> {
    let speedup = match args.law {
        Law::Amdahl => {
            let beta = match args.frame.unwrap_or(FrameArg::Base) {
                FrameArg::Base => SerialFraction::base(args.beta)?,
                FrameArg::OnP => SerialFraction::on_p(args.beta, args.p)?.to_base()?,
            };
            amdahl_speedup(&beta, args.p)?
        }
        Law::Gustafson => {
            let beta = match args.frame.unwrap_or(FrameArg::OnP) {
                FrameArg::OnP => SerialFraction::on_p(args.beta, args.p)?,
                FrameArg::Base => SerialFraction::base(args.beta)?.to_on_p(args.p)?,
            };
            gustafson_speedup(&beta, args.p)?
        }
    };
    Ok(emit(&SpeedupReport(speedup), args.format))
}

fn limit(args: LimitArgs) -> Result<String, CliError> {
    let bound = amdahl_limit(&SerialFraction::base(args.beta)?)?;
    Ok(emit(&LimitReport(bound), args.format))
}

fn convert(args: ConvertArgs) -> Result<String, CliError> {
    let converted = match args.to {
        FrameArg::OnP => SerialFraction::base(args.beta)?.to_on_p(args.p)?,
        FrameArg::Base => SerialFraction::on_p(args.beta, args.p)?.to_base()?,
    };
    Ok(emit(&FractionReport(converted), args.format))
}

fn fit(args: FitArgs) -> Result<String, CliError> {
    let file = File::open(&args.input)
        .map_err(|err| CliError::Usage(format!("cannot open '{}': {err}", args.input.display())))?;
    let records = parse_timing_csv(file)?;

    let mut groups: BTreeMap<u64, Vec<TimingRecord>> = BTreeMap::new();
    for record in records {
        groups.entry(record.n()).or_default().push(record);
    }
    let selected: Vec<&Vec<TimingRecord>> = match args.n {
        Some(n) => vec![groups.get(&n).ok_or_else(|| {
            CliError::Domain(format!(
                "insufficient data: no records with n = {n} in '{}'",
                args.input.display()
            ))
        })?],
        None => groups.values().collect(),
    };
    if selected.is_empty() {
        return Err(CliError::Domain(format!(
            "insufficient data: '{}' contains no data rows",
            args.input.display()
        )));
    }

    let fits = selected
        .into_iter()
        .map(|group| fit_two_part_model(group))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(emit(&FitReport(fits), args.format))
}

fn simulate(args: SimulateArgs) -> Result<String, CliError> {
    let scenario = build_scenario(
        args.scenario,
        args.beta_s,
        args.baseline,
        args.serial_degree,
        args.parallel_degree,
    )?;
    if args.overhead == OverheadKind::None && args.overhead_c.is_some() {
        return Err(CliError::Usage(String::from(
            "--overhead-c requires --overhead linear or --overhead log",
        )));
    }

    let mut p_values = parse_p_list(&args.p)?;
    p_values.sort_unstable();
    p_values.dedup();

    if args.gustafson_coupling {
        if args.n.is_some() || args.sigma.is_some() || args.overhead != OverheadKind::None {
            return Err(CliError::Usage(String::from(
                "--gustafson-coupling sets n = p and generates noise-free times; \
                 it conflicts with --n, --sigma and --overhead",
            )));
        }
        let curve = gustafson_experiment(&scenario, &p_values)?;
        return Ok(emit(&CurveReport { curve, limit: None }, args.format));
    }

    let n_raw = args.n.as_deref().ok_or_else(|| {
        CliError::Usage(String::from(
            "--n is required unless --gustafson-coupling is given",
        ))
    })?;
    let n_values = parse_list(n_raw, "problem-size")?;

    let noise = match args.sigma {
        Some(sigma) => NoiseSpec::multiplicative(sigma, args.seed)?,
        None => NoiseSpec::none(),
    };
    let overhead = match args.overhead {
        OverheadKind::None => Overhead::None,
        kind => {
            let c = args.overhead_c.ok_or_else(|| {
                CliError::Usage(String::from("--overhead linear/log requires --overhead-c"))
            })?;
            match kind {
                OverheadKind::Linear => Overhead::LinearInP(c),
                _ => Overhead::LogInP(c),
            }
        }
    };
    let misspec = MisspecSpec::with_overhead(overhead)?;

    let records = generate_timings(&scenario, &n_values, &p_values, &noise, &misspec)?;
    Ok(emit(&TimingsReport(records), args.format))
}

fn verify(args: VerifyArgs) -> Result<String, CliError> {
    if args.beta_steps < 2 {
        return Err(CliError::Usage(String::from("--beta-steps must be >= 2")));
    }
    if args.p_max < 1 {
        return Err(CliError::Usage(String::from("--p-max must be >= 1")));
    }
    let last = f64::from(args.beta_steps - 1);
    let betas: Vec<f64> = (0..args.beta_steps).map(|k| f64::from(k) / last).collect();
    let ps: Vec<u32> = (1..=args.p_max).collect();
    let max_relative_deviation = verify_equivalence(&betas, &ps)?;
    Ok(emit(
        &VerifyReport {
            beta_steps: args.beta_steps,
            p_max: args.p_max,
            max_relative_deviation,
        },
        args.format,
    ))
}

fn curve(args: CurveArgs) -> Result<String, CliError> {
    let beta = match (args.beta, args.scenario) {
        (Some(value), None) => SerialFraction::base(value)?,
        (None, Some(kind)) => {
            let (beta_s, baseline, n) = match (args.beta_s, args.baseline, args.n) {
                (Some(beta_s), Some(baseline), Some(n)) => (beta_s, baseline, n),
                _ => {
                    return Err(CliError::Usage(String::from(
                        "--scenario needs --beta-s, --baseline and --n",
                    )))
                }
            };
            let scenario = build_scenario(
                kind,
                beta_s,
                baseline,
                args.serial_degree,
                args.parallel_degree,
            )?;
            scenario.serial_fraction_at(n)?
        }
        _ => {
            return Err(CliError::Usage(String::from(
                "give exactly one fraction source: --beta or --scenario ...",
            )))
        }
    };
    let p_values = parse_p_list(&args.p)?;
    let curve = speedup_curve(&beta, &p_values)?;
    let limit = if args.with_limit {
        Some(amdahl_limit(&beta)?)
    } else {
        None
    };
    Ok(emit(&CurveReport { curve, limit }, args.format))
}
