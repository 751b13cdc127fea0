// SPDX-License-Identifier: Apache-2.0
//! Command-line front end.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::floorplan::{Floorplan, PowerProfile};
use crate::scheduler::{generate_schedule, CoreOrder, Schedule, ScheduleError, SchedulerConfig};
use crate::sweep::{run_sweep, SweepSpec, ValueList};
use crate::thermal_model::{ThermalModel, ThermalParams};

#[derive(Debug, Parser)]
#[command(
    name = "thermsched",
    version,
    about = "Thermal-aware SoC test schedule generator"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one schedule for a single TL / STCL pair
    Run(RunArgs),
    /// Sweep a TL x STCL grid and emit one CSV row per grid point
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Floorplan in .flp format (name width height left_x bottom_y, meters)
    #[arg(long)]
    pub floorplan: PathBuf,
    /// Power profile CSV (core_id,power_watts,duration_s)
    #[arg(long)]
    pub power: PathBuf,
    /// Flat key = value thermal parameter file
    #[arg(long)]
    pub params: Option<PathBuf>,
    /// Ambient temperature, C
    #[arg(long)]
    pub ambient: Option<f64>,
    /// Silicon conductivity, W/(m K)
    #[arg(long)]
    pub k_silicon: Option<f64>,
    /// Die thickness, m
    #[arg(long)]
    pub die_thickness: Option<f64>,
    /// Area-normalized vertical resistance, K m^2/W
    #[arg(long)]
    pub r_vertical: Option<f64>,
    /// Weight multiplier applied to cores that violate the limit
    #[arg(long, default_value_t = SchedulerConfig::DEFAULT_WEIGHT_FACTOR)]
    pub weight_factor: f64,
    /// Order in which cores are offered to a session
    #[arg(long, value_enum, default_value_t = OrderArg::PowerWeight)]
    pub order: OrderArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    PowerWeight,
    Floorplan,
}

impl From<OrderArg> for CoreOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::PowerWeight => CoreOrder::PowerWeightDesc,
            OrderArg::Floorplan => CoreOrder::Floorplan,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Maximum allowable temperature, C
    #[arg(long)]
    pub tl: f64,
    /// Session thermal characteristic limit, K W
    #[arg(long)]
    pub stcl: f64,
    /// Output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Temperature limits: start:stop:step (inclusive) or a comma list
    #[arg(long)]
    pub sweep_tl: ValueList,
    /// STC limits: start:stop:step (inclusive) or a comma list
    #[arg(long)]
    pub sweep_stcl: ValueList,
    /// CSV output file (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{path}: {msg}")]
    Input { path: PathBuf, msg: String },
    #[error("{0}")]
    Invalid(String),
    #[error("screening failed\n{0}")]
    Screening(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Screening(_) => 2,
            _ => 1,
        }
    }
}

impl From<ScheduleError> for CliError {
    fn from(e: ScheduleError) -> Self {
        match e {
            ScheduleError::Screening(f) => CliError::Screening(f.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

impl InputArgs {
    pub fn load(&self) -> Result<(ThermalModel, PowerProfile), CliError> {
        let fp = Floorplan::parse(&read(&self.floorplan)?).map_err(|e| CliError::Input {
            path: self.floorplan.clone(),
            msg: e.to_string(),
        })?;
        let power = PowerProfile::parse(&read(&self.power)?, &fp).map_err(|e| CliError::Input {
            path: self.power.clone(),
            msg: e.to_string(),
        })?;
        let mut params = match &self.params {
            Some(path) => ThermalParams::parse(&read(path)?).map_err(|e| CliError::Input {
                path: path.clone(),
                msg: e.to_string(),
            })?,
            None => ThermalParams::default(),
        };
        if let Some(v) = self.ambient {
            params.t_ambient = v;
        }
        if let Some(v) = self.k_silicon {
            params.k_silicon = v;
        }
        if let Some(v) = self.die_thickness {
            params.die_thickness = v;
        }
        if let Some(v) = self.r_vertical {
            params.r_vertical_per_area = v;
        }
        params
            .validate()
            .map_err(|e| CliError::Invalid(e.to_string()))?;
        Ok((ThermalModel::new(fp, params), power))
    }

    fn config(&self, tl: f64, stcl: f64) -> SchedulerConfig {
        SchedulerConfig {
            weight_factor: self.weight_factor,
            core_order: self.order.into(),
            ..SchedulerConfig::new(tl, stcl)
        }
    }
}

/// Human-readable schedule summary.
pub fn render_text(schedule: &Schedule, model: &ThermalModel, cfg: &SchedulerConfig) -> String {
    use std::fmt::Write as _;
    let fp = model.floorplan();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "TL {} C, STCL {}, weight factor {}",
        cfg.tl, cfg.stcl, cfg.weight_factor
    );
    for (n, s) in schedule.sessions.iter().enumerate() {
        let ids: Vec<&str> = s.cores.iter().map(|&c| fp.id(c)).collect();
        let _ = writeln!(
            out,
            "session {:>2}: {:<40} {:>6} s  peak {:.2} C ({})",
            n + 1,
            ids.join(" "),
            s.duration,
            s.result.peak,
            fp.id(s.result.peak_core)
        );
    }
    let _ = writeln!(
        out,
        "schedule length {} s, simulation effort {} s, {} discarded session(s), max temperature {:.2} C",
        schedule.total_length,
        schedule.simulation_effort,
        schedule.discarded_sessions,
        schedule.max_temperature()
    );
    out
}

pub fn run_single(args: &RunArgs) -> Result<(), CliError> {
    let (model, power) = args.input.load()?;
    let cfg = args.input.config(args.tl, args.stcl);
    let schedule = generate_schedule(&model, &power, &cfg)?;
    let text = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&schedule.to_document(&model, &cfg))
                .map_err(|e| CliError::Invalid(e.to_string()))?;
            s.push('\n');
            s
        }
        Format::Text => render_text(&schedule, &model, &cfg),
    };
    write_output(args.out.as_deref(), &text)?;
    if args.out.is_some() || args.format == Format::Json {
        eprint!("{}", render_text(&schedule, &model, &cfg));
    }
    Ok(())
}

pub fn run_sweep_cmd(args: &SweepArgs) -> Result<(), CliError> {
    let (model, power) = args.input.load()?;
    let spec = SweepSpec {
        tl_values: args.sweep_tl.0.clone(),
        stcl_values: args.sweep_stcl.0.clone(),
        base: args.input.config(args.sweep_tl.0[0], args.sweep_stcl.0[0]),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let outcome = pool.install(|| run_sweep(&model, &power, &spec))?;
    for failure in &outcome.skipped {
        eprintln!("skipping TL {} C: {}", failure.tl, failure);
    }
    if outcome.rows.is_empty() && !outcome.skipped.is_empty() {
        let msgs: Vec<String> = outcome.skipped.iter().map(ToString::to_string).collect();
        return Err(CliError::Screening(msgs.join("\n")));
    }
    write_output(args.out.as_deref(), &outcome.to_csv())
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Run(args) => run_single(args),
        Command::Sweep(args) => run_sweep_cmd(args),
    }
}
