// SPDX-License-Identifier: Apache-2.0
//! Thermal-safe test schedule generation.
//!
//! Stage 1 simulates every core alone and refuses to continue if any of them
//! reaches the temperature limit. Stage 2 repeatedly packs a session greedily
//! under the session thermal characteristic limit, simulates it, and either
//! accepts it or discards it after penalizing the weights of the cores that
//! overheated.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::floorplan::PowerProfile;
use crate::thermal_model::{Session, ThermalModel, ThermalParams, Weights};
use crate::thermal_sim::{simulate_session, SimError, SimulationResult};

/// Margin added to the hottest singleton temperature when suggesting a limit.
pub const SUGGESTED_TL_MARGIN: f64 = 1e-6;

/// Order in which available cores are offered to a session.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoreOrder {
    /// Descending `P * W`, ties broken by ascending id.
    #[default]
    PowerWeightDesc,
    /// Floorplan file order.
    Floorplan,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SchedulerConfig {
    /// Maximum allowable temperature, degrees C.
    pub tl: f64,
    /// Session thermal characteristic limit, K W.
    pub stcl: f64,
    pub weight_factor: f64,
    pub core_order: CoreOrder,
}

impl SchedulerConfig {
    pub const DEFAULT_WEIGHT_FACTOR: f64 = 1.1;

    pub fn new(tl: f64, stcl: f64) -> Self {
        Self {
            tl,
            stcl,
            weight_factor: Self::DEFAULT_WEIGHT_FACTOR,
            core_order: CoreOrder::default(),
        }
    }

    pub fn validate(&self, params: &ThermalParams) -> Result<(), ConfigError> {
        if !(self.tl > params.t_ambient) || !self.tl.is_finite() {
            return Err(ConfigError::LimitBelowAmbient {
                tl: self.tl,
                ambient: params.t_ambient,
            });
        }
        // A finite limit is what eventually isolates a repeat violator: its
        // growing weight pushes every session containing it past the limit.
        if !(self.stcl > 0.0) || !self.stcl.is_finite() {
            return Err(ConfigError::InvalidStcl(self.stcl));
        }
        if !(self.weight_factor > 1.0) || !self.weight_factor.is_finite() {
            return Err(ConfigError::WeightFactor(self.weight_factor));
        }
        Ok(())
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("temperature limit {tl} must exceed ambient {ambient}")]
    LimitBelowAmbient { tl: f64, ambient: f64 },
    #[error("session thermal characteristic limit must be positive and finite, got {0}")]
    InvalidStcl(f64),
    #[error("weight factor must be greater than 1, got {0}")]
    WeightFactor(f64),
}

/// Hottest standalone temperature of one core.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreScreen {
    pub core: String,
    pub bcmt: f64,
}

/// Stage-1 result: every core's standalone peak, in floorplan order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Stage1Report {
    pub cores: Vec<CoreScreen>,
}

impl Stage1Report {
    pub fn max_bcmt(&self) -> f64 {
        self.cores
            .iter()
            .map(|c| c.bcmt)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Cores that overheat even when tested alone.
#[derive(Debug, Clone, PartialEq)]
pub struct ScreeningFailure {
    pub tl: f64,
    pub violations: Vec<CoreScreen>,
    /// Smallest limit that the current design would pass.
    pub suggested_tl: f64,
    pub report: Stage1Report,
}

impl fmt::Display for ScreeningFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} core(s) reach the temperature limit {} C when tested alone:",
            self.violations.len(),
            self.tl
        )?;
        for v in &self.violations {
            writeln!(f, "  {}: {:.4} C", v.core, v.bcmt)?;
        }
        write!(
            f,
            "fix the core-level test or raise the limit to at least {:.6} C",
            self.suggested_tl
        )
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ScheduleError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Screening(Box<ScreeningFailure>),
    #[error(transparent)]
    Simulation(#[from] SimError),
}

/// Simulates every core as a singleton session and checks it against `tl`.
pub fn screen_cores(
    model: &ThermalModel,
    power: &PowerProfile,
    tl: f64,
) -> Result<Stage1Report, ScheduleError> {
    let mut cores = Vec::with_capacity(model.core_count());
    for i in 0..model.core_count() {
        let result = simulate_session(model, power, &Session::from([i]))?;
        cores.push(CoreScreen {
            core: model.floorplan().id(i).to_string(),
            bcmt: result.temps[i],
        });
    }
    let report = Stage1Report { cores };
    let violations: Vec<CoreScreen> = report
        .cores
        .iter()
        .filter(|c| c.bcmt >= tl)
        .cloned()
        .collect();
    if violations.is_empty() {
        return Ok(report);
    }
    Err(ScheduleError::Screening(Box::new(ScreeningFailure {
        tl,
        suggested_tl: report.max_bcmt() + SUGGESTED_TL_MARGIN,
        violations,
        report,
    })))
}

/// Sorts `cores` in the order they are offered to a session.
pub fn order_cores(
    cores: &mut [usize],
    order: CoreOrder,
    model: &ThermalModel,
    power: &PowerProfile,
    weights: &Weights,
) {
    match order {
        CoreOrder::Floorplan => cores.sort_unstable(),
        CoreOrder::PowerWeightDesc => cores.sort_by(|&a, &b| {
            let ka = power.power(a) * weights.get(a);
            let kb = power.power(b) * weights.get(b);
            kb.partial_cmp(&ka)
                .unwrap_or(Ordering::Equal)
                .then_with(|| model.floorplan().id(a).cmp(model.floorplan().id(b)))
        }),
    }
}

/// Greedily packs one session from `available`.
///
/// Each candidate is kept iff the STC of the enlarged session stays within
/// `stcl`. The first candidate is always kept: it passed screening alone, and
/// without it a core whose own STC exceeds the limit could never be scheduled.
pub fn build_session(
    available: &[usize],
    weights: &Weights,
    cfg: &SchedulerConfig,
    model: &ThermalModel,
    power: &PowerProfile,
) -> Session {
    let mut candidates = available.to_vec();
    order_cores(&mut candidates, cfg.core_order, model, power, weights);
    let mut session = Session::new();
    for core in candidates {
        if session.is_empty() {
            session.insert(core);
            continue;
        }
        session.insert(core);
        if model.session_stc(&session, power, weights) > cfg.stcl {
            session.remove(&core);
        }
    }
    session
}

/// An accepted session with its validation result.
#[derive(Debug, Clone, PartialEq)]
pub struct TestSession {
    /// Floorplan indices, ascending.
    pub cores: Vec<usize>,
    pub duration: f64,
    pub result: SimulationResult,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Schedule {
    pub sessions: Vec<TestSession>,
    /// Sum of session durations, s.
    pub total_length: f64,
    /// Total duration of every simulated session, accepted or discarded, s.
    pub simulation_effort: f64,
    pub discarded_sessions: usize,
    pub stage1: Stage1Report,
    pub final_weights: Weights,
    /// Number of discarded sessions in which each core reached the limit.
    pub violation_counts: Vec<usize>,
}

impl Schedule {
    /// Hottest simulated temperature over all accepted sessions.
    pub fn max_temperature(&self) -> f64 {
        self.sessions
            .iter()
            .map(|s| s.result.peak)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Runs screening, then builds, validates and accepts sessions until every
/// core is scheduled.
pub fn generate_schedule(
    model: &ThermalModel,
    power: &PowerProfile,
    cfg: &SchedulerConfig,
) -> Result<Schedule, ScheduleError> {
    cfg.validate(model.params())?;
    let stage1 = screen_cores(model, power, cfg.tl)?;

    let mut weights = Weights::new(model.core_count());
    let mut remaining: Vec<usize> = (0..model.core_count()).collect();
    let mut sessions = Vec::new();
    let mut total_length = 0.0;
    let mut simulation_effort = 0.0;
    let mut discarded_sessions = 0;
    let mut violation_counts = vec![0; model.core_count()];

    while !remaining.is_empty() {
        let session = build_session(&remaining, &weights, cfg, model, power);
        let result = simulate_session(model, power, &session)?;
        simulation_effort += result.simulated_duration;

        let mut valid = true;
        for &core in &session {
            if result.temps[core] >= cfg.tl {
                weights.bump(core, cfg.weight_factor);
                violation_counts[core] += 1;
                valid = false;
            }
        }
        if !valid {
            discarded_sessions += 1;
            continue;
        }
        remaining.retain(|c| !session.contains(c));
        total_length += result.simulated_duration;
        sessions.push(TestSession {
            cores: session.into_iter().collect(),
            duration: result.simulated_duration,
            result,
        });
    }

    Ok(Schedule {
        sessions,
        total_length,
        simulation_effort,
        discarded_sessions,
        stage1,
        final_weights: weights,
        violation_counts,
    })
}

/// Serializable form of a [`Schedule`], with ids instead of indices and the
/// inputs echoed for reproducibility.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScheduleDocument {
    pub config: SchedulerConfig,
    pub params: ThermalParams,
    pub stage1: Vec<CoreScreen>,
    pub sessions: Vec<SessionDocument>,
    pub total_length: f64,
    pub simulation_effort: f64,
    pub discarded_sessions: usize,
    pub max_temperature: f64,
    pub final_weights: Vec<CoreWeight>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SessionDocument {
    pub cores: Vec<String>,
    pub duration: f64,
    /// Every core of the floorplan, active or not.
    pub temperatures: Vec<CoreTemperature>,
    pub peak: CoreTemperature,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreTemperature {
    pub core: String,
    pub temperature: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CoreWeight {
    pub core: String,
    pub weight: f64,
    pub violations: usize,
}

impl Schedule {
    pub fn to_document(&self, model: &ThermalModel, cfg: &SchedulerConfig) -> ScheduleDocument {
        let fp = model.floorplan();
        let temp = |core: usize, temperature: f64| CoreTemperature {
            core: fp.id(core).to_string(),
            temperature,
        };
        ScheduleDocument {
            config: *cfg,
            params: *model.params(),
            stage1: self.stage1.cores.clone(),
            sessions: self
                .sessions
                .iter()
                .map(|s| SessionDocument {
                    cores: s.cores.iter().map(|&c| fp.id(c).to_string()).collect(),
                    duration: s.duration,
                    temperatures: s
                        .result
                        .temps
                        .iter()
                        .enumerate()
                        .map(|(c, &t)| temp(c, t))
                        .collect(),
                    peak: temp(s.result.peak_core, s.result.peak),
                })
                .collect(),
            total_length: self.total_length,
            simulation_effort: self.simulation_effort,
            discarded_sessions: self.discarded_sessions,
            max_temperature: self.max_temperature(),
            final_weights: self
                .final_weights
                .as_slice()
                .iter()
                .enumerate()
                .map(|(c, &weight)| CoreWeight {
                    core: fp.id(c).to_string(),
                    weight,
                    violations: self.violation_counts[c],
                })
                .collect(),
        }
    }
}
