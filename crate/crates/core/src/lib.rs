// SPDX-License-Identifier: Apache-2.0
//! Thermal-aware test scheduling for core-based SoCs.
//!
//! A cheap per-session thermal model ([`thermal_model`]) steers greedy session
//! packing ([`scheduler`]); every candidate session is then validated by a
//! steady-state nodal simulation of the full resistive network
//! ([`thermal_sim`]). Sessions that overheat are discarded and the offending
//! cores are penalized so that later sessions keep them apart.

pub mod cli;
pub mod floorplan;
pub mod scheduler;
pub mod sweep;
pub mod thermal_model;
pub mod thermal_sim;

pub use floorplan::{AdjacencyGraph, CoreGeometry, Floorplan, PowerProfile, TestPower};
pub use scheduler::{
    generate_schedule, screen_cores, CoreOrder, Schedule, ScheduleError, SchedulerConfig,
};
pub use sweep::{run_sweep, SweepOutcome, SweepRow, SweepSpec};
pub use thermal_model::{Session, SessionThermalModel, ThermalModel, ThermalParams, Weights};
pub use thermal_sim::{simulate_session, SimulationResult, ThermalNetwork};
