// SPDX-License-Identifier: Apache-2.0
//! TL x STCL grid sweeps producing one table row per grid point.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::floorplan::PowerProfile;
use crate::scheduler::{
    generate_schedule, screen_cores, ScheduleError, SchedulerConfig, ScreeningFailure,
};
use crate::thermal_model::ThermalModel;

pub const CSV_HEADER: &str = "tl_C,stcl,schedule_length_s,simulation_effort_s,max_temperature_C";

#[derive(Debug, Error, PartialEq)]
pub enum RangeError {
    #[error("empty value list")]
    Empty,
    #[error("`{0}` is not a number")]
    NotANumber(String),
    #[error("range `{0}` must be start:stop:step with step > 0 and stop >= start")]
    BadRange(String),
}

/// A list of grid values, written either as `start:stop:step` (inclusive) or
/// as a comma-separated list.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueList(pub Vec<f64>);

impl FromStr for ValueList {
    type Err = RangeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| -> Result<f64, RangeError> {
            let t = t.trim();
            t.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| RangeError::NotANumber(t.to_string()))
        };
        let s = s.trim();
        if s.is_empty() {
            return Err(RangeError::Empty);
        }
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            [start, stop, step] => {
                let (start, stop, step) = (num(start)?, num(stop)?, num(step)?);
                if !(step > 0.0) || stop < start {
                    return Err(RangeError::BadRange(s.to_string()));
                }
                // Tolerate representation error in the last step.
                let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
                Ok(Self((0..count).map(|k| start + k as f64 * step).collect()))
            }
            [_] => s.split(',').map(num).collect::<Result<_, _>>().map(Self),
            _ => Err(RangeError::BadRange(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub tl_values: Vec<f64>,
    pub stcl_values: Vec<f64>,
    /// Weight factor and core order shared by every grid point.
    pub base: SchedulerConfig,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub tl: f64,
    pub stcl: f64,
    pub schedule_length: f64,
    pub simulation_effort: f64,
    pub max_temperature: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepOutcome {
    /// Row-major over (tl, stcl), skipping limits that failed screening.
    pub rows: Vec<SweepRow>,
    pub skipped: Vec<ScreeningFailure>,
}

impl SweepOutcome {
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                r.tl, r.stcl, r.schedule_length, r.simulation_effort, r.max_temperature
            );
        }
        out
    }
}

/// Evaluates every grid point independently (in parallel) and returns rows in
/// row-major order.
pub fn run_sweep(
    model: &ThermalModel,
    power: &PowerProfile,
    spec: &SweepSpec,
) -> Result<SweepOutcome, ScheduleError> {
    let mut skipped = Vec::new();
    let mut points = Vec::new();
    for &tl in &spec.tl_values {
        SchedulerConfig { tl, ..spec.base }.validate(model.params())?;
        match screen_cores(model, power, tl) {
            Ok(_) => points.extend(spec.stcl_values.iter().map(|&stcl| SchedulerConfig {
                tl,
                stcl,
                ..spec.base
            })),
            Err(ScheduleError::Screening(failure)) => skipped.push(*failure),
            Err(e) => return Err(e),
        }
    }
    let rows = points
        .par_iter()
        .map(|cfg| {
            let schedule = generate_schedule(model, power, cfg)?;
            Ok(SweepRow {
                tl: cfg.tl,
                stcl: cfg.stcl,
                schedule_length: schedule.total_length,
                simulation_effort: schedule.simulation_effort,
                max_temperature: schedule.max_temperature(),
            })
        })
        .collect::<Result<Vec<_>, ScheduleError>>()?;
    Ok(SweepOutcome { rows, skipped })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inclusive_ranges() {
        assert_eq!("145:185:5".parse::<ValueList>().unwrap().0.len(), 9);
        assert_eq!(
            "20:100:10".parse::<ValueList>().unwrap().0,
            vec![20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0]
        );
        assert_eq!("0.1:0.3:0.1".parse::<ValueList>().unwrap().0.len(), 3);
        assert_eq!("150:150:1".parse::<ValueList>().unwrap().0, vec![150.0]);
        assert_eq!(
            "145, 160,170".parse::<ValueList>().unwrap().0,
            vec![145.0, 160.0, 170.0]
        );
    }

    #[test]
    fn bad_ranges() {
        assert!(matches!(
            "10:5:1".parse::<ValueList>(),
            Err(RangeError::BadRange(_))
        ));
        assert!(matches!(
            "1:5:0".parse::<ValueList>(),
            Err(RangeError::BadRange(_))
        ));
        assert!(matches!(
            "1:5".parse::<ValueList>(),
            Err(RangeError::BadRange(_))
        ));
        assert!(matches!(
            "1,x".parse::<ValueList>(),
            Err(RangeError::NotANumber(_))
        ));
        assert_eq!("".parse::<ValueList>(), Err(RangeError::Empty));
    }
}
