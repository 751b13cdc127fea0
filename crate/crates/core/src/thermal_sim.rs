// SPDX-License-Identifier: Apache-2.0
//! Steady-state nodal simulation of the full resistive network.
//!
//! Unlike the guiding model, every lateral path is kept (including the ones
//! between two active cores) and passive cores are free nodes. Each node has
//! a vertical conductance to ambient, so the conductance matrix is a
//! symmetric, strictly diagonally dominant M-matrix and is solved by Cholesky.

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::floorplan::PowerProfile;
use crate::thermal_model::{Session, ThermalModel};

#[derive(Debug, Error, PartialEq)]
pub enum SimError {
    #[error(
        "conductance matrix is not positive definite (a core lacks a vertical path to ambient)"
    )]
    NotPositiveDefinite,
    #[error("solve residual {residual:e} W exceeds bound {bound:e} W")]
    Residual { residual: f64, bound: f64 },
    #[error("cannot simulate an empty session")]
    EmptySession,
}

/// Relative residual bound for every solve: `|G dT - P|_inf <= RESIDUAL_TOL * max(1, |P|_inf)`.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Conductance matrix (W/K) and injected power (W) in floorplan node order.
#[derive(Debug, Clone, PartialEq)]
pub struct ThermalNetwork {
    pub node_ids: Vec<String>,
    pub conductance: DMatrix<f64>,
    pub injection: DVector<f64>,
    pub ambient: f64,
}

impl ThermalNetwork {
    /// Stamps the full network with the cores in `active` dissipating their
    /// test power and every other core passive.
    pub fn build(model: &ThermalModel, power: &PowerProfile, active: &Session) -> Self {
        let n = model.core_count();
        let mut g = DMatrix::zeros(n, n);
        for i in 0..n {
            g[(i, i)] += 1.0 / model.vertical_resistance(i);
        }
        for (i, j) in model.adjacency().edges() {
            let edge = model.adjacency().edge(i, j).expect("listed edge");
            let c = 1.0 / model.lateral_from_edge(edge.shared_edge, edge.center_distance);
            g[(i, i)] += c;
            g[(j, j)] += c;
            g[(i, j)] -= c;
            g[(j, i)] -= c;
        }
        let injection = DVector::from_fn(n, |i, _| {
            if active.contains(&i) {
                power.power(i)
            } else {
                0.0
            }
        });
        Self {
            node_ids: model
                .floorplan()
                .cores()
                .iter()
                .map(|c| c.id.clone())
                .collect(),
            conductance: g,
            injection,
            ambient: model.params().t_ambient,
        }
    }

    pub fn len(&self) -> usize {
        self.node_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.node_ids.is_empty()
    }

    /// `|G dT - P|_inf` for a candidate temperature rise vector.
    pub fn residual(&self, rise: &DVector<f64>) -> f64 {
        (&self.conductance * rise - &self.injection).amax()
    }

    pub fn solve(&self) -> Result<SimulationResult, SimError> {
        let chol = self
            .conductance
            .clone()
            .cholesky()
            .ok_or(SimError::NotPositiveDefinite)?;
        let rise = chol.solve(&self.injection);
        let residual = self.residual(&rise);
        let bound = RESIDUAL_TOL * self.injection.amax().max(1.0);
        if !(residual <= bound) {
            return Err(SimError::Residual { residual, bound });
        }
        let temps: Vec<f64> = rise.iter().map(|dt| self.ambient + dt).collect();
        let (peak_core, peak) = argmax(&temps);
        Ok(SimulationResult {
            temps,
            peak_core,
            peak,
            residual,
            simulated_duration: 0.0,
        })
    }
}

fn argmax(values: &[f64]) -> (usize, f64) {
    values
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, v)| {
            if v > best.1 {
                (i, v)
            } else {
                best
            }
        })
}

/// Steady-state temperatures of one simulated session.
#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    /// Degrees C, floorplan order.
    pub temps: Vec<f64>,
    pub peak_core: usize,
    pub peak: f64,
    /// Infinity-norm residual of the solve, W.
    pub residual: f64,
    /// Wall duration of the simulated session, s. Zero for a bare network solve.
    pub simulated_duration: f64,
}

/// Builds and solves the full network for `session`. The session's duration
/// is its longest member test.
pub fn simulate_session(
    model: &ThermalModel,
    power: &PowerProfile,
    session: &Session,
) -> Result<SimulationResult, SimError> {
    if session.is_empty() {
        return Err(SimError::EmptySession);
    }
    let mut result = ThermalNetwork::build(model, power, session).solve()?;
    result.simulated_duration = session
        .iter()
        .map(|&i| power.duration(i))
        .fold(0.0, f64::max);
    Ok(result)
}
