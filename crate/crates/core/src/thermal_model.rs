// SPDX-License-Identifier: Apache-2.0
//! Low-complexity session thermal model used to guide schedule construction.
//!
//! For a candidate session the model keeps only steady-state resistances,
//! drops the lateral paths between two active cores, and ties every passive
//! core to ambient. Each active core then sees its vertical path in parallel
//! with the lateral paths to its passive neighbors.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::floorplan::{AdjacencyGraph, Floorplan, PowerProfile};

/// A set of cores tested concurrently, as floorplan indices.
pub type Session = BTreeSet<usize>;

#[derive(Debug, Error, PartialEq)]
pub enum ModelError {
    #[error("cores `{0}` and `{1}` are not laterally adjacent")]
    NotAdjacent(String, String),
    #[error("core `{0}` is not part of the session")]
    NotInSession(String),
}

#[derive(Debug, Error, PartialEq)]
pub enum ParamsError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: unknown parameter `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("parameter `{key}` must be strictly positive and finite, got {value}")]
    NotPositive { key: &'static str, value: f64 },
}

/// Physical constants of the die and package.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThermalParams {
    /// Silicon thermal conductivity, W/(m K).
    pub k_silicon: f64,
    /// Die thickness, m.
    pub die_thickness: f64,
    /// Area-normalized vertical resistance die to ambient, K m^2 / W.
    pub r_vertical_per_area: f64,
    /// Ambient temperature, degrees C.
    pub t_ambient: f64,
}

impl Default for ThermalParams {
    fn default() -> Self {
        Self {
            k_silicon: 100.0,
            die_thickness: 0.5e-3,
            r_vertical_per_area: 5e-4,
            t_ambient: 45.0,
        }
    }
}

impl ThermalParams {
    pub const KEYS: [&'static str; 4] = [
        "k_silicon",
        "die_thickness",
        "r_vertical_per_area",
        "t_ambient",
    ];

    pub fn validate(&self) -> Result<(), ParamsError> {
        for (key, value) in Self::KEYS.into_iter().zip(self.values()) {
            if !(value > 0.0) || !value.is_finite() {
                return Err(ParamsError::NotPositive { key, value });
            }
        }
        Ok(())
    }

    fn values(&self) -> [f64; 4] {
        [
            self.k_silicon,
            self.die_thickness,
            self.r_vertical_per_area,
            self.t_ambient,
        ]
    }

    fn slot(&mut self, key: &str) -> Option<&mut f64> {
        match key {
            "k_silicon" => Some(&mut self.k_silicon),
            "die_thickness" => Some(&mut self.die_thickness),
            "r_vertical_per_area" => Some(&mut self.r_vertical_per_area),
            "t_ambient" => Some(&mut self.t_ambient),
            _ => None,
        }
    }

    /// Parses a flat `key = value` file on top of the defaults. `key value`
    /// is accepted too; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, ParamsError> {
        let mut params = Self::default();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (key, value) = match body.split_once('=') {
                Some((k, v)) => (k.trim(), v.trim()),
                None => body
                    .split_once(char::is_whitespace)
                    .map_or((body, ""), |(k, v)| (k, v.trim())),
            };
            let value: f64 = value.parse().map_err(|_| ParamsError::Malformed {
                line,
                msg: format!("`{value}` is not a number"),
            })?;
            *params.slot(key).ok_or_else(|| ParamsError::UnknownKey {
                line,
                key: key.to_string(),
            })? = value;
        }
        params.validate()?;
        Ok(params)
    }
}

impl fmt::Display for ThermalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (key, value) in Self::KEYS.into_iter().zip(self.values()) {
            writeln!(f, "{key} = {value}")?;
        }
        Ok(())
    }
}

impl FromStr for ThermalParams {
    type Err = ParamsError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

/// Per-core multiplicative weights used to penalize repeat violators.
#[derive(Debug, Clone, PartialEq)]
pub struct Weights {
    w: Vec<f64>,
}

impl Weights {
    pub fn new(n: usize) -> Self {
        Self { w: vec![1.0; n] }
    }

    pub fn get(&self, idx: usize) -> f64 {
        self.w[idx]
    }

    /// Multiplies the weight of `idx` by `factor` (> 1).
    pub fn bump(&mut self, idx: usize, factor: f64) {
        debug_assert!(factor > 1.0);
        self.w[idx] *= factor;
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }
}

/// Geometry plus physical constants: everything needed to derive resistances.
#[derive(Debug, Clone)]
pub struct ThermalModel {
    floorplan: Floorplan,
    adjacency: AdjacencyGraph,
    params: ThermalParams,
}

impl ThermalModel {
    pub fn new(floorplan: Floorplan, params: ThermalParams) -> Self {
        let adjacency = AdjacencyGraph::build(&floorplan);
        Self {
            floorplan,
            adjacency,
            params,
        }
    }

    pub fn floorplan(&self) -> &Floorplan {
        &self.floorplan
    }

    pub fn adjacency(&self) -> &AdjacencyGraph {
        &self.adjacency
    }

    pub fn params(&self) -> &ThermalParams {
        &self.params
    }

    pub fn core_count(&self) -> usize {
        self.floorplan.len()
    }

    /// Lateral conduction resistance between two adjacent cores:
    /// center distance over (conductivity x thickness x shared edge).
    pub fn lateral_resistance(&self, i: usize, j: usize) -> Result<f64, ModelError> {
        let edge = self.adjacency.edge(i, j).ok_or_else(|| {
            ModelError::NotAdjacent(
                self.floorplan.id(i).to_string(),
                self.floorplan.id(j).to_string(),
            )
        })?;
        Ok(self.lateral_from_edge(edge.shared_edge, edge.center_distance))
    }

    pub(crate) fn lateral_from_edge(&self, shared_edge: f64, center_distance: f64) -> f64 {
        center_distance / (self.params.k_silicon * self.params.die_thickness * shared_edge)
    }

    pub fn vertical_resistance(&self, i: usize) -> f64 {
        self.params.r_vertical_per_area / self.floorplan.core(i).area()
    }

    /// Equivalent resistance from active core `i` to ambient within `session`.
    pub fn equivalent_resistance(&self, i: usize, session: &Session) -> Result<f64, ModelError> {
        if !session.contains(&i) {
            return Err(ModelError::NotInSession(self.floorplan.id(i).to_string()));
        }
        let lateral: f64 = self
            .adjacency
            .neighbors(i)
            .iter()
            .filter(|nb| !session.contains(&nb.core))
            .map(|nb| 1.0 / self.lateral_from_edge(nb.shared_edge, nb.center_distance))
            .sum();
        Ok(1.0 / (1.0 / self.vertical_resistance(i) + lateral))
    }

    /// Core thermal characteristic `P(i) * R_eq(i)`, in kelvin.
    pub fn thermal_characteristic(
        &self,
        i: usize,
        session: &Session,
        power: &PowerProfile,
    ) -> Result<f64, ModelError> {
        Ok(power.power(i) * self.equivalent_resistance(i, session)?)
    }

    /// Session thermal characteristic: max over members of `TC * P * W`.
    /// Zero for an empty session.
    pub fn session_stc(&self, session: &Session, power: &PowerProfile, weights: &Weights) -> f64 {
        self.session_model(session, power, weights).stc
    }

    pub fn session_model(
        &self,
        session: &Session,
        power: &PowerProfile,
        weights: &Weights,
    ) -> SessionThermalModel {
        let mut cores = Vec::with_capacity(session.len());
        let mut stc: f64 = 0.0;
        for &i in session {
            let r_eq = self
                .equivalent_resistance(i, session)
                .expect("member of its own session");
            let p = power.power(i);
            let tc = p * r_eq;
            stc = stc.max(tc * p * weights.get(i));
            cores.push(CoreCharacteristic { core: i, r_eq, tc });
        }
        SessionThermalModel { cores, stc }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoreCharacteristic {
    pub core: usize,
    /// K/W
    pub r_eq: f64,
    /// K
    pub tc: f64,
}

/// Guiding-model view of one candidate session.
#[derive(Debug, Clone, PartialEq)]
pub struct SessionThermalModel {
    /// Active cores in ascending floorplan order.
    pub cores: Vec<CoreCharacteristic>,
    /// K W
    pub stc: f64,
}
