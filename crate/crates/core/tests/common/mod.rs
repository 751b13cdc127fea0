// SPDX-License-Identifier: Apache-2.0
//! Shared fixtures: random slicing floorplans and an independent dense solver.
#![allow(dead_code)]

use std::path::PathBuf;

use rand::Rng;
use thermsched::{CoreGeometry, Floorplan, PowerProfile, Session, ThermalModel, ThermalParams};

pub fn data_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

pub fn load_model(flp: &str, power: &str) -> (ThermalModel, PowerProfile) {
    let fp = Floorplan::parse(&std::fs::read_to_string(data_path(flp)).unwrap()).unwrap();
    let p = PowerProfile::parse(&std::fs::read_to_string(data_path(power)).unwrap(), &fp).unwrap();
    (ThermalModel::new(fp, ThermalParams::default()), p)
}

/// Random guillotine floorplan with `n` cores on a die of a few centimeters.
/// Repeatedly splits the largest rectangle at a random fraction, so shared
/// edges are frequently partial.
pub fn random_floorplan<R: Rng>(rng: &mut R, n: usize) -> Floorplan {
    let die_w: f64 = rng.gen_range(0.02..0.06);
    let die_h: f64 = rng.gen_range(0.02..0.06);
    let mut rects: Vec<(f64, f64, f64, f64)> = vec![(0.0, 0.0, die_w, die_h)];
    while rects.len() < n {
        let (pos, _) = rects
            .iter()
            .enumerate()
            .max_by(|a, b| (a.1 .2 * a.1 .3).partial_cmp(&(b.1 .2 * b.1 .3)).unwrap())
            .unwrap();
        let (x, y, w, h) = rects.swap_remove(pos);
        let f = rng.gen_range(0.25..0.75);
        let vertical_cut = if (w / h - 1.0).abs() > 0.5 {
            w > h
        } else {
            rng.gen_bool(0.5)
        };
        if vertical_cut {
            rects.push((x, y, w * f, h));
            rects.push((x + w * f, y, w * (1.0 - f), h));
        } else {
            rects.push((x, y, w, h * f));
            rects.push((x, y + h * f, w, h * (1.0 - f)));
        }
    }
    let cores = rects
        .into_iter()
        .enumerate()
        .map(|(i, (x, y, w, h))| CoreGeometry::new(format!("c{i:02}"), w, h, x, y))
        .collect();
    Floorplan::new(cores).unwrap()
}

/// Power density between 2 and 16 W/cm^2, unit durations unless `varied`.
pub fn random_power<R: Rng>(rng: &mut R, fp: &Floorplan, varied: bool) -> PowerProfile {
    let entries: Vec<(String, f64, f64)> = fp
        .cores()
        .iter()
        .map(|c| {
            let density = rng.gen_range(2.0e4..16.0e4);
            let duration = if varied {
                rng.gen_range(1..5) as f64
            } else {
                1.0
            };
            (c.id.clone(), density * c.area(), duration)
        })
        .collect();
    PowerProfile::from_entries(fp, entries.iter().map(|(id, p, d)| (id.as_str(), *p, *d))).unwrap()
}

pub fn random_session<R: Rng>(rng: &mut R, n: usize) -> Session {
    let mut s: Session = (0..n).filter(|_| rng.gen_bool(0.4)).collect();
    if s.is_empty() {
        s.insert(rng.gen_range(0..n));
    }
    s
}

/// Gaussian elimination with partial pivoting on a dense row-major system.
pub fn gauss_solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Vec<f64> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())
            .unwrap();
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let s: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - s) / a[row][row];
    }
    x
}

/// Temperature rise at `core` when 1 W is injected there, with every core
/// outside `session` held at ambient and every lateral resistor between two
/// session members removed. Resistances are recomputed here from the raw
/// geometry rather than taken from the model.
pub fn grounded_oracle(model: &ThermalModel, session: &Session, core: usize) -> f64 {
    let fp = model.floorplan();
    let params = model.params();
    let n = fp.len();
    let mut g = vec![vec![0.0; n]; n];
    let mut rhs = vec![0.0; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] += fp.core(i).area() / params.r_vertical_per_area;
    }
    for i in 0..n {
        for j in i + 1..n {
            if session.contains(&i) && session.contains(&j) {
                continue;
            }
            let Some(edge) = model.adjacency().edge(i, j) else {
                continue;
            };
            let (ax, ay) = fp.core(i).center();
            let (bx, by) = fp.core(j).center();
            let dist = ((ax - bx).powi(2) + (ay - by).powi(2)).sqrt();
            let c = params.k_silicon * params.die_thickness * edge.shared_edge / dist;
            g[i][i] += c;
            g[j][j] += c;
            g[i][j] -= c;
            g[j][i] -= c;
        }
    }
    // Dirichlet rows for grounded (passive) nodes.
    for i in 0..n {
        if !session.contains(&i) {
            g[i].iter_mut().for_each(|v| *v = 0.0);
            g[i][i] = 1.0;
        }
    }
    rhs[core] = 1.0;
    gauss_solve(g, rhs)[core]
}
