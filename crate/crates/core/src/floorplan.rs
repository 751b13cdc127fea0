// SPDX-License-Identifier: Apache-2.0
//! Floorplans, per-core test power profiles and lateral adjacency geometry.
//!
//! The floorplan text format is the HotSpot `.flp` layout: one core per line,
//! `name width height left_x bottom_y`, all lengths in meters. Lines starting
//! with `#` and blank lines are ignored.
//!
//! Power profiles are CSV records `core_id,power_watts,duration_s`. A header
//! row with those column names is accepted and skipped.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

/// Contact tolerance in meters. Edges closer than this are treated as touching,
/// and shared edges shorter than this do not count as adjacency.
pub const ADJACENCY_EPS: f64 = 1e-9;

#[derive(Debug, Error, PartialEq)]
pub enum FloorplanError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: duplicate core id `{id}`")]
    DuplicateId { line: usize, id: String },
    #[error("line {line}: core `{id}` has non-positive {dim} {value}")]
    NonPositiveDimension {
        line: usize,
        id: String,
        dim: &'static str,
        value: f64,
    },
    #[error("cores `{a}` and `{b}` overlap")]
    Overlap { a: String, b: String },
    #[error("floorplan has no cores")]
    Empty,
}

#[derive(Debug, Error, PartialEq)]
pub enum PowerProfileError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: unknown core id `{id}`")]
    UnknownCore { line: usize, id: String },
    #[error("line {line}: duplicate entry for core `{id}`")]
    DuplicateEntry { line: usize, id: String },
    #[error("no power entry for core `{id}`")]
    MissingCore { id: String },
    #[error("line {line}: core `{id}` has negative power {value}")]
    NegativePower { line: usize, id: String, value: f64 },
    #[error("line {line}: core `{id}` has non-positive duration {value}")]
    NonPositiveDuration { line: usize, id: String, value: f64 },
}

/// One rectangular core on the die.
#[derive(Debug, Clone, PartialEq)]
pub struct CoreGeometry {
    pub id: String,
    pub width: f64,
    pub height: f64,
    pub left_x: f64,
    pub bottom_y: f64,
}

impl CoreGeometry {
    pub fn new(id: impl Into<String>, width: f64, height: f64, left_x: f64, bottom_y: f64) -> Self {
        Self {
            id: id.into(),
            width,
            height,
            left_x,
            bottom_y,
        }
    }

    pub fn right_x(&self) -> f64 {
        self.left_x + self.width
    }

    pub fn top_y(&self) -> f64 {
        self.bottom_y + self.height
    }

    pub fn area(&self) -> f64 {
        self.width * self.height
    }

    pub fn center(&self) -> (f64, f64) {
        (
            self.left_x + 0.5 * self.width,
            self.bottom_y + 0.5 * self.height,
        )
    }

    /// Area of the intersection with `other`, 0 when they only touch.
    fn overlap_area(&self, other: &CoreGeometry) -> f64 {
        let dx = self.right_x().min(other.right_x()) - self.left_x.max(other.left_x);
        let dy = self.top_y().min(other.top_y()) - self.bottom_y.max(other.bottom_y);
        if dx > ADJACENCY_EPS && dy > ADJACENCY_EPS {
            dx * dy
        } else {
            0.0
        }
    }
}

/// Length of the boundary segment shared by two non-overlapping rectangles.
///
/// When a vertical edge of one rectangle lies on a vertical edge of the other
/// (within [`ADJACENCY_EPS`]), the result is the intersection of their y
/// intervals, and likewise for horizontal edges. Corner contact yields 0.
pub fn shared_edge_length(a: &CoreGeometry, b: &CoreGeometry) -> f64 {
    let touching_vertical = (a.right_x() - b.left_x).abs() <= ADJACENCY_EPS
        || (b.right_x() - a.left_x).abs() <= ADJACENCY_EPS;
    let touching_horizontal = (a.top_y() - b.bottom_y).abs() <= ADJACENCY_EPS
        || (b.top_y() - a.bottom_y).abs() <= ADJACENCY_EPS;

    let mut shared: f64 = 0.0;
    if touching_vertical {
        shared = shared.max(interval_overlap(
            a.bottom_y,
            a.top_y(),
            b.bottom_y,
            b.top_y(),
        ));
    }
    if touching_horizontal {
        shared = shared.max(interval_overlap(
            a.left_x,
            a.right_x(),
            b.left_x,
            b.right_x(),
        ));
    }
    shared
}

fn interval_overlap(lo_a: f64, hi_a: f64, lo_b: f64, hi_b: f64) -> f64 {
    (hi_a.min(hi_b) - lo_a.max(lo_b)).max(0.0)
}

/// A validated set of cores: unique ids, positive dimensions, no overlaps.
#[derive(Debug, Clone, PartialEq)]
pub struct Floorplan {
    cores: Vec<CoreGeometry>,
    index: HashMap<String, usize>,
}

impl Floorplan {
    pub fn new(cores: Vec<CoreGeometry>) -> Result<Self, FloorplanError> {
        // Line numbers are 1-based core positions when built programmatically.
        Self::validated(
            cores
                .into_iter()
                .enumerate()
                .map(|(i, c)| (i + 1, c))
                .collect(),
        )
    }

    fn validated(records: Vec<(usize, CoreGeometry)>) -> Result<Self, FloorplanError> {
        if records.is_empty() {
            return Err(FloorplanError::Empty);
        }
        let mut index = HashMap::with_capacity(records.len());
        for (pos, (line, core)) in records.iter().enumerate() {
            for (dim, value) in [("width", core.width), ("height", core.height)] {
                if !(value > 0.0) || !value.is_finite() {
                    return Err(FloorplanError::NonPositiveDimension {
                        line: *line,
                        id: core.id.clone(),
                        dim,
                        value,
                    });
                }
            }
            if !core.left_x.is_finite() || !core.bottom_y.is_finite() {
                return Err(FloorplanError::Malformed {
                    line: *line,
                    msg: format!("core `{}` has a non-finite position", core.id),
                });
            }
            if index.insert(core.id.clone(), pos).is_some() {
                return Err(FloorplanError::DuplicateId {
                    line: *line,
                    id: core.id.clone(),
                });
            }
        }
        let cores: Vec<CoreGeometry> = records.into_iter().map(|(_, c)| c).collect();
        for (i, a) in cores.iter().enumerate() {
            for b in &cores[i + 1..] {
                if a.overlap_area(b) > 0.0 {
                    return Err(FloorplanError::Overlap {
                        a: a.id.clone(),
                        b: b.id.clone(),
                    });
                }
            }
        }
        Ok(Self { cores, index })
    }

    pub fn parse(text: &str) -> Result<Self, FloorplanError> {
        let mut records = Vec::new();
        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let body = raw.trim();
            if body.is_empty() || body.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = body.split_whitespace().collect();
            if fields.len() != 5 {
                return Err(FloorplanError::Malformed {
                    line,
                    msg: format!(
                        "expected `name width height left_x bottom_y`, found {} fields",
                        fields.len()
                    ),
                });
            }
            let mut nums = [0.0f64; 4];
            for (slot, field) in nums.iter_mut().zip(&fields[1..]) {
                *slot = field.parse().map_err(|_| FloorplanError::Malformed {
                    line,
                    msg: format!("`{field}` is not a number"),
                })?;
            }
            records.push((
                line,
                CoreGeometry::new(fields[0], nums[0], nums[1], nums[2], nums[3]),
            ));
        }
        Self::validated(records)
    }

    /// Writes the floorplan back in `.flp` form. Numbers use the shortest
    /// representation that parses back to the same `f64`.
    pub fn to_flp(&self) -> String {
        let mut out = String::new();
        for c in &self.cores {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}",
                c.id, c.width, c.height, c.left_x, c.bottom_y
            );
        }
        out
    }

    pub fn cores(&self) -> &[CoreGeometry] {
        &self.cores
    }

    pub fn len(&self) -> usize {
        self.cores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cores.is_empty()
    }

    pub fn core(&self, idx: usize) -> &CoreGeometry {
        &self.cores[idx]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn id(&self, idx: usize) -> &str {
        &self.cores[idx].id
    }

    /// Returns a copy with every core shifted by `(dx, dy)`.
    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        let cores = self
            .cores
            .iter()
            .map(|c| {
                CoreGeometry::new(
                    c.id.clone(),
                    c.width,
                    c.height,
                    c.left_x + dx,
                    c.bottom_y + dy,
                )
            })
            .collect();
        Self {
            cores,
            index: self.index.clone(),
        }
    }
}

/// Test power and test duration of one core.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TestPower {
    pub power: f64,
    pub duration: f64,
}

/// Per-core test power, stored in floorplan order.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerProfile {
    entries: Vec<TestPower>,
}

impl PowerProfile {
    /// Builds a profile from `(id, power, duration)` triples covering `fp`.
    pub fn from_entries<'a, I>(fp: &Floorplan, entries: I) -> Result<Self, PowerProfileError>
    where
        I: IntoIterator<Item = (&'a str, f64, f64)>,
    {
        let records = entries
            .into_iter()
            .enumerate()
            .map(|(i, (id, p, d))| (i + 1, id.to_string(), p, d));
        Self::collect(fp, records)
    }

    /// Same power and duration for every core.
    pub fn uniform(fp: &Floorplan, power: f64, duration: f64) -> Result<Self, PowerProfileError> {
        Self::from_entries(
            fp,
            fp.cores().iter().map(|c| (c.id.as_str(), power, duration)),
        )
    }

    pub fn parse(text: &str, fp: &Floorplan) -> Result<Self, PowerProfileError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut records = Vec::new();
        for (n, rec) in reader.records().enumerate() {
            let rec = rec.map_err(|e| PowerProfileError::Malformed {
                line: e.position().map_or(0, |p| p.line() as usize),
                msg: e.to_string(),
            })?;
            let line = rec.position().map_or(0, |p| p.line() as usize);
            if rec.iter().all(str::is_empty) {
                continue;
            }
            if rec.len() != 3 {
                return Err(PowerProfileError::Malformed {
                    line,
                    msg: format!(
                        "expected `core_id,power_watts,duration_s`, found {} fields",
                        rec.len()
                    ),
                });
            }
            if n == 0 && rec[1].eq_ignore_ascii_case("power_watts") {
                continue;
            }
            let num = |field: &str| -> Result<f64, PowerProfileError> {
                field.parse().map_err(|_| PowerProfileError::Malformed {
                    line,
                    msg: format!("`{field}` is not a number"),
                })
            };
            records.push((line, rec[0].to_string(), num(&rec[1])?, num(&rec[2])?));
        }
        Self::collect(fp, records)
    }

    fn collect<I>(fp: &Floorplan, records: I) -> Result<Self, PowerProfileError>
    where
        I: IntoIterator<Item = (usize, String, f64, f64)>,
    {
        let mut slots: Vec<Option<TestPower>> = vec![None; fp.len()];
        for (line, id, power, duration) in records {
            let idx = fp
                .index_of(&id)
                .ok_or_else(|| PowerProfileError::UnknownCore {
                    line,
                    id: id.clone(),
                })?;
            if !(power >= 0.0) || !power.is_finite() {
                return Err(PowerProfileError::NegativePower {
                    line,
                    id,
                    value: power,
                });
            }
            if !(duration > 0.0) || !duration.is_finite() {
                return Err(PowerProfileError::NonPositiveDuration {
                    line,
                    id,
                    value: duration,
                });
            }
            if slots[idx].is_some() {
                return Err(PowerProfileError::DuplicateEntry { line, id });
            }
            slots[idx] = Some(TestPower { power, duration });
        }
        let entries = slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| {
                s.ok_or_else(|| PowerProfileError::MissingCore {
                    id: fp.id(i).to_string(),
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { entries })
    }

    pub fn get(&self, idx: usize) -> TestPower {
        self.entries[idx]
    }

    pub fn power(&self, idx: usize) -> f64 {
        self.entries[idx].power
    }

    pub fn duration(&self, idx: usize) -> f64 {
        self.entries[idx].duration
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every power multiplied by `factor`; durations unchanged.
    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .map(|e| TestPower {
                    power: e.power * factor,
                    duration: e.duration,
                })
                .collect(),
        }
    }

    pub fn to_csv(&self, fp: &Floorplan) -> String {
        let mut out = String::from("core_id,power_watts,duration_s\n");
        for (i, e) in self.entries.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", fp.id(i), e.power, e.duration);
        }
        out
    }
}

/// One lateral neighbor of a core.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Neighbor {
    pub core: usize,
    pub shared_edge: f64,
    pub center_distance: f64,
}

/// Symmetric lateral adjacency between cores, indexed by floorplan position.
#[derive(Debug, Clone, PartialEq)]
pub struct AdjacencyGraph {
    neighbors: Vec<Vec<Neighbor>>,
}

impl AdjacencyGraph {
    pub fn build(fp: &Floorplan) -> Self {
        let n = fp.len();
        let mut neighbors = vec![Vec::new(); n];
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (fp.core(i), fp.core(j));
                let shared_edge = shared_edge_length(a, b);
                if shared_edge <= ADJACENCY_EPS {
                    continue;
                }
                let (ax, ay) = a.center();
                let (bx, by) = b.center();
                let center_distance = (ax - bx).hypot(ay - by);
                neighbors[i].push(Neighbor {
                    core: j,
                    shared_edge,
                    center_distance,
                });
                neighbors[j].push(Neighbor {
                    core: i,
                    shared_edge,
                    center_distance,
                });
            }
        }
        for list in &mut neighbors {
            list.sort_by_key(|nb| nb.core);
        }
        Self { neighbors }
    }

    pub fn neighbors(&self, idx: usize) -> &[Neighbor] {
        &self.neighbors[idx]
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&Neighbor> {
        self.neighbors
            .get(i)?
            .binary_search_by_key(&j, |nb| nb.core)
            .ok()
            .map(|pos| &self.neighbors[i][pos])
    }

    /// Undirected edges as `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors.iter().enumerate().flat_map(|(i, list)| {
            list.iter()
                .filter(move |nb| nb.core > i)
                .map(move |nb| (i, nb.core))
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    pub fn node_count(&self) -> usize {
        self.neighbors.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn square(id: &str, x: f64, y: f64) -> CoreGeometry {
        CoreGeometry::new(id, 1.0, 1.0, x, y)
    }

    #[test]
    fn parses_single_core() {
        let fp = Floorplan::parse("c1 0.01 0.01 0.0 0.0\n").unwrap();
        assert_eq!(fp.len(), 1);
        assert_eq!(fp.core(0), &CoreGeometry::new("c1", 0.01, 0.01, 0.0, 0.0));
    }

    #[test]
    fn overlap_names_both_cores() {
        // 1mm x 1mm overlap in the corner.
        let text = "a 0.01 0.01 0 0\nb 0.01 0.01 0.009 0.009\n";
        assert_eq!(
            Floorplan::parse(text).unwrap_err(),
            FloorplanError::Overlap {
                a: "a".into(),
                b: "b".into()
            }
        );
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let mut text = String::from("# synthetic floorplan\n\n");
        for i in 0..15 {
            let _ = writeln!(text, "core{i}\t0.001\t0.002\t{}\t0", i as f64 * 0.001);
            if i % 4 == 0 {
                text.push_str("   # interleaved comment\n\n");
            }
        }
        let fp = Floorplan::parse(&text).unwrap();
        assert_eq!(fp.len(), 15);
        assert_eq!(fp.id(14), "core14");
    }

    #[test]
    fn reports_malformed_line_number() {
        let err = Floorplan::parse("# c\na 1 1 0 0\nb 1 x 1 0\n").unwrap_err();
        assert!(
            matches!(err, FloorplanError::Malformed { line: 3, .. }),
            "{err:?}"
        );
        let err = Floorplan::parse("a 1 1 0\n").unwrap_err();
        assert!(matches!(err, FloorplanError::Malformed { line: 1, .. }));
    }

    #[test]
    fn rejects_duplicates_and_bad_dimensions() {
        assert!(matches!(
            Floorplan::parse("a 1 1 0 0\na 1 1 1 0\n").unwrap_err(),
            FloorplanError::DuplicateId { line: 2, .. }
        ));
        assert!(matches!(
            Floorplan::parse("a 0 1 0 0\n").unwrap_err(),
            FloorplanError::NonPositiveDimension { dim: "width", .. }
        ));
        assert!(matches!(
            Floorplan::parse("a 1 -2 0 0\n").unwrap_err(),
            FloorplanError::NonPositiveDimension { dim: "height", .. }
        ));
        assert_eq!(
            Floorplan::parse("# nothing\n").unwrap_err(),
            FloorplanError::Empty
        );
    }

    #[test]
    fn abutting_cores_are_legal() {
        assert!(Floorplan::new(vec![square("a", 0.0, 0.0), square("b", 1.0, 0.0)]).is_ok());
    }

    #[test]
    fn shared_edge_cases() {
        assert_eq!(
            shared_edge_length(&square("a", 0.0, 0.0), &square("b", 1.0, 0.0)),
            1.0
        );
        assert_eq!(
            shared_edge_length(&square("a", 0.0, 0.0), &square("b", 1.0, 1.0)),
            0.0
        );
        let s = shared_edge_length(&square("a", 0.0, 0.0), &square("b", 1.0, 0.4));
        assert!((s - 0.6).abs() < 1e-15, "{s}");
        // Stacked vertically, offset.
        let s = shared_edge_length(
            &square("a", 0.0, 0.0),
            &CoreGeometry::new("b", 2.0, 1.0, 0.5, 1.0),
        );
        assert!((s - 0.5).abs() < 1e-15);
        // Separated by a gap.
        assert_eq!(
            shared_edge_length(&square("a", 0.0, 0.0), &square("b", 1.5, 0.0)),
            0.0
        );
    }

    #[test]
    fn strip_adjacency() {
        let fp = Floorplan::new(vec![
            square("c1", 0.0, 0.0),
            square("c2", 1.0, 0.0),
            square("c3", 2.0, 0.0),
        ])
        .unwrap();
        let g = AdjacencyGraph::build(&fp);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        for (i, j) in g.edges() {
            let e = g.edge(i, j).unwrap();
            assert_eq!(e.shared_edge, 1.0);
            assert_eq!(e.center_distance, 1.0);
        }
        assert!(g.edge(0, 2).is_none());
    }

    #[test]
    fn single_core_has_no_edges() {
        let fp = Floorplan::new(vec![square("only", 0.0, 0.0)]).unwrap();
        assert_eq!(AdjacencyGraph::build(&fp).edge_count(), 0);
    }

    #[test]
    fn grid_has_no_diagonal_edges() {
        let fp = Floorplan::new(vec![
            square("a", 0.0, 0.0),
            square("b", 1.0, 0.0),
            square("c", 0.0, 1.0),
            square("d", 1.0, 1.0),
        ])
        .unwrap();
        let g = AdjacencyGraph::build(&fp);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 1), (0, 2), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn power_profile_parsing() {
        let fp = Floorplan::parse("c1 0.01 0.01 0 0\n").unwrap();
        let p = PowerProfile::parse("c1,10.0,1.0\n", &fp).unwrap();
        assert_eq!(
            p.get(0),
            TestPower {
                power: 10.0,
                duration: 1.0
            }
        );

        let p = PowerProfile::parse(
            "# header follows\ncore_id,power_watts,duration_s\n\nc1, 2.5 ,3\n",
            &fp,
        )
        .unwrap();
        assert_eq!(
            p.get(0),
            TestPower {
                power: 2.5,
                duration: 3.0
            }
        );

        assert!(matches!(
            PowerProfile::parse("c9,1,1\n", &fp).unwrap_err(),
            PowerProfileError::UnknownCore { line: 1, .. }
        ));
        assert!(matches!(
            PowerProfile::parse("c1,-1,1\n", &fp).unwrap_err(),
            PowerProfileError::NegativePower { .. }
        ));
        assert!(matches!(
            PowerProfile::parse("c1,1,0\n", &fp).unwrap_err(),
            PowerProfileError::NonPositiveDuration { .. }
        ));
        assert!(matches!(
            PowerProfile::parse("c1,1,1\nc1,2,1\n", &fp).unwrap_err(),
            PowerProfileError::DuplicateEntry { line: 2, .. }
        ));
        assert!(matches!(
            PowerProfile::parse("c1,abc,1\n", &fp).unwrap_err(),
            PowerProfileError::Malformed { line: 1, .. }
        ));
    }

    #[test]
    fn missing_core_is_named() {
        let fp = Floorplan::parse("a 1 1 0 0\nb 1 1 1 0\nc 1 1 2 0\n").unwrap();
        assert_eq!(
            PowerProfile::parse("a,1,1\nc,1,1\n", &fp).unwrap_err(),
            PowerProfileError::MissingCore { id: "b".into() }
        );
    }

    fn arb_floorplan() -> impl Strategy<Value = Floorplan> {
        // Random columns of stacked rectangles with varying heights.
        prop::collection::vec((1u32..1000, prop::collection::vec(1u32..1000, 1..4)), 1..5).prop_map(
            |cols| {
                let mut cores = Vec::new();
                let mut x = 0.0;
                for (ci, (w, heights)) in cols.iter().enumerate() {
                    let w = *w as f64 * 1e-5;
                    let mut y = 0.0;
                    for (ri, h) in heights.iter().enumerate() {
                        let h = *h as f64 * 1e-5;
                        cores.push(CoreGeometry::new(format!("c{ci}_{ri}"), w, h, x, y));
                        y += h;
                    }
                    x += w;
                }
                Floorplan::new(cores).unwrap()
            },
        )
    }

    proptest! {
        #[test]
        fn shared_edge_is_symmetric(fp in arb_floorplan()) {
            for a in fp.cores() {
                for b in fp.cores() {
                    prop_assert_eq!(shared_edge_length(a, b), shared_edge_length(b, a));
                }
            }
        }

        #[test]
        fn adjacency_translation_invariant(fp in arb_floorplan(), dx in -1.0f64..1.0, dy in -1.0f64..1.0) {
            let g = AdjacencyGraph::build(&fp);
            let h = AdjacencyGraph::build(&fp.translated(dx, dy));
            prop_assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
            for (i, j) in g.edges() {
                let (a, b) = (g.edge(i, j).unwrap(), h.edge(i, j).unwrap());
                prop_assert!((a.shared_edge - b.shared_edge).abs() <= 1e-12);
                prop_assert!((a.center_distance - b.center_distance).abs() <= 1e-12);
            }
        }

        #[test]
        fn flp_round_trip_is_exact(fp in arb_floorplan()) {
            prop_assert_eq!(Floorplan::parse(&fp.to_flp()).unwrap(), fp);
        }

        #[test]
        fn stored_edges_are_positive_and_symmetric(fp in arb_floorplan()) {
            let g = AdjacencyGraph::build(&fp);
            for (i, j) in g.edges() {
                let (a, b) = (g.edge(i, j).unwrap(), g.edge(j, i).unwrap());
                prop_assert_eq!(a.shared_edge, b.shared_edge);
                prop_assert!(a.shared_edge > ADJACENCY_EPS);
                prop_assert!(a.center_distance > 0.0);
            }
        }
    }
}
