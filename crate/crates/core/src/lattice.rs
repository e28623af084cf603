//! Square-lattice subgraphs stored as one contiguous interval per row.
//!
//! Vertices are the lattice points `(x, y)` with `x_min(y) <= x <= x_max(y)`.
//! Edges join lattice neighbours that are both present, so every unit square
//! whose corners are present is a 4-cycle face. Vertices get dense indices in
//! row-major `(y, x)` order.

use std::fmt::Write as _;

use crate::error::{IscError, Result};
use crate::params::IscParams;

/// One row of the region: the vertices `(x_min..=x_max, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RowInterval {
    pub y: i64,
    pub x_min: i64,
    pub x_max: i64,
}

impl RowInterval {
    pub fn len(&self) -> usize {
        (self.x_max - self.x_min + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.x_max < self.x_min
    }

    pub fn contains(&self, x: i64) -> bool {
        self.x_min <= x && x <= self.x_max
    }

    /// Number of columns shared with `other`.
    pub fn overlap(&self, other: &RowInterval) -> usize {
        let lo = self.x_min.max(other.x_min);
        let hi = self.x_max.min(other.x_max);
        if hi < lo {
            0
        } else {
            (hi - lo + 1) as usize
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub x: i64,
    pub y: i64,
}

impl Vertex {
    pub fn new(x: i64, y: i64) -> Self {
        Vertex { x, y }
    }
}

/// An undirected edge between dense vertex indices, `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }
}

/// Immutable row-interval graph. Rows are stored bottom-up with `y = 0, 1, ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCellGraph {
    rows: Vec<RowInterval>,
    // offsets[i] = number of vertices in rows below row i
    offsets: Vec<usize>,
}

impl SquareCellGraph {
    /// Builds a graph from `(x_min, x_max)` pairs listed bottom-up.
    /// Consecutive rows must share at least one column.
    pub fn from_intervals(intervals: &[(i64, i64)]) -> Result<Self> {
        let rows: Vec<RowInterval> = intervals
            .iter()
            .enumerate()
            .map(|(y, &(x_min, x_max))| RowInterval {
                y: y as i64,
                x_min,
                x_max,
            })
            .collect();
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(IscError::EmptyRow {
                    row: i,
                    x_min: row.x_min,
                    x_max: row.x_max,
                });
            }
        }
        for (i, pair) in rows.windows(2).enumerate() {
            if pair[0].overlap(&pair[1]) == 0 {
                return Err(IscError::DisconnectedRows {
                    lower: i,
                    upper: i + 1,
                });
            }
        }
        Ok(Self::from_rows_unchecked(rows))
    }

    fn from_rows_unchecked(rows: Vec<RowInterval>) -> Self {
        let mut offsets = Vec::with_capacity(rows.len() + 1);
        let mut acc = 0;
        for row in &rows {
            offsets.push(acc);
            acc += row.len();
        }
        offsets.push(acc);
        SquareCellGraph { rows, offsets }
    }

    pub fn rows(&self) -> &[RowInterval] {
        &self.rows
    }

    pub fn vertex_count(&self) -> usize {
        *self.offsets.last().unwrap_or(&0)
    }

    pub fn horizontal_edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len() - 1).sum()
    }

    pub fn vertical_edge_count(&self) -> usize {
        self.rows.windows(2).map(|w| w[0].overlap(&w[1])).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.horizontal_edge_count() + self.vertical_edge_count()
    }

    /// Number of vertices in rows `0..=y`.
    pub fn vertices_up_to_row(&self, y: usize) -> usize {
        self.offsets[y + 1]
    }

    /// Number of vertices with `x' <= x`.
    pub fn vertices_up_to_column(&self, x: i64) -> usize {
        self.rows
            .iter()
            .map(|r| {
                if x < r.x_min {
                    0
                } else {
                    (x.min(r.x_max) - r.x_min + 1) as usize
                }
            })
            .sum()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index_of(v).is_some()
    }

    pub fn index_of(&self, v: Vertex) -> Option<usize> {
        if v.y < 0 {
            return None;
        }
        let row = self.rows.get(v.y as usize)?;
        if row.contains(v.x) {
            Some(self.offsets[v.y as usize] + (v.x - row.x_min) as usize)
        } else {
            None
        }
    }

    pub fn vertex(&self, index: usize) -> Vertex {
        // offsets is sorted; find the row holding `index`
        let y = self.offsets.partition_point(|&o| o <= index) - 1;
        let row = &self.rows[y];
        Vertex::new(row.x_min + (index - self.offsets[y]) as i64, y as i64)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.rows
            .iter()
            .flat_map(|r| (r.x_min..=r.x_max).map(move |x| Vertex::new(x, r.y)))
    }

    /// Neighbour indices of `index`, in `(y, x)` order.
    pub fn neighbors(&self, index: usize) -> impl Iterator<Item = usize> + '_ {
        let v = self.vertex(index);
        [
            Vertex::new(v.x, v.y - 1),
            Vertex::new(v.x - 1, v.y),
            Vertex::new(v.x + 1, v.y),
            Vertex::new(v.x, v.y + 1),
        ]
        .into_iter()
        .filter_map(move |w| self.index_of(w))
    }

    /// Dense adjacency lists, indexed like the vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        (0..self.vertex_count())
            .map(|i| self.neighbors(i).collect())
            .collect()
    }

    /// All edges: horizontal edges row by row, then vertical edges strip by strip.
    pub fn edges(&self) -> Vec<Edge> {
        let mut edges = Vec::with_capacity(self.edge_count());
        for row in &self.rows {
            for x in row.x_min..row.x_max {
                edges.push(self.edge_between(Vertex::new(x, row.y), Vertex::new(x + 1, row.y)));
            }
        }
        for y in 0..self.rows.len().saturating_sub(1) {
            edges.extend(self.vertical_edges_in_strip(y));
        }
        edges
    }

    /// Vertical edges between rows `y` and `y + 1`.
    pub fn vertical_edges_in_strip(&self, y: usize) -> Vec<Edge> {
        let (lower, upper) = (&self.rows[y], &self.rows[y + 1]);
        let lo = lower.x_min.max(upper.x_min);
        let hi = lower.x_max.min(upper.x_max);
        (lo..=hi)
            .map(|x| self.edge_between(Vertex::new(x, lower.y), Vertex::new(x, upper.y)))
            .collect()
    }

    /// Horizontal edges `(x, y) - (x + 1, y)` over all rows.
    pub fn horizontal_edges_in_column(&self, x: i64) -> Vec<Edge> {
        self.rows
            .iter()
            .filter(|r| r.contains(x) && r.contains(x + 1))
            .map(|r| self.edge_between(Vertex::new(x, r.y), Vertex::new(x + 1, r.y)))
            .collect()
    }

    /// Columns `x` for which some row has the edge `(x, y) - (x + 1, y)`,
    /// left to right.
    pub fn column_strips(&self) -> Vec<i64> {
        let lo = self.rows.iter().map(|r| r.x_min).min().unwrap_or(0);
        let hi = self.rows.iter().map(|r| r.x_max).max().unwrap_or(0);
        (lo..hi)
            .filter(|&x| self.rows.iter().any(|r| r.contains(x) && r.contains(x + 1)))
            .collect()
    }

    fn edge_between(&self, a: Vertex, b: Vertex) -> Edge {
        Edge::new(self.index_of(a).unwrap(), self.index_of(b).unwrap())
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        let adjacent = (a.x - b.x).abs() + (a.y - b.y).abs() == 1;
        adjacent && self.contains(a) && self.contains(b)
    }

    /// Lower-left corners of the unit squares whose four corners are present.
    pub fn unit_cells(&self) -> Vec<Vertex> {
        self.rows
            .windows(2)
            .flat_map(|w| {
                let lo = w[0].x_min.max(w[1].x_min);
                let hi = w[0].x_max.min(w[1].x_max);
                (lo..hi).map(move |x| Vertex::new(x, w[0].y))
            })
            .collect()
    }

    /// The four boundary edges of the unit cell with lower-left corner `c`.
    pub fn cell_edges_present(&self, c: Vertex) -> usize {
        let (a, b) = (Vertex::new(c.x + 1, c.y), Vertex::new(c.x, c.y + 1));
        let d = Vertex::new(c.x + 1, c.y + 1);
        [(c, a), (c, b), (a, d), (b, d)]
            .iter()
            .filter(|(u, v)| self.has_edge(*u, *v))
            .count()
    }

    /// Reflection through a horizontal axis (top row becomes bottom row).
    pub fn mirrored(&self) -> Self {
        let rows = self
            .rows
            .iter()
            .rev()
            .enumerate()
            .map(|(y, r)| RowInterval { y: y as i64, ..*r })
            .collect();
        Self::from_rows_unchecked(rows)
    }

    /// Plain-text adjacency list, one `x,y: x1,y1 x2,y2 ...` line per vertex,
    /// sorted by `(y, x)`.
    pub fn to_adjacency_list(&self) -> String {
        let mut out = String::new();
        for i in 0..self.vertex_count() {
            let v = self.vertex(i);
            let _ = write!(out, "{},{}:", v.x, v.y);
            for j in self.neighbors(i) {
                let w = self.vertex(j);
                let _ = write!(out, " {},{}", w.x, w.y);
            }
            out.push('\n');
        }
        out
    }

    /// Graphviz DOT with vertices named `v_x_y` (quoted, since `x` can be negative).
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{name}\" {{\n");
        for v in self.vertices() {
            let _ = writeln!(out, "  \"v_{}_{}\" [pos=\"{},{}!\"];", v.x, v.y, v.x, v.y);
        }
        for e in self.edges() {
            let (a, b) = (self.vertex(e.u), self.vertex(e.v));
            let _ = writeln!(out, "  \"v_{}_{}\" -- \"v_{}_{}\";", a.x, a.y, b.x, b.y);
        }
        out.push_str("}\n");
        out
    }
}

/// Row intervals of the canonical embedding of ISC(p, q, m, n).
///
/// With `t = (n - p) / 2` and `s = (n - q) / 2`:
/// - `0 <= y <= t`: `[t - y, t + p + y]` (lower trapezium)
/// - `t < y < t + m`: `[t - y, n + t - y + 1]` (parallelogram, `n + 2` wide)
/// - `y = t + m`: `[1 - m, n - m + 1]`
/// - `y = t + m + j`, `1 <= j <= s`: `[1 - m + j, n - m + 1 - j]` (upper trapezium)
pub fn isc_intervals(params: &IscParams) -> Vec<(i64, i64)> {
    let p = params.p() as i64;
    let m = params.m() as i64;
    let n = params.n() as i64;
    let t = params.t() as i64;
    let s = params.s() as i64;
    (0..=t + m + s)
        .map(|y| {
            if y <= t {
                (t - y, t + p + y)
            } else if y < t + m {
                (t - y, n - (y - t) + 1)
            } else {
                let j = y - t - m;
                (1 - m + j, n - m + 1 - j)
            }
        })
        .collect()
}

pub fn build_isc(params: &IscParams) -> SquareCellGraph {
    let rows = isc_intervals(params)
        .into_iter()
        .enumerate()
        .map(|(y, (x_min, x_max))| RowInterval {
            y: y as i64,
            x_min,
            x_max,
        })
        .collect();
    SquareCellGraph::from_rows_unchecked(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{edge_count, vertex_count};
    use num_bigint::BigInt;

    fn isc(p: i64, q: i64, m: i64, n: i64) -> SquareCellGraph {
        build_isc(&IscParams::new(p, q, m, n).unwrap())
    }

    #[test]
    fn c4() {
        let g = isc(1, 1, 1, 1);
        assert_eq!(
            isc_intervals(&IscParams::new(1, 1, 1, 1).unwrap()),
            vec![(0, 1), (0, 1)]
        );
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert_eq!(g.unit_cells(), vec![Vertex::new(0, 0)]);
    }

    #[test]
    fn hexagon_rows() {
        let params = IscParams::new(2, 2, 1, 4).unwrap();
        assert_eq!(isc_intervals(&params), vec![(1, 3), (0, 4), (0, 4), (1, 3)]);
        let g = build_isc(&params);
        assert_eq!(g.vertex_count(), 16);
        assert_eq!(g.horizontal_edge_count(), 12);
        assert_eq!(g.vertical_edge_count(), 11);
    }

    #[test]
    fn figure_example_counts() {
        let params = IscParams::new(4, 6, 6, 10).unwrap();
        let g = build_isc(&params);
        assert_eq!(g.vertex_count(), 119);
        assert_eq!(g.edge_count(), 210);
        assert_eq!(g.rows().len(), 3 + 6 + 2 + 1);
        assert_eq!(g.rows()[0].len(), 5);
        assert_eq!(g.rows().last().unwrap().len(), 7);
    }

    #[test]
    fn indexing_round_trips() {
        let g = isc(3, 5, 4, 9);
        for (i, v) in g.vertices().enumerate() {
            assert_eq!(g.index_of(v), Some(i));
            assert_eq!(g.vertex(i), v);
        }
        assert_eq!(g.index_of(Vertex::new(-100, 0)), None);
        assert_eq!(g.index_of(Vertex::new(0, -1)), None);
    }

    #[test]
    fn edges_are_unique_and_adjacent() {
        let g = isc(2, 4, 3, 6);
        let mut edges = g.edges();
        assert_eq!(edges.len(), g.edge_count());
        for e in &edges {
            assert!(g.has_edge(g.vertex(e.u), g.vertex(e.v)));
        }
        edges.sort();
        edges.dedup();
        assert_eq!(edges.len(), g.edge_count());
        let degree_sum: usize = g.adjacency().iter().map(Vec::len).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn structural_formulas_on_sweep() {
        for params in IscParams::sweep(14, 6) {
            let g = build_isc(&params);
            assert_eq!(
                BigInt::from(g.vertex_count()),
                vertex_count(&params),
                "{params}"
            );
            assert_eq!(
                BigInt::from(g.edge_count()),
                edge_count(&params),
                "{params}"
            );
            let cells = g.unit_cells();
            assert_eq!(
                g.edge_count() + 1 - g.vertex_count(),
                cells.len(),
                "{params}"
            );
            assert!(cells.iter().all(|&c| g.cell_edges_present(c) == 4));
            let (t, m, s) = (params.t(), params.m(), params.s());
            assert_eq!(g.rows().len() as u64, t + m + s + 1);
            assert_eq!(g.column_strips().len() as u64, params.n() + m - 1);
        }
    }

    #[test]
    fn rejects_disconnected_rows() {
        assert!(matches!(
            SquareCellGraph::from_intervals(&[(0, 1), (3, 4)]),
            Err(IscError::DisconnectedRows { lower: 0, upper: 1 })
        ));
        assert!(matches!(
            SquareCellGraph::from_intervals(&[(2, 1)]),
            Err(IscError::EmptyRow { .. })
        ));
    }

    #[test]
    fn mirror_swaps_trapezia() {
        let g = isc(2, 4, 3, 6).mirrored();
        let h = isc(4, 2, 3, 6);
        assert_eq!(g.vertex_count(), h.vertex_count());
        assert_eq!(g.edge_count(), h.edge_count());
        assert_eq!(g.rows()[0].len(), 5);
    }

    #[test]
    fn adjacency_list_format() {
        let g = isc(1, 1, 1, 1);
        assert_eq!(
            g.to_adjacency_list(),
            "0,0: 1,0 0,1\n1,0: 0,0 1,1\n0,1: 0,0 1,1\n1,1: 1,0 0,1\n"
        );
        let dot = g.to_dot("C4");
        assert!(dot.starts_with("graph \"C4\" {"));
        assert!(dot.contains("\"v_0_0\" -- \"v_1_0\";"));
        assert_eq!(dot.matches("--").count(), 4);
    }
}
