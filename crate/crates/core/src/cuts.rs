//! Cut method: Wiener index as a sum over Θ*-classes of the products of
//! the two component orders left after removing the class.
//!
//! Three sources of cuts are provided:
//! - [`theta_star_partition`]: the Djoković–Winkler relation evaluated on
//!   every pair of edges, closed transitively. Quadratic in `|E|`; used as
//!   the reference partition.
//! - [`geometric_cuts`]: one class per horizontal strip (its vertical edges)
//!   and one per column strip (its horizontal edges).
//! - [`table_cuts`]: the closed-form component orders per cut family, which
//!   need only the parameters and run in `O(n + m)`.

use std::fmt;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::distance::all_pairs_distances;
use crate::error::{IscError, Result};
use crate::lattice::{Edge, SquareCellGraph};
use crate::params::{vertex_count, CaseKind, IscParams};

/// Cut families. `H*`/`V*` follow the table layout; `HorizontalStrip` and
/// `VerticalStrip` tag cuts found geometrically or via Θ*.
///
/// A horizontal cut is the class of vertical edges crossing one horizontal
/// strip; a vertical cut is the class of horizontal edges in one column strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CutFamily {
    H1,
    H2,
    H3,
    V1,
    V2,
    V3,
    V4,
    V5,
    HorizontalStrip,
    VerticalStrip,
}

impl CutFamily {
    pub fn is_horizontal(self) -> bool {
        matches!(
            self,
            CutFamily::H1 | CutFamily::H2 | CutFamily::H3 | CutFamily::HorizontalStrip
        )
    }
}

impl fmt::Display for CutFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CutFamily::H1 => "H1",
            CutFamily::H2 => "H2",
            CutFamily::H3 => "H3",
            CutFamily::V1 => "V1",
            CutFamily::V2 => "V2",
            CutFamily::V3 => "V3",
            CutFamily::V4 => "V4",
            CutFamily::V5 => "V5",
            CutFamily::HorizontalStrip => "H",
            CutFamily::VerticalStrip => "V",
        };
        f.write_str(s)
    }
}

/// One cut with the orders of its two components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRecord {
    pub family: CutFamily,
    pub k: u64,
    /// Number of edges in the class; tables do not provide it.
    pub edge_count: Option<u64>,
    pub f_small: BigInt,
    pub f_comp: BigInt,
}

impl CutRecord {
    fn from_sizes(
        family: CutFamily,
        k: u64,
        edge_count: Option<u64>,
        side: usize,
        total: usize,
    ) -> Self {
        CutRecord {
            family,
            k,
            edge_count,
            f_small: BigInt::from(side),
            f_comp: BigInt::from(total - side),
        }
    }

    pub fn product(&self) -> BigInt {
        &self.f_small * &self.f_comp
    }

    /// Component orders as `(smaller, larger)`, independent of which side a
    /// source counts from.
    pub fn normalized_sizes(&self) -> (BigInt, BigInt) {
        if self.f_small <= self.f_comp {
            (self.f_small.clone(), self.f_comp.clone())
        } else {
            (self.f_comp.clone(), self.f_small.clone())
        }
    }
}

/// Multiset key for comparing cut lists from different sources.
pub fn cut_signature(cuts: &[CutRecord]) -> Vec<(bool, BigInt, BigInt)> {
    let mut sig: Vec<_> = cuts
        .iter()
        .map(|c| {
            let (a, b) = c.normalized_sizes();
            (c.family.is_horizontal(), a, b)
        })
        .collect();
    sig.sort();
    sig
}

/// First record of `cuts` whose orientation and component sizes have no
/// counterpart in `reference` (multiset difference).
pub fn first_unmatched<'a>(
    cuts: &'a [CutRecord],
    reference: &[CutRecord],
) -> Option<&'a CutRecord> {
    let mut pool = cut_signature(reference);
    for c in cuts {
        let (a, b) = c.normalized_sizes();
        let key = (c.family.is_horizontal(), a, b);
        match pool.binary_search(&key) {
            Ok(i) => {
                pool.remove(i);
            }
            Err(_) => return Some(c),
        }
    }
    None
}

/// `W = sum f_small * f_comp`
pub fn wiener_from_cuts(cuts: &[CutRecord]) -> BigInt {
    cuts.iter().map(CutRecord::product).sum()
}

/// CSV with header `family,k,edge_count,f_small,f_comp`; a missing edge
/// count is left empty.
pub fn cuts_to_csv(cuts: &[CutRecord]) -> String {
    let mut out = String::from("family,k,edge_count,f_small,f_comp\n");
    for c in cuts {
        let edges = c.edge_count.map(|e| e.to_string()).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            c.family, c.k, edges, c.f_small, c.f_comp
        );
    }
    out
}

/// A partition of the edge set into classes, kept in canonical order
/// (edges sorted within a class, classes sorted by their first edge).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    classes: Vec<Vec<Edge>>,
}

impl EdgePartition {
    pub fn new(mut classes: Vec<Vec<Edge>>) -> Self {
        for class in &mut classes {
            class.sort();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort();
        EdgePartition { classes }
    }

    pub fn classes(&self) -> &[Vec<Edge>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// True when the classes are disjoint and cover exactly `edges`.
    pub fn covers_exactly(&self, edges: &[Edge]) -> bool {
        let mut all: Vec<Edge> = self.classes.iter().flatten().copied().collect();
        let mut expected = edges.to_vec();
        all.sort();
        expected.sort();
        all == expected
    }

    /// Orders of the connected components of `graph` minus each class.
    pub fn component_orders(&self, graph: &SquareCellGraph) -> Vec<Vec<usize>> {
        self.classes
            .iter()
            .map(|class| components_without(graph, class))
            .collect()
    }

    /// Converts to cut records after checking that every class splits the
    /// graph into exactly two components.
    pub fn to_cuts(&self, graph: &SquareCellGraph) -> Result<Vec<CutRecord>> {
        let total = graph.vertex_count();
        let mut horizontal = 0;
        let mut vertical = 0;
        let mut cuts = Vec::with_capacity(self.classes.len());
        for (i, (class, orders)) in self
            .classes
            .iter()
            .zip(self.component_orders(graph))
            .enumerate()
        {
            if orders.len() != 2 {
                return Err(IscError::NotTwoComponents {
                    class: i,
                    components: orders.len(),
                });
            }
            let (a, b) = (graph.vertex(class[0].u), graph.vertex(class[0].v));
            // a vertical edge makes a horizontal cut
            let family = if a.x == b.x {
                horizontal += 1;
                (CutFamily::HorizontalStrip, horizontal)
            } else {
                vertical += 1;
                (CutFamily::VerticalStrip, vertical)
            };
            cuts.push(CutRecord::from_sizes(
                family.0,
                family.1,
                Some(class.len() as u64),
                orders[0],
                total,
            ));
        }
        Ok(cuts)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orders of the components of `graph - removed`, the component holding
/// vertex 0 first.
fn components_without(graph: &SquareCellGraph, removed: &[Edge]) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut uf = UnionFind::new(n);
    for e in graph.edges() {
        if removed.binary_search(&e).is_err() {
            uf.union(e.u, e.v);
        }
    }
    let mut sizes = vec![0usize; n];
    for v in 0..n {
        let r = uf.find(v);
        sizes[r] += 1;
    }
    // roots are the minimum index of their component, so vertex 0's
    // component comes first
    sizes.into_iter().filter(|&s| s > 0).collect()
}

/// Θ*-partition of the edge set: edges `wx` and `yz` are related when
/// `d(w,y) + d(x,z) != d(w,z) + d(x,y)`; the classes are the transitive
/// closure. Fails if some class does not split the graph into two parts.
pub fn theta_star_partition(graph: &SquareCellGraph) -> Result<EdgePartition> {
    let n = graph.vertex_count();
    let dist = all_pairs_distances(graph)?;
    let d = |a: usize, b: usize| dist[a * n + b];
    let edges = graph.edges();
    let mut uf = UnionFind::new(edges.len());
    for (i, e) in edges.iter().enumerate() {
        for (j, f) in edges.iter().enumerate().skip(i + 1) {
            if d(e.u, f.u) + d(e.v, f.v) != d(e.u, f.v) + d(e.v, f.u) {
                uf.union(i, j);
            }
        }
    }
    let mut classes: Vec<Vec<Edge>> = vec![Vec::new(); edges.len()];
    for (i, e) in edges.iter().enumerate() {
        let r = uf.find(i);
        classes[r].push(*e);
    }
    let partition = EdgePartition::new(classes);
    for (i, orders) in partition.component_orders(graph).iter().enumerate() {
        if orders.len() != 2 {
            return Err(IscError::NotTwoComponents {
                class: i,
                components: orders.len(),
            });
        }
    }
    Ok(partition)
}

/// Strip partition: the vertical edges of each horizontal strip and the
/// horizontal edges of each column strip.
pub fn geometric_partition(graph: &SquareCellGraph) -> EdgePartition {
    let mut classes: Vec<Vec<Edge>> = (0..graph.rows().len().saturating_sub(1))
        .map(|y| graph.vertical_edges_in_strip(y))
        .collect();
    classes.extend(
        graph
            .column_strips()
            .into_iter()
            .map(|x| graph.horizontal_edges_in_column(x)),
    );
    EdgePartition::new(classes)
}

/// Strip cuts with component orders counted from the bottom (horizontal
/// cuts) or from the left (vertical cuts).
pub fn geometric_cuts(graph: &SquareCellGraph) -> Vec<CutRecord> {
    let total = graph.vertex_count();
    let rows = graph.rows();
    let mut cuts = Vec::with_capacity(rows.len() + total);
    for y in 0..rows.len().saturating_sub(1) {
        cuts.push(CutRecord::from_sizes(
            CutFamily::HorizontalStrip,
            y as u64 + 1,
            Some(rows[y].overlap(&rows[y + 1]) as u64),
            graph.vertices_up_to_row(y),
            total,
        ));
    }
    for (i, x) in graph.column_strips().into_iter().enumerate() {
        let edges = rows
            .iter()
            .filter(|r| r.contains(x) && r.contains(x + 1))
            .count();
        cuts.push(CutRecord::from_sizes(
            CutFamily::VerticalStrip,
            i as u64 + 1,
            Some(edges as u64),
            graph.vertices_up_to_column(x),
            total,
        ));
    }
    cuts
}

/// One table row: `f(k) = (c0 + c1 k + c2 k^2) / divisor` for `1 <= k <= range`.
struct TableRow {
    family: CutFamily,
    range: i128,
    c0: BigInt,
    c1: BigInt,
    c2: BigInt,
    divisor: u32,
}

impl TableRow {
    fn new(
        family: CutFamily,
        range: i128,
        c0: BigInt,
        c1: BigInt,
        c2: BigInt,
        divisor: u32,
    ) -> Self {
        TableRow {
            family,
            range,
            c0,
            c1,
            c2,
            divisor,
        }
    }
}

fn k_squared_plus_k(family: CutFamily, range: i128) -> TableRow {
    TableRow::new(family, range, 0.into(), 1.into(), 1.into(), 1)
}

fn table_rows(params: &IscParams) -> Vec<TableRow> {
    use CutFamily::*;

    let (p, q, m, n) = params.big();
    let (pi, qi, mi, ni) = (
        params.p() as i128,
        params.q() as i128,
        params.m() as i128,
        params.n() as i128,
    );
    let t = (ni - pi) / 2;
    let s = (ni - qi) / 2;
    let z = || BigInt::zero();

    // Horizontal cuts are the same in every case.
    let mut rows = vec![
        TableRow::new(H1, t, z(), p.clone(), 1.into(), 1),
        TableRow::new(H2, mi, &n * &n - &p * &p - 4, 4 * &n + 8, z(), 4),
        TableRow::new(
            H3,
            s,
            &n * &n - &p * &p + 4 * &m * &n + 8 * &m - 4,
            4 * &n + 8,
            (-4).into(),
            4,
        ),
    ];

    match params.case() {
        CaseKind::Case1 => rows.extend([
            k_squared_plus_k(V1, (2 * mi + ni - qi - 2) / 2),
            TableRow::new(
                V2,
                (qi - pi - 2 * mi + 2) / 2,
                4 * &m * &m + &n * &n + &q * &q + 4 * &m * &n
                    - 4 * &m * &q
                    - 4 * &m
                    - 2 * &n * &q
                    - 2 * &n
                    + 2 * &q,
                8 * &m + 4 * &n - 4 * &q - 2,
                2.into(),
                4,
            ),
            TableRow::new(
                V3,
                pi,
                2 * &n * &n - 4 * &m * &m + &p * &p - &q * &q - 4 * &m * &p + 4 * &m * &q
                    - 4 * &n * &p
                    + 2 * &p * &q
                    - 2 * &p
                    - 2 * &q
                    + 4 * &m
                    + 4 * &n,
                8 + 8 * &m + 8 * &n - 4 * &p - 4 * &q,
                z(),
                8,
            ),
            TableRow::new(
                V4,
                (qi - pi + 2 * mi - 2) / 2,
                2 * &n * &n - 4 * &m * &m - 3 * &p * &p - &q * &q
                    + 4 * &m * &p
                    + 4 * &n * &p
                    + 4 * &m * &q
                    - 2 * &p * &q
                    + 6 * &p
                    - 2 * &q
                    + 4 * &m
                    + 4 * &n,
                8 * &m + 8 * &n - 4 * &p - 4 * &q + 12,
                (-4).into(),
                8,
            ),
            TableRow::new(
                V5,
                s,
                8 * &m - 2 * &n + 6 * &q + 4 * &m * &n + 2 * &n * &q + &n * &n
                    - &p * &p
                    - 2 * &q * &q
                    - 8,
                4 * &n - 4 * &q + 12,
                (-4).into(),
                4,
            ),
        ]),
        CaseKind::Case2 => rows.extend([
            k_squared_plus_k(V1, t),
            TableRow::new(
                V2,
                pi,
                &n * &n + &p * &p - 2 * &n * &p + 2 * &n - 2 * &p,
                4 * &n - 4 * &p + 6,
                2.into(),
                4,
            ),
            TableRow::new(
                V3,
                (2 * mi - pi - qi - 2) / 2,
                &n * &n - &p * &p + 2 * &n * &p + 2 * &n + 4 * &p,
                4 * &n + 8,
                z(),
                4,
            ),
            TableRow::new(
                V4,
                qi,
                &n * &n - &p * &p + 4 * &m * &n - 2 * &n * &q + 8 * &m - 2 * &n - 4 * &q - 8,
                4 * &n + 10,
                (-2).into(),
                4,
            ),
            TableRow::new(
                V5,
                s,
                &n * &n - &p * &p + 4 * &m * &n + 2 * &n * &q + 8 * &m - 2 * &n + 6 * &q
                    - 2 * &q * &q
                    - 8,
                4 * &n - 4 * &q + 12,
                (-4).into(),
                4,
            ),
        ]),
        CaseKind::Case3 => rows.extend([
            k_squared_plus_k(V1, t),
            TableRow::new(
                V2,
                (2 * mi + pi - qi - 2) / 2,
                &n * &n + &p * &p - 2 * &n * &p + 2 * &n - 2 * &p,
                4 * &n - 4 * &p + 6,
                2.into(),
                4,
            ),
            TableRow::new(
                V3,
                (pi + qi - 2 * mi + 2) / 2,
                4 * &m * &m + 2 * &n * &n - &p * &p + &q * &q + 8 * &m * &n
                    - 4 * &m * &p
                    - 4 * &m * &q
                    - 4 * &n * &q
                    + 2 * &p * &q
                    + 4 * &m
                    - 4 * &n
                    + 6 * &p
                    - 2 * &q
                    - 8,
                8 * &m + 8 * &n - 4 * &p - 4 * &q + 8,
                z(),
                8,
            ),
            TableRow::new(
                V4,
                (2 * mi - pi + qi - 2) / 2,
                2 * &n * &n - 4 * &m * &m - 3 * &p * &p - &q * &q + 4 * &m * &p + 4 * &m * &q
                    - 2 * &p * &q
                    + 4 * &n * &p
                    + 4 * &m
                    + 4 * &n
                    + 6 * &p
                    - 2 * &q,
                8 * &m + 8 * &n - 4 * &p - 4 * &q + 12,
                (-4).into(),
                8,
            ),
            TableRow::new(
                V5,
                s,
                2 * &n * &n - 2 * &p * &p - 4 * &q * &q + 8 * &m * &n + 4 * &n * &q + 16 * &m
                    - 4 * &n
                    + 12 * &q
                    - 16,
                8 * &n - 8 * &q + 24,
                (-8).into(),
                8,
            ),
        ]),
    }
    rows
}

/// Cut records from the component-order tables for the case of `params`.
/// `f_small` is the component the table counts; `f_comp = |V| - f_small`.
pub fn table_cuts(params: &IscParams) -> Result<Vec<CutRecord>> {
    let total = vertex_count(params);
    let case = params.case();
    let rows = table_rows(params);
    let capacity: i128 = rows.iter().map(|r| r.range.max(0)).sum();
    let mut cuts = Vec::with_capacity(capacity as usize);
    for row in rows {
        debug_assert!(row.range >= 0, "{} range negative for {params}", row.family);
        let divisor = BigInt::from(row.divisor);
        for k in 1..=row.range.max(0) as u64 {
            let kb = BigInt::from(k);
            let numerator = &row.c0 + &kb * (&row.c1 + &kb * &row.c2);
            let (f, rem) = numerator.div_rem(&divisor);
            if !rem.is_zero() || !f.is_positive() || f >= total {
                return Err(IscError::InvalidCutSize {
                    family: row.family.to_string(),
                    k,
                    value: format!("{numerator}/{divisor}"),
                    case,
                });
            }
            let comp = &total - &f;
            cuts.push(CutRecord {
                family: row.family,
                k,
                edge_count: None,
                f_small: f,
                f_comp: comp,
            });
        }
    }
    Ok(cuts)
}
