//! Brute-force distances: BFS from every vertex.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{IscError, Result};
use crate::lattice::{SquareCellGraph, Vertex};

/// Number of unordered vertex pairs at each distance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistanceDistribution {
    counts: BTreeMap<u32, u64>,
}

impl DistanceDistribution {
    pub fn counts(&self) -> &BTreeMap<u32, u64> {
        &self.counts
    }

    pub fn pairs(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn diameter(&self) -> u32 {
        self.counts.keys().next_back().copied().unwrap_or(0)
    }

    /// `sum d * count(d)`
    pub fn wiener(&self) -> BigInt {
        self.counts
            .iter()
            .map(|(&d, &c)| BigInt::from(d) * BigInt::from(c))
            .sum()
    }

    /// CSV with header `d,count`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("d,count\n");
        for (d, c) in &self.counts {
            let _ = writeln!(out, "{d},{c}");
        }
        out
    }
}

/// Reusable BFS state so repeated searches do not reallocate.
struct Bfs {
    adjacency: Vec<Vec<usize>>,
    queue: VecDeque<usize>,
}

impl Bfs {
    fn new(graph: &SquareCellGraph) -> Self {
        Bfs {
            adjacency: graph.adjacency(),
            queue: VecDeque::new(),
        }
    }

    fn run(&mut self, graph: &SquareCellGraph, source: usize, dist: &mut [u32]) -> Result<()> {
        dist.fill(u32::MAX);
        dist[source] = 0;
        self.queue.clear();
        self.queue.push_back(source);
        while let Some(u) = self.queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    self.queue.push_back(w);
                }
            }
        }
        if let Some(i) = dist.iter().position(|&d| d == u32::MAX) {
            let v = graph.vertex(i);
            return Err(IscError::UnreachableVertex { x: v.x, y: v.y });
        }
        Ok(())
    }
}

/// Distances from `source` to every vertex, indexed by dense vertex index.
pub fn bfs_distances(graph: &SquareCellGraph, source: Vertex) -> Result<Vec<u32>> {
    let s = graph.index_of(source).ok_or(IscError::VertexNotFound {
        x: source.x,
        y: source.y,
    })?;
    let mut dist = vec![0; graph.vertex_count()];
    Bfs::new(graph).run(graph, s, &mut dist)?;
    Ok(dist)
}

/// Row-major `N x N` distance table.
pub fn all_pairs_distances(graph: &SquareCellGraph) -> Result<Vec<u32>> {
    let n = graph.vertex_count();
    let mut table = vec![0; n * n];
    let mut bfs = Bfs::new(graph);
    for (s, row) in table.chunks_mut(n.max(1)).enumerate().take(n) {
        bfs.run(graph, s, row)?;
    }
    Ok(table)
}

/// Wiener index and distance distribution by BFS from every vertex.
pub fn wiener_bfs(graph: &SquareCellGraph) -> Result<(BigInt, DistanceDistribution)> {
    let n = graph.vertex_count();
    let mut bfs = Bfs::new(graph);
    let mut dist = vec![0; n];
    let mut counts = BTreeMap::new();
    let mut total = BigInt::from(0);
    for s in 0..n {
        bfs.run(graph, s, &mut dist)?;
        // count each unordered pair once, from its lower index
        let mut row_sum: u64 = 0;
        for &d in &dist[s + 1..] {
            *counts.entry(d).or_insert(0u64) += 1;
            row_sum += d as u64;
        }
        total += row_sum;
    }
    Ok((total, DistanceDistribution { counts }))
}

/// `mu = 2W / (N (N - 1))`, in lowest terms.
pub fn mu_from_wiener(wiener: &BigInt, order: &BigInt) -> Result<BigRational> {
    if *order < BigInt::from(2) {
        return Err(IscError::OrderTooSmall(order.to_string()));
    }
    Ok(BigRational::new(
        2 * wiener,
        order * (order - BigInt::one()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::build_isc;
    use crate::params::IscParams;

    fn isc(p: i64, q: i64, m: i64, n: i64) -> SquareCellGraph {
        build_isc(&IscParams::new(p, q, m, n).unwrap())
    }

    fn ratio(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn c4_from_corner() {
        let g = isc(1, 1, 1, 1);
        let mut d = bfs_distances(&g, Vertex::new(0, 0)).unwrap();
        d.sort();
        assert_eq!(d, vec![0, 1, 1, 2]);
    }

    #[test]
    fn ladder_corner_to_corner() {
        let g = isc(2, 2, 1, 2);
        let d = bfs_distances(&g, Vertex::new(0, 0)).unwrap();
        assert_eq!(d.iter().max(), Some(&3));
        assert_eq!(d[g.index_of(Vertex::new(2, 1)).unwrap()], 3);
    }

    #[test]
    fn hexagon_eccentricity() {
        let g = isc(2, 2, 1, 4);
        // farthest vertices from (1, 0) are (3, 3) and (4, 2), 5 steps away
        let d = bfs_distances(&g, Vertex::new(1, 0)).unwrap();
        assert_eq!(d.iter().max(), Some(&5));
    }

    #[test]
    fn missing_source() {
        let g = isc(1, 1, 1, 1);
        assert_eq!(
            bfs_distances(&g, Vertex::new(5, 5)),
            Err(IscError::VertexNotFound { x: 5, y: 5 })
        );
    }

    #[test]
    fn small_wiener_values() {
        let (w, dist) = wiener_bfs(&isc(1, 1, 1, 1)).unwrap();
        assert_eq!(w, BigInt::from(8));
        assert_eq!(
            dist.counts()
                .iter()
                .map(|(&d, &c)| (d, c))
                .collect::<Vec<_>>(),
            vec![(1, 4), (2, 2)]
        );
        assert_eq!(wiener_bfs(&isc(2, 2, 1, 2)).unwrap().0, BigInt::from(25));
        let (w, dist) = wiener_bfs(&isc(2, 2, 1, 4)).unwrap();
        assert_eq!(w, BigInt::from(318));
        assert_eq!(dist.diameter(), 5);
    }

    #[test]
    fn ladder_matches_manhattan_sum() {
        // 2 x (k + 1) grid: Wiener index is the sum of Manhattan distances.
        for k in 1..=10i64 {
            let g = SquareCellGraph::from_intervals(&[(0, k), (0, k)]).unwrap();
            let pts: Vec<_> = g.vertices().collect();
            let mut manhattan = 0i64;
            for (i, a) in pts.iter().enumerate() {
                for b in &pts[i + 1..] {
                    manhattan += (a.x - b.x).abs() + (a.y - b.y).abs();
                }
            }
            assert_eq!(wiener_bfs(&g).unwrap().0, BigInt::from(manhattan));
        }
    }

    #[test]
    fn distribution_is_consistent() {
        for params in IscParams::sweep(8, 4) {
            let g = build_isc(&params);
            let (w, dist) = wiener_bfs(&g).unwrap();
            let n = g.vertex_count() as u64;
            assert_eq!(dist.pairs(), n * (n - 1) / 2);
            assert_eq!(dist.wiener(), w);
        }
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu_from_wiener(&8.into(), &4.into()).unwrap(), ratio(4, 3));
        assert_eq!(
            mu_from_wiener(&318.into(), &16.into()).unwrap(),
            ratio(53, 20)
        );
        assert_eq!(mu_from_wiener(&25.into(), &6.into()).unwrap(), ratio(5, 3));
        assert!(matches!(
            mu_from_wiener(&0.into(), &1.into()),
            Err(IscError::OrderTooSmall(_))
        ));
    }

    #[test]
    fn distribution_csv() {
        let (_, dist) = wiener_bfs(&isc(1, 1, 1, 1)).unwrap();
        assert_eq!(dist.to_csv(), "d,count\n1,4\n2,2\n");
    }
}
