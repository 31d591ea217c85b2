//! Vertex enumeration and the dense interlacing graph.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::polygon::{Parameters, Polygon};
use crate::Count;

/// All `r`-stable `k`-polygons on `[n]`, lexicographically sorted.
///
/// Points are generated by walking gaps of at least `r`, so non-stable
/// subsets are never visited.
pub fn enumerate_stable_polygons(params: &Parameters) -> Vec<Polygon> {
    let (n, k, r) = (params.n(), params.k() as usize, params.r());
    let mut out = Vec::new();
    let mut points = Vec::with_capacity(k);
    for first in 1..=n {
        points.push(first);
        extend(n, k, r, &mut points, &mut out);
        points.pop();
    }
    out
}

fn extend(n: u32, k: usize, r: u32, points: &mut Vec<u32>, out: &mut Vec<Polygon>) {
    let first = points[0];
    let last = *points.last().unwrap();
    if points.len() == k {
        if first + n - last >= r {
            out.push(Polygon::from_sorted_unchecked(n, points.clone()));
        }
        return;
    }
    // Remaining points need (k - len) more gaps of size >= r before wrapping to `first + n`.
    let remaining = (k - points.len()) as u32;
    let mut next = last + r;
    while next + (remaining - 1) * r + r <= first + n && next <= n {
        points.push(next);
        extend(n, k, r, points, out);
        points.pop();
        next += 1;
    }
}

/// Number of `r`-stable `k`-polygons through any fixed point:
/// `C(n - (r-1)k - 1, k - 1)`.
pub fn per_point_count(params: &Parameters) -> Result<Count> {
    let (n, k, r) = (
        params.n() as Count,
        params.k() as Count,
        params.r() as Count,
    );
    binomial(n - (r - 1) * k - 1, k - 1).ok_or(Error::Overflow("per-point count"))
}

/// `(n / k) * C(n - (r-1)k - 1, k - 1)`, multiplied before dividing.
pub fn vertex_count_formula(params: &Parameters) -> Result<Count> {
    let per_point = per_point_count(params)?;
    let total = per_point
        .checked_mul(params.n() as Count)
        .ok_or(Error::Overflow("vertex count"))?;
    let k = params.k() as Count;
    if total % k != 0 {
        return Err(Error::Internal(format!(
            "vertex count {total} not divisible by k={k} for {params}"
        )));
    }
    Ok(total / k)
}

/// The `r`-stable interlacing graph with canonical (lexicographic) vertex order.
#[derive(Clone, Debug)]
pub struct InterlacingGraph {
    params: Parameters,
    vertices: Vec<Polygon>,
    index: HashMap<Polygon, usize>,
    adjacency: Vec<FixedBitSet>,
}

impl InterlacingGraph {
    pub fn build(params: &Parameters) -> InterlacingGraph {
        let vertices = enumerate_stable_polygons(params);
        let v = vertices.len();
        let mut adjacency = vec![FixedBitSet::with_capacity(v); v];
        for i in 0..v {
            for j in (i + 1)..v {
                if vertices[i].interlaces(&vertices[j]) {
                    adjacency[i].insert(j);
                    adjacency[j].insert(i);
                }
            }
        }
        let index = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        InterlacingGraph {
            params: *params,
            vertices,
            index,
            adjacency,
        }
    }

    /// Rebuilds the graph from imported data, checking that the vertex list and
    /// edge set are exactly those of the interlacing graph for `params`.
    pub fn from_parts(
        params: &Parameters,
        vertices: Vec<Polygon>,
        edges: &[(usize, usize)],
    ) -> Result<InterlacingGraph> {
        let graph = InterlacingGraph::build(params);
        if vertices != graph.vertices {
            return Err(Error::Malformed(format!(
                "vertex list does not match the canonical vertices of {params}"
            )));
        }
        let mut seen = vec![FixedBitSet::with_capacity(graph.vertex_count()); graph.vertex_count()];
        for &(u, v) in edges {
            if u >= graph.vertex_count() || v >= graph.vertex_count() || u == v {
                return Err(Error::Malformed(format!("bad edge ({u}, {v})")));
            }
            if !graph.adjacent(u, v) {
                return Err(Error::Malformed(format!(
                    "({u}, {v}) is not an interlacing pair"
                )));
            }
            seen[u].insert(v);
            seen[v].insert(u);
        }
        if seen != graph.adjacency {
            return Err(Error::Malformed("edge list is incomplete".into()));
        }
        Ok(graph)
    }

    pub fn params(&self) -> &Parameters {
        &self.params
    }

    pub fn vertices(&self) -> &[Polygon] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &Polygon {
        &self.vertices[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn index_of(&self, polygon: &Polygon) -> Option<usize> {
        self.index.get(polygon).copied()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency
            .iter()
            .map(|row| row.count_ones(..))
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Checks that `set` is a duplicate-free list of pairwise non-adjacent vertices.
    pub fn is_independent(&self, set: &[usize]) -> bool {
        let mut seen = FixedBitSet::with_capacity(self.vertex_count());
        for &v in set {
            if v >= self.vertex_count() || seen.contains(v) {
                return false;
            }
            if self.adjacency[v].intersection(&seen).next().is_some() {
                return false;
            }
            seen.insert(v);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, k: u32, r: u32) -> Parameters {
        Parameters::new(n, k, r).unwrap()
    }

    fn points(ps: &[Polygon]) -> Vec<Vec<u32>> {
        ps.iter().map(|p| p.points().to_vec()).collect()
    }

    /// Filters all `C(n, k)` subsets; independent of the gap walk.
    fn brute_force_vertices(p: &Parameters) -> Vec<Polygon> {
        let (n, k) = (p.n(), p.k());
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() == k {
                let pts = (1..=n).filter(|x| mask & (1 << (x - 1)) != 0).collect();
                let poly = Polygon::new(n, pts).unwrap();
                if poly.is_r_stable(p.r()) {
                    out.push(poly);
                }
            }
        }
        out.sort();
        out
    }

    /// Tuples of integers >= r summing to n, counted by dynamic programming.
    fn count_bounded_compositions(n: u32, k: u32, r: u32) -> u128 {
        let mut ways = vec![0u128; n as usize + 1];
        ways[0] = 1;
        for _ in 0..k {
            let mut next = vec![0u128; n as usize + 1];
            for (total, &w) in ways.iter().enumerate() {
                let mut part = r as usize;
                while total + part <= n as usize {
                    next[total + part] += w;
                    part += 1;
                }
            }
            ways = next;
        }
        ways[n as usize]
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(
            points(&enumerate_stable_polygons(&params(6, 2, 3))),
            vec![vec![1, 4], vec![2, 5], vec![3, 6]]
        );
        assert_eq!(enumerate_stable_polygons(&params(6, 2, 2)).len(), 9);
        assert_eq!(enumerate_stable_polygons(&params(7, 2, 2)).len(), 14);
    }

    #[test]
    fn formula_examples() {
        assert_eq!(vertex_count_formula(&params(6, 2, 2)).unwrap(), 9);
        assert_eq!(vertex_count_formula(&params(6, 2, 3)).unwrap(), 3);
        assert_eq!(vertex_count_formula(&params(8, 3, 2)).unwrap(), 16);
        assert_eq!(per_point_count(&params(6, 2, 2)).unwrap(), 3);
        assert_eq!(per_point_count(&params(7, 2, 2)).unwrap(), 4);
        for k in 1..6 {
            for r in 2..5 {
                assert_eq!(per_point_count(&params(k * r, k, r)).unwrap(), 1);
            }
        }
        assert!(vertex_count_formula(&params(200, 10, 2)).is_ok());
        assert!(vertex_count_formula(&params(4000, 1000, 2)).is_err());
    }

    #[test]
    fn enumeration_matches_brute_force_and_formula() {
        for p in Parameters::all_up_to(14) {
            let fast = enumerate_stable_polygons(&p);
            assert_eq!(fast, brute_force_vertices(&p), "{p}");
            assert_eq!(fast.len() as u128, vertex_count_formula(&p).unwrap(), "{p}");
            let through_n = fast.iter().filter(|q| q.contains(p.n())).count() as u128;
            assert_eq!(through_n, per_point_count(&p).unwrap(), "{p}");
            assert_eq!(
                count_bounded_compositions(p.n(), p.k(), p.r()),
                per_point_count(&p).unwrap(),
                "{p}"
            );
        }
    }

    #[test]
    fn small_graphs() {
        let k3 = InterlacingGraph::build(&params(6, 2, 3));
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        let c5 = InterlacingGraph::build(&params(5, 2, 2));
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(InterlacingGraph::build(&params(6, 2, 2)).vertex_count(), 9);
    }

    #[test]
    fn adjacency_symmetric_and_rotation_invariant() {
        for p in Parameters::all_up_to(11) {
            let g = InterlacingGraph::build(&p);
            for u in 0..g.vertex_count() {
                assert!(!g.adjacent(u, u));
                let ru = g.index_of(&g.vertex(u).rotate(1)).unwrap();
                for v in 0..g.vertex_count() {
                    assert_eq!(g.adjacent(u, v), g.adjacent(v, u));
                    let rv = g.index_of(&g.vertex(v).rotate(1)).unwrap();
                    assert_eq!(g.adjacent(u, v), g.adjacent(ru, rv), "{p}");
                }
            }
        }
    }

    #[test]
    fn stable_graph_is_induced_subgraph_of_two_stable_graph() {
        for p in Parameters::all_up_to(12).filter(|p| p.r() > 2) {
            let g = InterlacingGraph::build(&p);
            let base = InterlacingGraph::build(&p.with_stability(2).unwrap());
            let map: Vec<usize> = g
                .vertices()
                .iter()
                .map(|q| base.index_of(q).unwrap())
                .collect();
            let expected: Vec<usize> = (0..base.vertex_count())
                .filter(|&i| base.vertex(i).is_r_stable(p.r()))
                .collect();
            assert_eq!(map, expected);
            for (u, &bu) in map.iter().enumerate() {
                for (v, &bv) in map.iter().enumerate() {
                    assert_eq!(g.adjacent(u, v), base.adjacent(bu, bv));
                }
            }
        }
    }

    #[test]
    fn from_parts_validates() {
        let p = params(6, 2, 2);
        let g = InterlacingGraph::build(&p);
        let edges: Vec<_> = g.edges().collect();
        assert!(InterlacingGraph::from_parts(&p, g.vertices().to_vec(), &edges).is_ok());
        assert!(InterlacingGraph::from_parts(&p, g.vertices().to_vec(), &edges[1..]).is_err());
        let mut verts = g.vertices().to_vec();
        verts.swap(0, 1);
        assert!(InterlacingGraph::from_parts(&p, verts, &edges).is_err());
    }

    #[test]
    fn independence_check() {
        let g = InterlacingGraph::build(&params(5, 2, 2));
        let (u, v) = g.edges().next().unwrap();
        assert!(!g.is_independent(&[u, v]));
        assert!(g.is_independent(&[u]));
        assert!(!g.is_independent(&[u, u]));
        assert!(g.is_independent(&[]));
    }
}
