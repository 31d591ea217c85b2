//! Brute-force certifiers. Each search returns its answer together with a
//! witness, and every witness is re-checked by the validators here, which do
//! not share code with the searches.

mod chromatic;
mod homomorphism;
mod independence;

pub use chromatic::chromatic_number;
pub use homomorphism::{
    circular_chromatic_number, has_homomorphism, CircularValue, CircularWitness,
};
pub use independence::{max_independent_set, maximal_independent_sets, random_independent_set};

use crate::arith::ReducedFraction;
use crate::clique::CircularCliqueSpec;
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;
use crate::Fraction;

pub const DEFAULT_VERTEX_CAP: usize = 2000;
/// Homomorphism domains are stored as `u128` masks.
pub const MAX_TARGET_ORDER: u32 = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub vertex_cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            vertex_cap: DEFAULT_VERTEX_CAP,
        }
    }
}

impl OracleConfig {
    pub(crate) fn check(&self, graph: &InterlacingGraph) -> Result<()> {
        if graph.vertex_count() > self.vertex_cap {
            return Err(Error::CapExceeded {
                vertices: graph.vertex_count(),
                cap: self.vertex_cap,
            });
        }
        Ok(())
    }
}

/// An exact value, the certificate that realizes it, and the number of
/// search nodes visited.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleResult<V, W> {
    pub value: V,
    pub witness: W,
    pub explored: u64,
}

pub fn validate_independent_set(graph: &InterlacingGraph, set: &[usize]) -> bool {
    let vs = graph.vertices();
    for (i, &u) in set.iter().enumerate() {
        if u >= vs.len() {
            return false;
        }
        for &v in &set[i + 1..] {
            if u == v || vs[u].interlaces(&vs[v]) {
                return false;
            }
        }
    }
    true
}

pub fn validate_proper_coloring(graph: &InterlacingGraph, colors: &[u32]) -> bool {
    let vs = graph.vertices();
    colors.len() == vs.len()
        && (0..vs.len()).all(|u| {
            ((u + 1)..vs.len()).all(|v| colors[u] != colors[v] || !vs[u].interlaces(&vs[v]))
        })
}

pub fn validate_homomorphism(
    graph: &InterlacingGraph,
    target: CircularCliqueSpec,
    map: &[u32],
) -> bool {
    let vs = graph.vertices();
    map.len() == vs.len()
        && map.iter().all(|&a| a < target.order)
        && (0..vs.len()).all(|u| {
            ((u + 1)..vs.len())
                .all(|v| !vs[u].interlaces(&vs[v]) || target.adjacent(map[u], map[v]))
        })
}

/// `|V| / alpha`, the fractional lower bound on the circular chromatic number.
pub fn vertex_independence_ratio(vertices: usize, alpha: usize) -> Option<Fraction> {
    ReducedFraction::new(vertices as u64, alpha as u64)
}
