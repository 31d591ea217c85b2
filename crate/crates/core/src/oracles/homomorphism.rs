use std::collections::VecDeque;

use super::{validate_homomorphism, OracleConfig, OracleResult, MAX_TARGET_ORDER};
use crate::arith::ReducedFraction;
use crate::clique::CircularCliqueSpec;
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;
use crate::Fraction;

/// Label sets as bitmasks over `Z/order`.
type Domain = u128;

/// The target reached by the sweep and the labels realizing it.
pub type CircularWitness = Option<(CircularCliqueSpec, Vec<u32>)>;

struct HomSearch<'a> {
    graph: &'a InterlacingGraph,
    neighbors: Vec<Vec<usize>>,
    /// compatible[a]: labels at distance >= gap from a
    compatible: Vec<Domain>,
    explored: u64,
}

impl<'a> HomSearch<'a> {
    fn new(graph: &'a InterlacingGraph, target: CircularCliqueSpec) -> Self {
        let compatible = (0..target.order)
            .map(|a| {
                (0..target.order)
                    .filter(|&b| target.adjacent(a, b))
                    .fold(0, |m, b| m | (1u128 << b))
            })
            .collect();
        let neighbors = (0..graph.vertex_count())
            .map(|u| graph.neighbors(u).ones().collect())
            .collect();
        Self {
            graph,
            neighbors,
            compatible,
            explored: 0,
        }
    }

    fn support(&self, domain: Domain) -> Domain {
        let mut out = 0;
        let mut rest = domain;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            out |= self.compatible[b];
            rest &= rest - 1;
        }
        out
    }

    /// AC-3 over the edges, starting from the vertices in `queue`.
    fn propagate(&self, domains: &mut [Domain], mut queue: VecDeque<usize>) -> bool {
        let mut queued = vec![false; domains.len()];
        for &u in &queue {
            queued[u] = true;
        }
        while let Some(w) = queue.pop_front() {
            queued[w] = false;
            let support = self.support(domains[w]);
            for &u in &self.neighbors[w] {
                let narrowed = domains[u] & support;
                if narrowed == 0 {
                    return false;
                }
                if narrowed != domains[u] {
                    domains[u] = narrowed;
                    if !queued[u] {
                        queued[u] = true;
                        queue.push_back(u);
                    }
                }
            }
        }
        true
    }

    fn search(&mut self, domains: &mut Vec<Domain>) -> bool {
        self.explored += 1;
        // smallest undecided domain, lowest index on ties
        let pick = (0..domains.len())
            .filter(|&u| domains[u].count_ones() > 1)
            .min_by_key(|&u| (domains[u].count_ones(), u));
        let Some(u) = pick else {
            return true;
        };
        let mut rest = domains[u];
        while rest != 0 {
            let a = rest.trailing_zeros();
            rest &= rest - 1;
            let mut trial = domains.clone();
            trial[u] = 1u128 << a;
            if self.propagate(&mut trial, VecDeque::from([u])) && self.search(&mut trial) {
                *domains = trial;
                return true;
            }
        }
        false
    }
}

/// Searches for an edge-preserving map into `K_{order/gap}` by backtracking
/// with maintained arc consistency. The first vertex is pinned to label 0,
/// which loses nothing because rotations are automorphisms of the target.
pub fn has_homomorphism(
    graph: &InterlacingGraph,
    target: CircularCliqueSpec,
    config: &OracleConfig,
) -> Result<OracleResult<bool, Option<Vec<u32>>>> {
    config.check(graph)?;
    if target.order == 0 || target.order > MAX_TARGET_ORDER {
        return Err(Error::TargetTooLarge {
            order: target.order,
            bound: MAX_TARGET_ORDER,
        });
    }
    let v = graph.vertex_count();
    let mut search = HomSearch::new(graph, target);
    let full: Domain = if target.order == 128 {
        u128::MAX
    } else {
        (1u128 << target.order) - 1
    };
    let mut domains = vec![full; v];
    let mut found = v == 0;
    if v > 0 {
        domains[0] = 1;
        let all: VecDeque<usize> = (0..v).collect();
        found = search.propagate(&mut domains, all) && search.search(&mut domains);
    }
    let witness = if found {
        let map: Vec<u32> = domains.iter().map(|d| d.trailing_zeros()).collect();
        if !validate_homomorphism(search.graph, target, &map) {
            return Err(Error::Internal(
                "homomorphism witness failed validation".into(),
            ));
        }
        Some(map)
    } else {
        None
    };
    Ok(OracleResult {
        value: found,
        witness,
        explored: search.explored,
    })
}

/// Outcome of the circular chromatic number sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CircularValue {
    /// Every candidate below was refuted and the candidate range covers `p <= |V|`.
    Exact(Fraction),
    /// A homomorphism exists, but candidates with order above the sweep
    /// bound were not examined.
    UpperBound(Fraction),
    Unknown,
}

/// Reduced fractions `p/q >= 2` with `p <= max_order`, in increasing order.
pub fn candidate_ratios(max_order: u32) -> Vec<Fraction> {
    let mut out: Vec<Fraction> = (2..=max_order as u64)
        .flat_map(|p| (1..=p / 2).filter_map(move |q| ReducedFraction::new(p, q)))
        .filter(|f| f.num() <= max_order as u64)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Least `p/q` admitting a homomorphism into `K_{p/q}`, sweeping reduced
/// candidates in increasing order. A graph with vertices but no edges has
/// value 1.
pub fn circular_chromatic_number(
    graph: &InterlacingGraph,
    max_order: u32,
    config: &OracleConfig,
) -> Result<OracleResult<CircularValue, CircularWitness>> {
    config.check(graph)?;
    if max_order > MAX_TARGET_ORDER {
        return Err(Error::TargetTooLarge {
            order: max_order,
            bound: MAX_TARGET_ORDER,
        });
    }
    let v = graph.vertex_count();
    if graph.edge_count() == 0 {
        let value = if v == 0 {
            ReducedFraction::integer(0)
        } else {
            ReducedFraction::integer(1)
        };
        return Ok(OracleResult {
            value: CircularValue::Exact(value),
            witness: Some((CircularCliqueSpec::new(1, 1), vec![0; v])),
            explored: 0,
        });
    }
    let complete = max_order as usize >= v;
    let mut explored = 0;
    for ratio in candidate_ratios(max_order) {
        let target = CircularCliqueSpec::new(ratio.num() as u32, ratio.den() as u32);
        let res = has_homomorphism(graph, target, config)?;
        explored += res.explored;
        if let Some(map) = res.witness {
            let value = if complete {
                CircularValue::Exact(ratio)
            } else {
                CircularValue::UpperBound(ratio)
            };
            return Ok(OracleResult {
                value,
                witness: Some((target, map)),
                explored,
            });
        }
    }
    Ok(OracleResult {
        value: CircularValue::Unknown,
        witness: None,
        explored,
    })
}
