//! Equidistant polygons and the circular clique they span.

use crate::arith::{ceil_div, ReducedFraction};
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;
use crate::polygon::{Parameters, Polygon};
use crate::Fraction;

/// The circular clique `K_{order/gap}`: vertices `Z/order`, edges between
/// residues at cyclic distance at least `gap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircularCliqueSpec {
    pub order: u32,
    pub gap: u32,
}

impl CircularCliqueSpec {
    pub fn new(order: u32, gap: u32) -> Self {
        Self { order, gap }
    }

    pub fn distance(&self, a: u32, b: u32) -> u32 {
        let d = a.abs_diff(b) % self.order;
        d.min(self.order - d)
    }

    pub fn adjacent(&self, a: u32, b: u32) -> bool {
        self.distance(a, b) >= self.gap
    }

    pub fn ratio(&self) -> Fraction {
        ReducedFraction::new(self.order as u64, self.gap as u64).expect("gap is positive")
    }
}

/// `n/k` in lowest terms.
pub fn reduced_ratio(params: &Parameters) -> Fraction {
    ReducedFraction::new(params.n() as u64, params.k() as u64).expect("k is positive")
}

/// `P^j = { j + n, j + ceil(n/k), ..., j + ceil((k-1)n/k) }` reduced into `1..=n`.
pub fn equidistant_polygon(params: &Parameters, j: u64) -> Polygon {
    let (n, k) = (params.n() as u64, params.k() as u64);
    let points = (0..k)
        .map(|i| {
            let offset = if i == 0 { n } else { ceil_div(i * n, k) };
            ((j + offset - 1) % n + 1) as u32
        })
        .collect();
    Polygon::from_points(params.n(), points).expect("equidistant points are distinct")
}

/// The `n'` distinct polygons `P^0, ..., P^{n'-1}`.
pub fn equidistant_family(params: &Parameters) -> Vec<Polygon> {
    let count = reduced_ratio(params).num();
    (0..count).map(|j| equidistant_polygon(params, j)).collect()
}

/// `P^j -> j*k' mod n'`, listed in family order.
pub fn clique_homomorphism_labels(params: &Parameters) -> Vec<(Polygon, u32)> {
    let ratio = reduced_ratio(params);
    let (np, kp) = (ratio.num(), ratio.den());
    equidistant_family(params)
        .into_iter()
        .enumerate()
        .map(|(j, p)| (p, (j as u64 * kp % np) as u32))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueReport {
    pub holds: bool,
    pub ratio: Fraction,
    /// Graph indices of the family, in family order.
    pub members: Vec<usize>,
    pub labels: Vec<u32>,
    /// Family positions `(i, j)` where graph adjacency and clique adjacency disagree.
    pub mismatches: Vec<(usize, usize)>,
}

/// Checks edge-for-edge that the labelling is an isomorphism between the
/// subgraph induced by the equidistant family and `K_{n'/k'}`.
pub fn verify_circular_clique(graph: &InterlacingGraph) -> Result<CliqueReport> {
    let params = graph.params();
    let ratio = reduced_ratio(params);
    let target = CircularCliqueSpec::new(ratio.num() as u32, ratio.den() as u32);
    let labelled = clique_homomorphism_labels(params);

    let members = labelled
        .iter()
        .map(|(p, _)| {
            graph
                .index_of(p)
                .ok_or_else(|| Error::NotAVertex(p.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels: Vec<u32> = labelled.iter().map(|&(_, l)| l).collect();

    let mut distinct = labels.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let bijective = distinct.len() == labels.len() && distinct.iter().all(|&l| l < target.order);

    let mut mismatches = Vec::new();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            if graph.adjacent(members[i], members[j]) != target.adjacent(labels[i], labels[j]) {
                mismatches.push((i, j));
            }
        }
    }
    Ok(CliqueReport {
        holds: bijective && mismatches.is_empty() && members.len() == target.order as usize,
        ratio,
        members,
        labels,
        mismatches,
    })
}
