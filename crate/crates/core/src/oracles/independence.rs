use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{validate_independent_set, OracleConfig, OracleResult};
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;

/// Maximum independent set by branch and bound.
///
/// Independent sets of the graph are cliques of its complement; the search is
/// a max-clique search over the complement whose bound comes from a greedy
/// partition of the candidates into cliques of the original graph (any
/// independent set meets each such clique at most once).
pub fn max_independent_set(
    graph: &InterlacingGraph,
    config: &OracleConfig,
) -> Result<OracleResult<usize, Vec<usize>>> {
    config.check(graph)?;
    let v = graph.vertex_count();
    let mut search = MisSearch {
        graph,
        best: Vec::new(),
        current: Vec::new(),
        explored: 0,
    };
    let mut candidates = FixedBitSet::with_capacity(v);
    candidates.insert_range(..);
    search.expand(candidates);

    let mut witness = search.best;
    witness.sort_unstable();
    if !validate_independent_set(graph, &witness) {
        return Err(Error::Internal(
            "independent set witness failed validation".into(),
        ));
    }
    Ok(OracleResult {
        value: witness.len(),
        witness,
        explored: search.explored,
    })
}

struct MisSearch<'a> {
    graph: &'a InterlacingGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    explored: u64,
}

impl MisSearch<'_> {
    /// Greedy clique partition of `candidates`: returns vertices in order of
    /// non-decreasing class number, with the class count reached so far.
    fn bound_order(&self, candidates: &FixedBitSet) -> (Vec<usize>, Vec<usize>) {
        let mut uncovered = candidates.clone();
        let mut order = Vec::with_capacity(candidates.count_ones(..));
        let mut bounds = Vec::with_capacity(order.capacity());
        let mut class = 0;
        while let Some(start) = uncovered.minimum() {
            class += 1;
            // grow a clique of the interlacing graph
            let mut open = uncovered.clone();
            let mut v = start;
            loop {
                uncovered.set(v, false);
                order.push(v);
                bounds.push(class);
                open.set(v, false);
                open.intersect_with(self.graph.neighbors(v));
                match open.minimum() {
                    Some(next) => v = next,
                    None => break,
                }
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, mut candidates: FixedBitSet) {
        self.explored += 1;
        let (order, bounds) = self.bound_order(&candidates);
        for idx in (0..order.len()).rev() {
            if self.current.len() + bounds[idx] <= self.best.len() {
                return;
            }
            let v = order[idx];
            let mut next = candidates.clone();
            next.difference_with(self.graph.neighbors(v));
            next.set(v, false);
            self.current.push(v);
            if next.is_clear() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            candidates.set(v, false);
        }
    }
}

/// All maximal independent sets (Bron–Kerbosch with pivoting on the
/// complement). Refuses with [`Error::EnumerationLimit`] beyond `limit` sets.
pub fn maximal_independent_sets(graph: &InterlacingGraph, limit: usize) -> Result<Vec<Vec<usize>>> {
    let v = graph.vertex_count();
    let mut all = FixedBitSet::with_capacity(v);
    all.insert_range(..);
    // complement neighbourhoods
    let non_adjacent: Vec<FixedBitSet> = (0..v)
        .map(|u| {
            let mut row = all.clone();
            row.difference_with(graph.neighbors(u));
            row.set(u, false);
            row
        })
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(
        &non_adjacent,
        &mut current,
        all,
        FixedBitSet::with_capacity(v),
        &mut out,
        limit,
    )?;
    Ok(out)
}

fn bron_kerbosch(
    adj: &[FixedBitSet],
    current: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) -> Result<()> {
    if p.is_clear() && x.is_clear() {
        if out.len() >= limit {
            return Err(Error::EnumerationLimit(limit));
        }
        let mut set = current.clone();
        set.sort_unstable();
        out.push(set);
        return Ok(());
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| (adj[u].intersection(&p).count(), std::cmp::Reverse(u)))
        .expect("p or x is non-empty");
    let mut branch = p.clone();
    branch.difference_with(&adj[pivot]);
    for v in branch.ones() {
        let mut np = p.clone();
        np.intersect_with(&adj[v]);
        let mut nx = x.clone();
        nx.intersect_with(&adj[v]);
        current.push(v);
        bron_kerbosch(adj, current, np, nx, out, limit)?;
        current.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

/// Grows an independent set greedily along a random vertex order, stopping
/// at a random target size or when no vertex can be added.
pub fn random_independent_set<R: Rng + ?Sized>(
    graph: &InterlacingGraph,
    rng: &mut R,
) -> Vec<usize> {
    let v = graph.vertex_count();
    if v == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..v).collect();
    order.shuffle(rng);
    let target = rng.gen_range(1..=v);
    let mut blocked = FixedBitSet::with_capacity(v);
    let mut set = Vec::new();
    for u in order {
        if set.len() >= target {
            break;
        }
        if !blocked.contains(u) {
            set.push(u);
            blocked.union_with(graph.neighbors(u));
            blocked.insert(u);
        }
    }
    set.sort_unstable();
    set
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compression::independence_formula;
    use crate::polygon::Parameters;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn graph(n: u32, k: u32, r: u32) -> InterlacingGraph {
        InterlacingGraph::build(&Parameters::new(n, k, r).unwrap())
    }

    /// Exhaustive subset scan for graphs up to 16 vertices.
    fn alpha_by_subsets(g: &InterlacingGraph) -> usize {
        let v = g.vertex_count();
        (0u32..1 << v)
            .filter(|&m| {
                let set: Vec<usize> = (0..v).filter(|&i| m & (1 << i) != 0).collect();
                g.is_independent(&set)
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn examples() {
        let cfg = OracleConfig::default();
        assert_eq!(max_independent_set(&graph(6, 2, 2), &cfg).unwrap().value, 3);
        assert_eq!(max_independent_set(&graph(6, 2, 3), &cfg).unwrap().value, 1);
        assert_eq!(max_independent_set(&graph(8, 3, 2), &cfg).unwrap().value, 6);
    }

    #[test]
    fn matches_subset_scan() {
        for p in Parameters::all_up_to(10) {
            let g = InterlacingGraph::build(&p);
            if g.vertex_count() > 16 {
                continue;
            }
            let res = max_independent_set(&g, &OracleConfig::default()).unwrap();
            assert_eq!(res.value, alpha_by_subsets(&g), "{p}");
            assert_eq!(res.value as u128, independence_formula(&p).unwrap(), "{p}");
        }
    }

    #[test]
    fn maximal_sets_of_hexagon_are_triangulations() {
        // non-crossing diagonal sets of a hexagon: 14 triangulations
        let sets = maximal_independent_sets(&graph(6, 2, 2), 1000).unwrap();
        assert_eq!(sets.len(), 14);
        assert!(sets.iter().all(|s| s.len() == 3));
        assert!(matches!(
            maximal_independent_sets(&graph(6, 2, 2), 5),
            Err(Error::EnumerationLimit(5))
        ));
    }

    #[test]
    fn maximal_sets_are_maximal_and_distinct() {
        let g = graph(8, 3, 2);
        let sets = maximal_independent_sets(&g, 100_000).unwrap();
        let mut sorted = sets.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), sets.len());
        for s in &sets {
            assert!(g.is_independent(s));
            for u in 0..g.vertex_count() {
                if !s.contains(&u) {
                    assert!(s.iter().any(|&w| g.adjacent(u, w)));
                }
            }
        }
    }

    #[test]
    fn random_sets_are_independent_and_reproducible() {
        let g = graph(10, 3, 2);
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| random_independent_set(&g, &mut rng))
                .collect::<Vec<_>>()
        };
        let a = draw(3);
        assert_eq!(a, draw(3));
        assert!(a.iter().all(|s| !s.is_empty() && g.is_independent(s)));
    }
}
