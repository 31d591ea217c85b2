use super::{validate_proper_coloring, OracleConfig, OracleResult};
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;

/// Exact chromatic number by DSATUR-ordered backtracking.
///
/// The search starts at a greedy clique lower bound and stops at the first
/// colorable count; the DSATUR greedy coloring supplies the upper bound.
pub fn chromatic_number(
    graph: &InterlacingGraph,
    config: &OracleConfig,
) -> Result<OracleResult<u32, Vec<u32>>> {
    config.check(graph)?;
    let v = graph.vertex_count();
    if v == 0 {
        return Ok(OracleResult {
            value: 0,
            witness: Vec::new(),
            explored: 0,
        });
    }
    let lower = greedy_clique(graph).len() as u32;
    let (upper, mut best) = dsatur_greedy(graph);
    let mut explored = 0;
    let mut value = upper;
    for colors in lower..upper {
        let mut state = Dsatur::new(graph, colors);
        let found = state.search();
        explored += state.explored;
        if found {
            value = colors;
            best = state.colors.iter().map(|c| c.expect("complete")).collect();
            break;
        }
    }
    if !validate_proper_coloring(graph, &best) || best.iter().any(|&c| c >= value) {
        return Err(Error::Internal(
            "proper coloring witness failed validation".into(),
        ));
    }
    Ok(OracleResult {
        value,
        witness: best,
        explored,
    })
}

/// A clique grown greedily from each vertex; the largest one found.
fn greedy_clique(graph: &InterlacingGraph) -> Vec<usize> {
    let mut best = Vec::new();
    for start in 0..graph.vertex_count() {
        let mut clique = vec![start];
        let mut open = graph.neighbors(start).clone();
        while let Some(next) = open.ones().max_by_key(|&u| {
            (
                graph.neighbors(u).intersection(&open).count(),
                std::cmp::Reverse(u),
            )
        }) {
            clique.push(next);
            open.intersect_with(graph.neighbors(next));
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    best
}

fn dsatur_greedy(graph: &InterlacingGraph) -> (u32, Vec<u32>) {
    let v = graph.vertex_count();
    let mut state = Dsatur::new(graph, v as u32);
    while let Some(u) = state.select() {
        let c = (0..)
            .find(|&c| state.forbidden[u][c as usize] == 0)
            .unwrap();
        state.assign(u, c);
    }
    let colors: Vec<u32> = state.colors.iter().map(|c| c.unwrap()).collect();
    let used = colors.iter().max().map_or(0, |&m| m + 1);
    (used, colors)
}

struct Dsatur<'a> {
    graph: &'a InterlacingGraph,
    palette: u32,
    colors: Vec<Option<u32>>,
    /// forbidden[u][c] counts colored neighbours of u holding color c
    forbidden: Vec<Vec<u32>>,
    saturation: Vec<u32>,
    used: u32,
    explored: u64,
}

impl<'a> Dsatur<'a> {
    fn new(graph: &'a InterlacingGraph, palette: u32) -> Self {
        let v = graph.vertex_count();
        Self {
            graph,
            palette,
            colors: vec![None; v],
            forbidden: vec![vec![0; palette as usize + 1]; v],
            saturation: vec![0; v],
            used: 0,
            explored: 0,
        }
    }

    /// Uncolored vertex of maximum saturation, then maximum degree, then lowest index.
    fn select(&self) -> Option<usize> {
        (0..self.colors.len())
            .filter(|&u| self.colors[u].is_none())
            .max_by_key(|&u| {
                (
                    self.saturation[u],
                    self.graph.degree(u),
                    std::cmp::Reverse(u),
                )
            })
    }

    fn assign(&mut self, u: usize, c: u32) {
        self.colors[u] = Some(c);
        self.used = self.used.max(c + 1);
        for w in self.graph.neighbors(u).ones() {
            let slot = &mut self.forbidden[w][c as usize];
            if *slot == 0 {
                self.saturation[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unassign(&mut self, u: usize, c: u32, used_before: u32) {
        self.colors[u] = None;
        self.used = used_before;
        for w in self.graph.neighbors(u).ones() {
            let slot = &mut self.forbidden[w][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn search(&mut self) -> bool {
        self.explored += 1;
        let Some(u) = self.select() else {
            return true;
        };
        // a color never used before is interchangeable with any other unused one
        let limit = (self.used + 1).min(self.palette);
        for c in 0..limit {
            if self.forbidden[u][c as usize] != 0 {
                continue;
            }
            let before = self.used;
            self.assign(u, c);
            if self.search() {
                return true;
            }
            self.unassign(u, c, before);
        }
        false
    }
}
