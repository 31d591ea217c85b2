//! Graph and coloring file formats. Vertex numbering always follows the
//! canonical lexicographic vertex order: DIMACS and DOT use 1-based ids,
//! JSON uses 0-based positions in its `vertices` array.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{CircularColoring, ColoringReport};
use crate::error::{Error, Result};
use crate::graph::InterlacingGraph;
use crate::polygon::{Parameters, Polygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Dot,
    Json,
}

pub fn render(graph: &InterlacingGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dimacs => to_dimacs(graph),
        GraphFormat::Dot => to_dot(graph),
        GraphFormat::Json => to_json(graph),
    }
}

/// `p edge V E` followed by one `e u v` line per edge.
pub fn to_dimacs(graph: &InterlacingGraph) -> String {
    let p = graph.params();
    let mut out = String::new();
    writeln!(
        out,
        "c interlacing graph n={} k={} r={}",
        p.n(),
        p.k(),
        p.r()
    )
    .unwrap();
    writeln!(
        out,
        "p edge {} {}",
        graph.vertex_count(),
        graph.edge_count()
    )
    .unwrap();
    for (u, v) in graph.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn to_dot(graph: &InterlacingGraph) -> String {
    let p = graph.params();
    let mut out = String::new();
    writeln!(out, "graph IG_{}_{}_{} {{", p.n(), p.k(), p.r()).unwrap();
    for (i, v) in graph.vertices().iter().enumerate() {
        writeln!(out, "  {} [label=\"{}\"];", i + 1, v.label()).unwrap();
    }
    for (u, v) in graph.edges() {
        writeln!(out, "  {} -- {};", u + 1, v + 1).unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub vertices: Vec<Vec<u32>>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(graph: &InterlacingGraph) -> Self {
        let p = graph.params();
        Self {
            n: p.n(),
            k: p.k(),
            r: p.r(),
            vertices: graph
                .vertices()
                .iter()
                .map(|v| v.points().to_vec())
                .collect(),
            edges: graph.edges().map(|(u, v)| [u, v]).collect(),
        }
    }

    /// Validates the document against a fresh build of the same parameters.
    pub fn into_graph(self) -> Result<InterlacingGraph> {
        let params = Parameters::new(self.n, self.k, self.r)?;
        let vertices = self
            .vertices
            .into_iter()
            .map(|pts| Polygon::new(self.n, pts))
            .collect::<Result<Vec<_>>>()?;
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        InterlacingGraph::from_parts(&params, vertices, &edges)
    }
}

pub fn to_json(graph: &InterlacingGraph) -> String {
    let mut s =
        serde_json::to_string_pretty(&GraphDocument::from_graph(graph)).expect("serializable");
    s.push('\n');
    s
}

pub fn from_json(text: &str) -> Result<InterlacingGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.into_graph()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredVertex {
    pub vertex: Vec<u32>,
    pub color: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringDocument {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub modulus: u32,
    pub gap: u32,
    pub colors: Vec<ColoredVertex>,
    pub valid: bool,
    /// Violated edges as 0-based vertex index pairs.
    pub violations: Vec<[usize; 2]>,
}

impl ColoringDocument {
    pub fn new(
        graph: &InterlacingGraph,
        coloring: &CircularColoring,
        report: &ColoringReport,
    ) -> Self {
        let p = graph.params();
        Self {
            n: p.n(),
            k: p.k(),
            r: p.r(),
            modulus: coloring.modulus,
            gap: coloring.gap,
            colors: graph
                .vertices()
                .iter()
                .zip(&coloring.colors)
                .map(|(v, &color)| ColoredVertex {
                    vertex: v.points().to_vec(),
                    color,
                })
                .collect(),
            valid: report.valid,
            violations: report.violations.iter().map(|&(u, v)| [u, v]).collect(),
        }
    }
}
