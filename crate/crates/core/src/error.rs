use thiserror::Error;

use crate::polygon::Polygon;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters n={n}, k={k}, r={r}: {reason}")]
    InvalidParameters {
        n: u32,
        k: u32,
        r: u32,
        reason: &'static str,
    },

    #[error("invalid polygon {points:?} on a circle of size {n}: {reason}")]
    InvalidPolygon {
        n: u32,
        points: Vec<u32>,
        reason: &'static str,
    },

    #[error("gaps {gaps:?} do not describe a polygon on a circle of size {n}")]
    InvalidShape { n: u32, gaps: Vec<u32> },

    #[error("empty input")]
    EmptyInput,

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),

    #[error("polygon {0} is not a vertex of the graph")]
    NotAVertex(Polygon),

    #[error("polygons {0} and {1} interlace, so the family is not independent")]
    NotIndependent(Polygon, Polygon),

    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    MissingVertex { expected: usize, got: usize },

    #[error("color {color} of vertex {vertex} is not a residue modulo {modulus}")]
    ColorOutOfRange {
        vertex: usize,
        color: u32,
        modulus: u32,
    },

    #[error("coloring is not a valid circular coloring ({violations} violated edges)")]
    InvalidColoring { violations: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("graph has {vertices} vertices, above the exact-search cap of {cap}")]
    CapExceeded { vertices: usize, cap: usize },

    #[error("target order {order} exceeds the supported bound {bound}")]
    TargetTooLarge { order: u32, bound: u32 },

    #[error("more than {0} maximal independent sets")]
    EnumerationLimit(usize),

    #[error("malformed graph data: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
