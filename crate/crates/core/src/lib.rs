//! Stable interlacing graphs.
//!
//! Vertices are the `k`-subsets of a circle of `n` labelled points whose
//! consecutive points are at least `r` apart; two vertices are adjacent when
//! their points alternate around the circle. The crate builds these graphs,
//! constructs an explicit circular `n/k`-coloring and an embedded circular
//! clique `K_{n/k}`, and certifies vertex counts, independence numbers,
//! chromatic numbers and circular chromatic numbers with exhaustive
//! searches on small instances.

pub mod arith;
pub mod certify;
pub mod clique;
pub mod coloring;
pub mod compression;
pub mod error;
pub mod export;
pub mod graph;
pub mod oracles;
pub mod polygon;

pub use arith::ReducedFraction;
pub use clique::{verify_circular_clique, CircularCliqueSpec};
pub use coloring::{color, validate_circular, CircularColoring};
pub use error::{Error, Result};
pub use graph::{
    enumerate_stable_polygons, per_point_count, vertex_count_formula, InterlacingGraph,
};
pub use polygon::{Parameters, Polygon, Shape};

/// Exact counts (vertex numbers, binomials).
pub type Count = u128;

/// Rational values such as `n/k` and circular chromatic numbers.
pub type Fraction = ReducedFraction<u64>;
